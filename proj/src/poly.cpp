#include "csmforge/poly.hpp"

#include <functional>
#include <sstream>

namespace csmforge {

namespace {

const TermOrder& canonical_order() {
    static const TermOrder ord = TermOrder::grevlex();
    return ord;
}

template <class F>
core::TermsT<F> empty_terms() {
    return core::TermsT<F>{};
}

} // namespace

Poly Poly::zero(const Ring& r) {
    return with_field(r.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(r, empty_terms<F>());
    });
}

Poly Poly::one(const Ring& r) { return constant(r, mpq_class(1)); }

Poly Poly::constant(const Ring& r, const mpq_class& c) {
    return with_field(r.field(), [&](auto fld) {
        using F = decltype(fld);
        core::TermsT<F> t;
        auto e = fld.from_mpq(c);
        if (!fld.is_zero(e)) t.t.push_back({Monomial::unit(r.nvars()), e});
        return from_terms<F>(r, std::move(t));
    });
}

Poly Poly::variable(const Ring& r, int idx) {
    if (idx < 0 || idx >= r.nvars()) throw InputError("variable index out of range");
    return from_monomial(r, Monomial::var(r.nvars(), idx));
}

Poly Poly::from_monomial(const Ring& r, const Monomial& m) {
    return with_field(r.field(), [&](auto fld) {
        using F = decltype(fld);
        core::TermsT<F> t;
        t.t.push_back({m, fld.one()});
        return from_terms<F>(r, std::move(t));
    });
}

bool Poly::is_zero() const {
    return std::visit([](const auto& t) { return t.t.empty(); }, terms_);
}

std::size_t Poly::term_count() const {
    return std::visit([](const auto& t) { return t.t.size(); }, terms_);
}

int Poly::degree() const {
    return std::visit([](const auto& t) { return core::total_degree(t); }, terms_);
}

Poly::Homogeneity Poly::homogeneity() const {
    Homogeneity h;
    std::visit(
        [&](const auto& t) {
            if (t.t.empty()) return; // zero: homogeneous, no degree
            h.homogeneous = core::is_homogeneous(t);
            if (h.homogeneous) h.degree = static_cast<int>(t.t[0].m.deg);
        },
        terms_);
    return h;
}

const Monomial* Poly::lead_monomial() const {
    return std::visit(
        [](const auto& t) -> const Monomial* { return t.t.empty() ? nullptr : &t.t[0].m; },
        terms_);
}

Poly Poly::operator+(const Poly& o) const {
    ring_.require_compatible(o.ring_);
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(ring_, core::add(fld, canonical_order(), terms<F>(), o.terms<F>()));
    });
}

Poly Poly::operator-(const Poly& o) const {
    ring_.require_compatible(o.ring_);
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(ring_, core::sub(fld, canonical_order(), terms<F>(), o.terms<F>()));
    });
}

Poly Poly::operator*(const Poly& o) const {
    ring_.require_compatible(o.ring_);
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(ring_, core::mul(fld, canonical_order(), terms<F>(), o.terms<F>()));
    });
}

Poly Poly::operator-() const {
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(ring_, core::neg(fld, terms<F>()));
    });
}

Poly Poly::pow(unsigned k) const {
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(ring_,
                             core::pow(fld, canonical_order(), terms<F>(), k, ring_.nvars()));
    });
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= ring_.nvars()) throw InputError("derivative: variable out of range");
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return from_terms<F>(ring_, core::derivative(fld, terms<F>(), var));
    });
}

Poly Poly::derivative(const std::string& var) const {
    int idx = ring_.var_index(var);
    if (idx < 0) throw InputError("derivative: unknown variable '" + var + "'");
    return derivative(idx);
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != ring_.nvars())
        throw InputError("compose: need one image per variable");
    if (images.empty()) throw InputError("compose: empty image list");
    const Ring& target = images[0].ring();
    for (const auto& im : images) target.require_compatible(im.ring());
    if (!(target.field() == ring_.field()))
        throw InputError("compose: field mismatch");
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        std::vector<core::TermsT<F>> imgs;
        imgs.reserve(images.size());
        for (const auto& im : images) imgs.push_back(im.terms<F>());
        return from_terms<F>(target, core::compose(fld, canonical_order(), terms<F>(), imgs,
                                                   target.nvars()));
    });
}

Poly Poly::to_ring(const Ring& target) const {
    if (!(target.field() == ring_.field())) throw InputError("to_ring: field mismatch");
    std::vector<int> map(static_cast<size_t>(ring_.nvars()), -1);
    for (int i = 0; i < ring_.nvars(); ++i) map[static_cast<size_t>(i)] = target.var_index(ring_.var_name(i));
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        core::TermsT<F> out;
        for (const auto& tm : terms<F>().t) {
            Monomial m = Monomial::unit(target.nvars());
            for (int i = 0; i < ring_.nvars(); ++i) {
                std::uint32_t e = tm.m[i];
                if (e == 0) continue;
                if (map[static_cast<size_t>(i)] < 0)
                    throw InputError("to_ring: variable '" + ring_.var_name(i) +
                                     "' not present in target ring");
                m.set(map[static_cast<size_t>(i)], e);
            }
            out.t.push_back({m, tm.c});
        }
        core::normalize(fld, canonical_order(), out);
        return from_terms<F>(target, std::move(out));
    });
}

Poly Poly::change_field(const Ring& target) const {
    if (target.vars() != ring_.vars())
        throw InputError("change_field: variable mismatch");
    if (ring_.field().kind != FieldSpec::Kind::rationals ||
        target.field().kind != FieldSpec::Kind::prime_field)
        throw InputError("change_field: only QQ -> GF(p) supported");
    Fp fld(target.field().characteristic);
    core::TermsT<Fp> out;
    for (const auto& tm : terms<QQ>().t) {
        auto c = fld.from_mpq(tm.c);
        if (!fld.is_zero(c)) out.t.push_back({tm.m, c});
    }
    return from_terms<Fp>(target, std::move(out));
}

std::uint32_t Poly::eval_fp(const std::vector<std::uint32_t>& point) const {
    if (ring_.field().kind != FieldSpec::Kind::prime_field)
        throw InputError("eval_fp: ring is not a prime field");
    if (static_cast<int>(point.size()) != ring_.nvars())
        throw InputError("eval_fp: wrong point size");
    Fp fld(ring_.field().characteristic);
    return core::eval(fld, terms<Fp>(), point);
}

mpq_class Poly::eval_qq(const std::vector<mpq_class>& point) const {
    if (ring_.field().kind != FieldSpec::Kind::rationals)
        throw InputError("eval_qq: ring is not the rationals");
    if (static_cast<int>(point.size()) != ring_.nvars())
        throw InputError("eval_qq: wrong point size");
    QQ fld;
    return core::eval(fld, terms<QQ>(), point);
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_.compatible(o.ring_)) return false;
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        const auto& a = terms<F>().t;
        const auto& b = o.terms<F>().t;
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].m != b[i].m) return false;
            if (fld.is_zero(fld.sub(a[i].c, b[i].c)) == false) return false;
        }
        return true;
    });
}

namespace {

template <class F>
std::string coeff_magnitude_str(const F& fld, const typename F::Elem& c, bool& negative) {
    if constexpr (F::is_rationals) {
        negative = sgn(c) < 0;
        mpq_class a = negative ? mpq_class(-c) : c;
        return a.get_str();
    } else {
        negative = false;
        return fld.str(c);
    }
}

template <class F>
std::string terms_to_string(const F& fld, const core::TermsT<F>& p,
                            const std::vector<std::string>& vars) {
    if (p.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : p.t) {
        bool neg = false;
        std::string mag = coeff_magnitude_str(fld, tm.c, neg);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string monos;
        for (size_t i = 0; i < vars.size(); ++i) {
            std::uint32_t e = tm.m[static_cast<int>(i)];
            if (e == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars[i];
            if (e > 1) monos += "^" + std::to_string(e);
        }
        if (monos.empty()) {
            os << mag;
        } else if (mag == "1") {
            os << monos;
        } else {
            os << mag << "*" << monos;
        }
    }
    return os.str();
}

} // namespace

std::string Poly::str() const {
    return with_field(ring_.field(), [&](auto fld) {
        using F = decltype(fld);
        return terms_to_string(fld, terms<F>(), ring_.vars());
    });
}

std::vector<std::vector<Poly>> jacobian_matrix(const std::vector<Poly>& polys) {
    if (polys.empty()) throw InputError("jacobian_matrix: empty input");
    const Ring& r = polys[0].ring();
    for (const auto& p : polys) {
        r.require_compatible(p.ring());
        if (!p.is_homogeneous())
            throw InputError("jacobian_matrix: inputs must be homogeneous");
    }
    std::vector<std::vector<Poly>> mat;
    mat.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Poly> row;
        row.reserve(static_cast<size_t>(r.nvars()));
        for (int v = 0; v < r.nvars(); ++v) row.push_back(p.derivative(v));
        mat.push_back(std::move(row));
    }
    return mat;
}

namespace {

Poly det_recursive(const std::vector<std::vector<Poly>>& mat, std::vector<int> rows,
                   std::vector<int> cols) {
    const Ring& r = mat[0][0].ring();
    if (rows.size() == 1) return mat[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    Poly acc = Poly::zero(r);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        const Poly& pivot = mat[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[j])];
        if (pivot.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Poly term = pivot * det_recursive(mat, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void enumerate_subsets(int n, int k, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit, int start) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        enumerate_subsets(n, k, cur, emit, i + 1);
        cur.pop_back();
    }
}

} // namespace

std::vector<Poly> minors(const std::vector<std::vector<Poly>>& mat, int m) {
    if (mat.empty() || mat[0].empty()) throw InputError("minors: empty matrix");
    int rows = static_cast<int>(mat.size());
    int cols = static_cast<int>(mat[0].size());
    for (const auto& row : mat)
        if (static_cast<int>(row.size()) != cols)
            throw InputError("minors: ragged matrix");
    if (m < 1 || m > rows || m > cols)
        throw InputError("minors: size out of range");
    std::vector<Poly> out;
    std::vector<int> row_sel;
    enumerate_subsets(rows, m, row_sel,
                      [&](const std::vector<int>& rsel) {
                          std::vector<int> col_sel;
                          enumerate_subsets(cols, m, col_sel,
                                            [&](const std::vector<int>& csel) {
                                                out.push_back(det_recursive(mat, rsel, csel));
                                            },
                                            0);
                      },
                      0);
    return out;
}

} // namespace csmforge
