#include "csmforge/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "csmforge/groebner_core.hpp"

namespace csmforge {

struct Ideal::Rep {
    Ring ring;
    std::vector<Poly> gens;
    std::string name;
    mutable std::mutex mu;
    mutable std::map<TermOrder, std::vector<Poly>> gb;
    mutable std::shared_ptr<const Ideal> sat_irr;
};

Ideal::Ideal(Ring ring, std::vector<Poly> gens, std::string name) {
    if (!ring.valid()) throw InputError("ideal over an empty ring");
    auto rep = std::make_shared<Rep>();
    rep->ring = ring;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        ring.require_compatible(g.ring());
        rep->gens.push_back(std::move(g));
    }
    rep->name = std::move(name);
    rep_ = std::move(rep);
}

const Ring& Ideal::ring() const { return rep_->ring; }
const std::vector<Poly>& Ideal::gens() const { return rep_->gens; }
const std::string& Ideal::name() const { return rep_->name; }

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens())
        if (!g.is_homogeneous()) return false;
    return true;
}

Ideal Ideal::renamed(std::string name) const { return Ideal(ring(), gens(), std::move(name)); }

namespace {

template <class F>
std::vector<core::GBElem<F>> as_divisors(const F& fld, const std::vector<Poly>& polys) {
    std::vector<core::GBElem<F>> basis;
    basis.reserve(polys.size());
    for (const auto& p : polys) {
        core::GBElem<F> e;
        e.p = p.terms<F>();
        if (e.p.t.empty()) continue;
        if (!fld.is_one(e.p.t[0].c)) e.p = core::scale(fld, e.p, fld.inv(e.p.t[0].c));
        e.lm = e.p.t[0].m;
        basis.push_back(std::move(e));
    }
    return basis;
}

std::vector<Monomial> lead_monomials(const std::vector<Poly>& gb) {
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) {
        const Monomial* m = g.lead_monomial();
        if (m != nullptr) leads.push_back(*m);
    }
    return leads;
}

bool contains_var(const Poly& p, int var) {
    bool found = false;
    with_field(p.ring().field(), [&](auto fld) {
        using F = decltype(fld);
        for (const auto& t : p.terms<F>().t)
            if (t.m[var] > 0) {
                found = true;
                return;
            }
    });
    return found;
}

// GB of the lifted generators in an elimination order for the last variable,
// restricted to the elements free of it, mapped back to base.
std::vector<Poly> eliminate_last(const Ring& ext, const Ring& base, std::vector<Poly> gens,
                                 const GroebnerOptions& opts) {
    std::vector<std::uint8_t> blocks(static_cast<size_t>(ext.nvars()), 1);
    if (!blocks.empty()) blocks.back() = 0;
    TermOrder elim = TermOrder::elimination(blocks);
    Ideal lifted(ext, std::move(gens));
    const auto& gb = lifted.groebner_basis(elim, opts);
    std::vector<Poly> kept;
    for (const auto& g : gb)
        if (!contains_var(g, ext.nvars() - 1)) kept.push_back(g.to_ring(base));
    return kept;
}

Ideal saturate_single(const Ideal& a, const Poly& f, const GroebnerOptions& opts) {
    const Ring& base = a.ring();
    Ring ext = base.extended({fresh_var_name(base, "w")}, base.order());
    std::vector<Poly> gens;
    for (const auto& g : a.gens()) gens.push_back(g.to_ring(ext));
    Poly w = Poly::variable(ext, ext.nvars() - 1);
    gens.push_back(Poly::one(ext) - w * f.to_ring(ext));
    return Ideal(base, eliminate_last(ext, base, std::move(gens), opts));
}

} // namespace

const std::vector<Poly>& Ideal::groebner_basis(const TermOrder& ord,
                                               const GroebnerOptions& opts) const {
    if (ord.kind == TermOrder::Kind::block &&
        static_cast<int>(ord.block_of.size()) != ring().nvars())
        throw InputError("block order does not cover the ring variables");
    std::lock_guard<std::mutex> lock(rep_->mu);
    auto it = rep_->gb.find(ord);
    if (it != rep_->gb.end()) return it->second;

    std::vector<Poly> result = with_field(ring().field(), [&](auto fld) {
        using F = decltype(fld);
        core::StepBudget budget{opts.step_budget, 0};
        core::GroebnerEngine<F> eng(fld, ord, budget);
        std::vector<core::TermsT<F>> in;
        in.reserve(gens().size());
        for (const auto& g : gens()) in.push_back(g.terms<F>());
        std::vector<core::TermsT<F>> out = eng.reduced_basis(std::move(in));
        std::vector<Poly> polys;
        polys.reserve(out.size());
        for (auto& t : out) {
            core::resort(TermOrder::grevlex(), t);
            polys.push_back(Poly::from_terms<F>(ring(), std::move(t)));
        }
        return polys;
    });
    return rep_->gb.emplace(ord, std::move(result)).first->second;
}

Poly normal_form(const Poly& p, const Ideal& I, const GroebnerOptions& opts) {
    I.ring().require_compatible(p.ring());
    const auto& gb = I.groebner_basis(TermOrder::grevlex(), opts);
    if (gb.empty() || p.is_zero()) return p;
    return with_field(p.ring().field(), [&](auto fld) {
        using F = decltype(fld);
        auto basis = as_divisors(fld, gb);
        core::StepBudget budget{opts.step_budget, 0};
        TermOrder ord = TermOrder::grevlex();
        core::GroebnerEngine<F> eng(fld, ord, budget);
        core::TermsT<F> r = eng.normal_form(p.terms<F>(), basis);
        return Poly::from_terms<F>(p.ring(), std::move(r));
    });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    a.ring().require_compatible(b.ring());
    std::vector<Poly> gens = a.gens();
    for (const auto& g : b.gens()) {
        bool dup = false;
        for (const auto& h : gens)
            if (h == g) {
                dup = true;
                break;
            }
        if (!dup) gens.push_back(g);
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    a.ring().require_compatible(b.ring());
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    std::vector<Poly> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& p : a.gens())
        for (const auto& q : b.gens()) gens.push_back(p * q);
    return Ideal(a.ring(), interreduce_generators(std::move(gens)));
}

Ideal ideal_power(const Ideal& a, int k) {
    if (k < 0) throw InputError("negative ideal power");
    if (k == 0) return Ideal(a.ring(), {Poly::one(a.ring())});
    Ideal acc = a;
    for (int i = 1; i < k; ++i) acc = ideal_product(acc, a);
    return acc;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
    a.ring().require_compatible(b.ring());
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    const Ring& base = a.ring();
    Ring ext = base.extended({fresh_var_name(base, "w")}, base.order());
    Poly w = Poly::variable(ext, ext.nvars() - 1);
    Poly one_minus_w = Poly::one(ext) - w;
    std::vector<Poly> gens;
    for (const auto& g : a.gens()) gens.push_back(w * g.to_ring(ext));
    for (const auto& g : b.gens()) gens.push_back(one_minus_w * g.to_ring(ext));
    return Ideal(base, eliminate_last(ext, base, std::move(gens), opts));
}

Ideal saturate(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
    a.ring().require_compatible(b.ring());
    if (b.is_zero_ideal()) throw InputError("saturation by the zero ideal");
    if (a.is_zero_ideal()) return a;
    bool first = true;
    Ideal acc;
    for (const auto& f : b.gens()) {
        Ideal part = saturate_single(a, f, opts);
        acc = first ? part : ideal_intersect(acc, part, opts);
        first = false;
    }
    return acc;
}

Ideal irrelevant_ideal(const Ring& r) {
    std::vector<Poly> vars;
    vars.reserve(static_cast<size_t>(r.nvars()));
    for (int i = 0; i < r.nvars(); ++i) vars.push_back(Poly::variable(r, i));
    return Ideal(r, std::move(vars));
}

Ideal saturate_irrelevant(const Ideal& a, const GroebnerOptions& opts) {
    {
        std::lock_guard<std::mutex> lock(a.rep_->mu);
        if (a.rep_->sat_irr) return *a.rep_->sat_irr;
    }
    Ideal sat = a.is_zero_ideal() ? a : saturate(a, irrelevant_ideal(a.ring()), opts);
    sat = sat.renamed(a.name());
    std::lock_guard<std::mutex> lock(a.rep_->mu);
    if (!a.rep_->sat_irr) a.rep_->sat_irr = std::make_shared<const Ideal>(sat);
    return *a.rep_->sat_irr;
}

bool is_unit_ideal(const Ideal& a, const GroebnerOptions& opts) {
    const auto& gb = a.groebner_basis(TermOrder::grevlex(), opts);
    return gb.size() == 1 && gb[0].degree() == 0;
}

bool ideal_equal_as_schemes(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
    a.ring().require_compatible(b.ring());
    const auto& ga = saturate_irrelevant(a, opts).groebner_basis(TermOrder::grevlex(), opts);
    const auto& gb = saturate_irrelevant(b, opts).groebner_basis(TermOrder::grevlex(), opts);
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

std::pair<int, std::int64_t> dim_and_degree(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous())
        throw InputError("dim_and_degree requires homogeneous generators");
    const auto& gb = I.groebner_basis(TermOrder::grevlex(), opts);
    if (gb.size() == 1 && gb[0].degree() == 0) return {-1, 0};

    core::HilbertNumerator hn(I.ring().nvars());
    std::vector<mpz_class> num = hn.run(lead_monomials(gb));

    auto value_at_one = [](const std::vector<mpz_class>& p) {
        mpz_class s = 0;
        for (const auto& c : p) s += c;
        return s;
    };
    int e = 0;
    mpz_class val = value_at_one(num);
    while (val == 0) {
        // divide by (1 - t): quotient coefficients are the prefix sums
        std::vector<mpz_class> q(num.size() - 1);
        mpz_class acc = 0;
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        num = std::move(q);
        ++e;
        val = value_at_one(num);
    }
    int dim_quotient = I.ring().nvars() - e;
    if (dim_quotient <= 0) return {-1, 0};
    if (!val.fits_slong_p()) throw ResourceError("degree does not fit a machine integer");
    return {dim_quotient - 1, static_cast<std::int64_t>(val.get_si())};
}

namespace core {

std::int64_t staircase_count(const std::vector<Monomial>& minimal_gens, int nvars) {
    for (const auto& m : minimal_gens)
        if (m.is_unit()) return 0;

    std::array<std::uint32_t, kMaxVars> caps{};
    for (int v = 0; v < nvars; ++v) {
        std::uint32_t cap = 0;
        for (const auto& m : minimal_gens) {
            if (m[v] == 0) continue;
            bool pure = true;
            for (int u = 0; u < nvars; ++u)
                if (u != v && m[u] > 0) {
                    pure = false;
                    break;
                }
            if (pure) cap = m[v];
        }
        if (cap == 0)
            throw NotZeroDimensionalError("no pure power bound for a variable");
        caps[static_cast<size_t>(v)] = cap;
    }

    std::vector<int> max_var(minimal_gens.size(), -1);
    for (size_t i = 0; i < minimal_gens.size(); ++i)
        for (int v = 0; v < nvars; ++v)
            if (minimal_gens[i][v] > 0) max_var[i] = v;

    std::int64_t count = 0;
    std::array<std::uint32_t, kMaxVars> choice{};
    std::vector<size_t> roots(minimal_gens.size());
    for (size_t i = 0; i < roots.size(); ++i) roots[i] = i;

    // DFS over exponent choices below the caps; a generator stays active while it
    // still divides every completion of the current prefix.
    auto dfs = [&](auto&& self, int v, const std::vector<size_t>& active) -> void {
        if (v == nvars) {
            if (++count > 100'000'000)
                throw ResourceError("staircase too large to count");
            return;
        }
        for (std::uint32_t ev = 0; ev < caps[static_cast<size_t>(v)]; ++ev) {
            choice[static_cast<size_t>(v)] = ev;
            std::vector<size_t> next;
            bool complete = false;
            for (size_t idx : active) {
                if (minimal_gens[idx][v] > ev) continue;
                if (max_var[idx] <= v) {
                    complete = true; // divides every completion, now and for larger ev
                    break;
                }
                next.push_back(idx);
            }
            if (complete) break;
            self(self, v + 1, next);
        }
    };
    dfs(dfs, 0, roots);
    return count;
}

} // namespace core

std::int64_t quotient_vs_dimension(const Ideal& I, const GroebnerOptions& opts) {
    const auto& gb = I.groebner_basis(TermOrder::grevlex(), opts);
    if (gb.size() == 1 && gb[0].degree() == 0) return 0;
    if (gb.empty()) throw NotZeroDimensionalError("zero ideal has an infinite staircase");
    std::vector<Monomial> leads = core::minimalize_monomials(lead_monomials(gb));
    int nvars = I.ring().nvars();
    for (int v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const auto& m : leads) {
            if (m[v] == 0) continue;
            bool only_v = true;
            for (int u = 0; u < nvars; ++u)
                if (u != v && m[u] > 0) {
                    only_v = false;
                    break;
                }
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw NotZeroDimensionalError("variable " + I.ring().var_name(v) +
                                          " has no pure power in the lead ideal");
    }
    return core::staircase_count(leads, nvars);
}

std::vector<Poly> interreduce_generators(std::vector<Poly> gens) {
    std::vector<Poly> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& h : kept)
            if (h == g) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(g));
    }
    if (kept.size() <= 1) return kept;

    bool uniform = true;
    int deg = -2;
    for (const auto& g : kept) {
        auto h = g.homogeneity();
        if (!h.homogeneous) {
            uniform = false;
            break;
        }
        if (deg == -2) {
            deg = *h.degree;
        } else if (deg != *h.degree) {
            uniform = false;
            break;
        }
    }
    const Ring& ring = kept[0].ring();
    for (const auto& g : kept) ring.require_compatible(g.ring());

    if (uniform) {
        return with_field(ring.field(), [&](auto fld) {
            using F = decltype(fld);
            std::vector<core::TermsT<F>> rows;
            rows.reserve(kept.size());
            for (const auto& g : kept) rows.push_back(g.terms<F>());
            auto rref = core::rref_rows(fld, TermOrder::grevlex(), rows);
            std::vector<Poly> out;
            out.reserve(rref.size());
            for (auto& r : rref) out.push_back(Poly::from_terms<F>(ring, std::move(r)));
            return out;
        });
    }

    // mixed degrees: drop generators that divide to zero against the others
    std::vector<bool> dropped(kept.size(), false);
    return with_field(ring.field(), [&](auto fld) {
        using F = decltype(fld);
        TermOrder ord = TermOrder::grevlex();
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i && !dropped[j]) others.push_back(kept[j]);
            if (others.empty()) break;
            auto basis = as_divisors(fld, others);
            core::StepBudget budget{10'000'000, 0};
            core::GroebnerEngine<F> eng(fld, ord, budget);
            if (eng.normal_form(kept[i].terms<F>(), basis).t.empty()) dropped[i] = true;
        }
        std::vector<Poly> out;
        for (size_t i = 0; i < kept.size(); ++i)
            if (!dropped[i]) out.push_back(kept[i]);
        return out;
    });
}

Ideal ideal_to_ring(const Ideal& I, const Ring& target) {
    std::vector<Poly> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.to_ring(target));
    return Ideal(target, std::move(gens), I.name());
}

Ideal ideal_change_field(const Ideal& I, const Ring& target) {
    std::vector<Poly> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.change_field(target));
    return Ideal(target, std::move(gens), I.name());
}

} // namespace csmforge
