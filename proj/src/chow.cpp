#include "csmforge/chow.hpp"

#include <cstdlib>

namespace csmforge {

namespace {

void require_same_ambient(const GradedClass& a, const GradedClass& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("graded classes live on different ambient spaces (P^" +
                         std::to_string(a.ambient_dim()) + " vs P^" +
                         std::to_string(b.ambient_dim()) + ")");
}

mpq_class int_pow(long base, unsigned e) {
    mpq_class r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

GradedClass::GradedClass(int ambient_dim) {
    if (ambient_dim < 0) throw InputError("negative ambient dimension");
    c_.assign(static_cast<size_t>(ambient_dim) + 1, mpq_class(0));
}

GradedClass GradedClass::from_coeffs(std::vector<mpq_class> coeffs) {
    if (coeffs.empty()) throw InputError("graded class needs at least the H^0 slot");
    GradedClass g;
    g.c_ = std::move(coeffs);
    return g;
}

const mpq_class& GradedClass::operator[](int codim) const {
    if (codim < 0 || codim > ambient_dim())
        throw InputError("codimension " + std::to_string(codim) + " out of range on P^" +
                         std::to_string(ambient_dim()));
    return c_[static_cast<size_t>(codim)];
}

void GradedClass::set(int codim, mpq_class v) {
    if (codim < 0 || codim > ambient_dim())
        throw InputError("codimension " + std::to_string(codim) + " out of range on P^" +
                         std::to_string(ambient_dim()));
    c_[static_cast<size_t>(codim)] = std::move(v);
}

bool GradedClass::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

GradedClass GradedClass::operator+(const GradedClass& o) const {
    require_same_ambient(*this, o);
    GradedClass r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

GradedClass GradedClass::operator-(const GradedClass& o) const {
    require_same_ambient(*this, o);
    GradedClass r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

GradedClass GradedClass::operator-() const {
    GradedClass r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

GradedClass GradedClass::scaled(const mpq_class& s) const {
    GradedClass r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::string GradedClass::str() const {
    std::string out;
    for (int j = 0; j <= ambient_dim(); ++j) {
        const mpq_class& v = c_[static_cast<size_t>(j)];
        if (v == 0) continue;
        mpq_class mag = v < 0 ? mpq_class(-v) : v;
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        if (j == 0) {
            out += mag.get_str();
        } else {
            out += mag.get_str() + "*H";
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

GradedClass mul(const GradedClass& a, const GradedClass& b) {
    require_same_ambient(a, b);
    int n = a.ambient_dim();
    GradedClass r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            r.set(i + j, r[i + j] + a[i] * b[j]);
        }
    }
    return r;
}

mpq_class integral(const GradedClass& a) { return a[a.ambient_dim()]; }

GradedClass unit_class(int ambient_dim) {
    GradedClass g(ambient_dim);
    g.set(0, 1);
    return g;
}

GradedClass h_power(int ambient_dim, int codim, const mpq_class& coeff) {
    GradedClass g(ambient_dim);
    g.set(codim, coeff);
    return g;
}

GradedClass line_power(int ambient_dim, long lambda, long e) {
    // binomial series (1 + lambda H)^e, valid for negative e as well
    GradedClass g(ambient_dim);
    mpq_class coeff = 1;
    g.set(0, coeff);
    for (int j = 1; j <= ambient_dim; ++j) {
        coeff *= mpq_class(e - (j - 1));
        coeff /= j;
        coeff *= lambda;
        g.set(j, coeff);
    }
    return g;
}

GradedClass dual(const GradedClass& a, int off) {
    GradedClass r = a;
    for (int j = 0; j <= a.ambient_dim(); ++j) {
        if ((j - off) % 2 != 0) r.set(j, -a[j]);
    }
    return r;
}

GradedClass adams(const GradedClass& a, long k, int off) {
    int n = a.ambient_dim();
    GradedClass r(n);
    for (int j = 0; j <= n; ++j) {
        if (a[j] == 0) continue;
        if (j >= off) {
            r.set(j, a[j] * int_pow(k, static_cast<unsigned>(j - off)));
        } else if (k == 1 || k == -1) {
            // k^{j-off} = k^{off-j} for |k| = 1
            r.set(j, a[j] * int_pow(k, static_cast<unsigned>(off - j)));
        } else {
            throw InputError("adams scaling by " + std::to_string(k) +
                             " needs vanishing coefficients below codimension " +
                             std::to_string(off));
        }
    }
    return r;
}

GradedClass tensor_line(const GradedClass& a, long lambda, int off) {
    int n = a.ambient_dim();
    GradedClass r(n);
    for (int j = 0; j <= n; ++j) {
        if (a[j] == 0) continue;
        GradedClass factor = line_power(n, lambda, static_cast<long>(off) - j);
        for (int m = 0; j + m <= n; ++m)
            r.set(j + m, r[j + m] + a[j] * factor[m]);
    }
    return r;
}

GradedClass chern(const SplitBundle& e, int ambient_dim) {
    return chern_twisted(e, 0, false, ambient_dim);
}

GradedClass chern_twisted(const SplitBundle& e, long lambda, bool dualize, int ambient_dim) {
    if (e.formal_rank < static_cast<int>(e.degrees.size()))
        throw InputError("split bundle formal rank below the number of listed degrees");
    GradedClass acc = unit_class(ambient_dim);
    for (long d : e.degrees) {
        long root = (dualize ? -d : d) + lambda;
        acc = mul(acc, line_power(ambient_dim, root, 1));
    }
    long pad = e.formal_rank - static_cast<long>(e.degrees.size());
    if (pad > 0 && lambda != 0) acc = mul(acc, line_power(ambient_dim, lambda, pad));
    return acc;
}

GradedClass inverse_chern(const GradedClass& a) {
    if (a[0] == 0) throw InputError("inverse of a class with vanishing H^0 part");
    int n = a.ambient_dim();
    GradedClass r(n);
    mpq_class lead = 1 / a[0];
    r.set(0, lead);
    for (int j = 1; j <= n; ++j) {
        mpq_class s = 0;
        for (int i = 1; i <= j; ++i) s += a[i] * r[j - i];
        r.set(j, -s * lead);
    }
    return r;
}

GradedClass ambient_tangent_chern(int ambient_dim) {
    return line_power(ambient_dim, 1, static_cast<long>(ambient_dim) + 1);
}

} // namespace csmforge
