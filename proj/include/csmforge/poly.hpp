#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csmforge/poly_core.hpp"
#include "csmforge/ring.hpp"

namespace csmforge {

// Dispatch a callable on the field model matching a FieldSpec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::rationals) return fn(QQ{});
    return fn(Fp{fs.characteristic});
}

// Multivariate polynomial over a Ring.  Terms are kept canonical: strictly
// descending grevlex, no zero coefficients.  Exact coefficients only.
class Poly {
public:
    using Variant = std::variant<core::TermsT<QQ>, core::TermsT<Fp>>;

    Poly() = default;

    static Poly zero(const Ring& r);
    static Poly one(const Ring& r);
    static Poly constant(const Ring& r, const mpq_class& c);
    static Poly variable(const Ring& r, int idx);
    static Poly from_monomial(const Ring& r, const Monomial& m);

    // Parses "+ - * ^" expressions with integer literals and named variables.
    // Throws InputError with a character offset on malformed input.
    static Poly parse(const std::string& text, const Ring& r);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    std::size_t term_count() const;
    int degree() const; // -1 for the zero polynomial

    struct Homogeneity {
        bool homogeneous = true;
        std::optional<int> degree; // empty for the zero polynomial
    };
    Homogeneity homogeneity() const;
    bool is_homogeneous() const { return homogeneity().homogeneous; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly pow(unsigned k) const;

    Poly derivative(int var) const;
    Poly derivative(const std::string& var) const;

    // Substitute images[i] (all in one common target ring) for variable i.
    Poly compose(const std::vector<Poly>& images) const;

    // Reinterpret in another ring over the same field, matching variables by name.
    // A variable missing from the target may only occur with exponent zero.
    Poly to_ring(const Ring& target) const;

    // Map integer/rational coefficients into a prime-field ring with the same variables.
    Poly change_field(const Ring& target) const;

    std::uint32_t eval_fp(const std::vector<std::uint32_t>& point) const;
    mpq_class eval_qq(const std::vector<mpq_class>& point) const;

    std::string str() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // engine access
    template <class F>
    const core::TermsT<F>& terms() const {
        return std::get<core::TermsT<F>>(terms_);
    }
    template <class F>
    static Poly from_terms(const Ring& r, core::TermsT<F> t) {
        Poly p;
        p.ring_ = r;
        p.terms_ = std::move(t);
        return p;
    }
    const Monomial* lead_monomial() const; // grevlex lead; nullptr when zero

private:
    Ring ring_;
    Variant terms_;
};

// Matrix of first-order partials: rows follow the input list, columns the ring
// variables.  Inputs must be homogeneous and share one ring.
std::vector<std::vector<Poly>> jacobian_matrix(const std::vector<Poly>& polys);

// All m x m minors (row-major over row choices, then column choices; duplicates
// retained).  Requires m >= 1 and m <= min(rows, cols).
std::vector<Poly> minors(const std::vector<std::vector<Poly>>& mat, int m);

} // namespace csmforge
