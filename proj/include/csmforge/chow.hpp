#pragma once

// Rational equivalence classes on P^n: dense vectors over the hyperplane-power
// basis, graded by codimension.  Carries the operations the characteristic-class
// pipeline needs: ring arithmetic truncated at H^n, duality and Adams scalings
// relative to a grading offset, twisting by a line-bundle degree, Chern classes of
// split bundles (with a formal rank), and their inverses.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "csmforge/errors.hpp"
#include "csmforge/field.hpp"

namespace csmforge {

class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(int ambient_dim); // zero class on P^n
    static GradedClass from_coeffs(std::vector<mpq_class> coeffs); // a_0 .. a_n

    int ambient_dim() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& operator[](int codim) const;
    void set(int codim, mpq_class v);
    bool is_zero() const;

    GradedClass operator+(const GradedClass& o) const;
    GradedClass operator-(const GradedClass& o) const;
    GradedClass operator-() const;
    GradedClass scaled(const mpq_class& s) const;

    bool operator==(const GradedClass& o) const { return c_ == o.c_; }
    bool operator!=(const GradedClass& o) const { return !(*this == o); }

    // "2*H - 4*H^2" with explicit coefficients, H^0 omitted, "0" when zero
    std::string str() const;

private:
    std::vector<mpq_class> c_;
};

// Product in the Chow ring truncated past codimension n.  Capping a cohomology
// class against a cycle class is this same product.
GradedClass mul(const GradedClass& a, const GradedClass& b);
inline GradedClass cap(const GradedClass& a, const GradedClass& b) { return mul(a, b); }

// Coefficient of H^n: the degree of the zero-dimensional part.
mpq_class integral(const GradedClass& a);

// The class 1 (resp. a single monomial c * H^codim) on P^n.
GradedClass unit_class(int ambient_dim);
GradedClass h_power(int ambient_dim, int codim, const mpq_class& coeff = 1);

// (1 + lambda*H)^e for any integer e (negative powers are expanded as series).
GradedClass line_power(int ambient_dim, long lambda, long e);

// a_j -> (-1)^{j-off} a_j.  Total for every class.
GradedClass dual(const GradedClass& a, int off);

// a_j -> k^{j-off} a_j.  When |k| != 1 the coefficients below the offset must
// vanish, since k^{j-off} is not an integer there.
GradedClass adams(const GradedClass& a, long k, int off);

// a_j -> a_j * H^j / (1 + lambda*H)^{j-off}, truncated: the twist of a class of
// cycles by a line bundle of degree lambda, graded relative to codimension off.
GradedClass tensor_line(const GradedClass& a, long lambda, int off);

// Direct sum of line bundles O(d_i) padded by trivial summands up to formal_rank.
struct SplitBundle {
    std::vector<long> degrees;
    int formal_rank = 0; // >= degrees.size(); trivial summands fill the gap

    int rank() const { return formal_rank; }
};

// c(E) = prod (1 + d_i H) on P^n.
GradedClass chern(const SplitBundle& e, int ambient_dim);

// c((E twisted) (x) O(lambda)):  prod (1 + (s d_i + lambda) H) * (1 + lambda H)^{formal_rank - #degrees}
// with s = -1 when dualize is set.  The trailing factor is the twist of the
// formal trivial summands; it makes the result agree with the tensor identity
// sum_j c_j(E') (1+lambda H)^{rank-j} at every formal rank.
GradedClass chern_twisted(const SplitBundle& e, long lambda, bool dualize, int ambient_dim);

// Multiplicative inverse of a class with a_0 != 0, truncated at H^n.
GradedClass inverse_chern(const GradedClass& a);

// c(T P^n) = (1 + H)^{n+1} truncated.
GradedClass ambient_tangent_chern(int ambient_dim);

} // namespace csmforge
