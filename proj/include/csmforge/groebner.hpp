#pragma once

// Ideal arithmetic over Poly: Groebner bases (cached per term order), normal forms,
// sum/product/power, elimination-based intersection and saturation, scheme
// equality, Hilbert-series dimension and degree, and affine quotient dimensions.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "csmforge/poly.hpp"

namespace csmforge {

struct GroebnerOptions {
    std::int64_t step_budget = 10'000'000;
};

class Ideal {
public:
    Ideal() = default;
    // Zero generators are dropped; the rest keep their order.
    Ideal(Ring ring, std::vector<Poly> gens, std::string name = "");

    const Ring& ring() const;
    const std::vector<Poly>& gens() const;
    const std::string& name() const;

    bool is_zero_ideal() const { return gens().empty(); }
    bool is_homogeneous() const; // every generator homogeneous (degrees may differ)

    // Reduced Groebner basis, monic, sorted by descending lead.  Cached per order.
    const std::vector<Poly>& groebner_basis(const TermOrder& ord = TermOrder::grevlex(),
                                            const GroebnerOptions& opts = {}) const;

    Ideal renamed(std::string name) const;

private:
    struct Rep;
    std::shared_ptr<Rep> rep_;
    friend Ideal saturate_irrelevant(const Ideal&, const GroebnerOptions&);
};

// Remainder of p on division by the reduced grevlex basis of I.
Poly normal_form(const Poly& p, const Ideal& I, const GroebnerOptions& opts = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k); // k = 0 gives the unit ideal

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

// (a : b^infinity).  b must have a nonzero generator.
Ideal saturate(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

Ideal irrelevant_ideal(const Ring& r); // (x_0, ..., x_n)
Ideal saturate_irrelevant(const Ideal& a, const GroebnerOptions& opts = {}); // cached

bool is_unit_ideal(const Ideal& a, const GroebnerOptions& opts = {});

// Equality of the saturations by the irrelevant ideal (same closed subscheme of P^n).
bool ideal_equal_as_schemes(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

// {projective dimension, degree} of V(I) in P^n via the Hilbert series of R/I.
// Requires homogeneous generators; the empty scheme reports {-1, 0}.
std::pair<int, std::int64_t> dim_and_degree(const Ideal& I, const GroebnerOptions& opts = {});

// Vector-space dimension of R/I for affine-zero-dimensional I; throws
// NotZeroDimensionalError when the staircase is infinite.
std::int64_t quotient_vs_dimension(const Ideal& I, const GroebnerOptions& opts = {});

// Canonical trimming of a generator list: zeros and duplicates go; a list of
// homogeneous generators of one shared degree is replaced by the reduced row
// echelon basis of its span; mixed lists only drop members that divide to zero
// against the others.
std::vector<Poly> interreduce_generators(std::vector<Poly> gens);

// Generator-by-generator transport (Poly::to_ring / Poly::change_field).
Ideal ideal_to_ring(const Ideal& I, const Ring& target);
Ideal ideal_change_field(const Ideal& I, const Ring& target);

} // namespace csmforge
