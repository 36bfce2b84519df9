#pragma once

#include "csmforge/chow.hpp"
#include "csmforge/groebner.hpp"
#include "csmforge/segre.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace csmforge {

// A formal product of subschemes with integer exponents (negative allowed).  The
// group operation is concatenation followed by fs_normalize, which merges factors
// whose ideals cut out the same subscheme.
struct FSchemeFactor {
    Ideal ideal;
    int exponent = 0;
};

struct FScheme {
    std::vector<FSchemeFactor> factors; // normalized: exponents nonzero, schemes distinct
};

// Merges scheme-equal ideals by summing exponents and drops zero exponents.
// Cancellation is by scheme equality only; no attempt is made to factor ideals.
FScheme fs_normalize(std::vector<FSchemeFactor> factors, const GroebnerOptions& opts = {});

// The one-parameter family k |-> s(V(I1 * I2^k), P^n), sampled at small positive k
// and interpolated per codimension.  The codimension-j coefficient is a polynomial
// in k of degree at most j; it is fitted through k = 1..j+1 and then required to
// reproduce every remaining sample exactly.
struct SegreFamily {
    int n = 0;                                   // ambient projective dimension
    std::map<int, GradedClass> samples;          // k >= 1 -> s(V(I1 * I2^k))
    std::vector<std::vector<mpq_class>> fitted;  // [j] -> coefficients in k, degree <= j
    bool holdout_ok = false;
};

// Samples k = 1 .. j_max+2 and fits codimensions 0 .. min(j_max, n).  On a failed
// holdout the whole family is resampled once with fresh randomness; a second failure
// throws HoldoutMismatchError carrying all samples.  Also gates the fit at k = 0
// against the directly computed class of V(s1).
//
// within, when given, is the ideal of a fixed subscheme containing V(s1): the
// sampled ideal becomes within + s1*s2^k, so the product of the factors is taken
// as ideal sheaves on V(within) instead of in the ambient coordinate ring.  The
// two readings differ once within is a proper ideal: the ambient product acquires
// components outside V(within) that the sheaf product does not see.
SegreFamily segre_family(const Ideal& s1, const Ideal& s2, int j_max,
                         const SegreOptions& opts = {},
                         const std::optional<Ideal>& within = {});

// Per-codimension polynomial evaluation; k may be any integer (negative included).
GradedClass evaluate_family(const SegreFamily& f, long k);

// Segre class of an f-scheme: positive and negative parts are multiplied out into
// single ideals S1, S2 and the family for (S1, S2) is evaluated at k = -1.  A purely
// positive f-scheme reduces to the ordinary Segre class; a purely negative one to
// its dual at offset 0.  within carries the same meaning as in segre_family and
// also applies to the pure reductions.
GradedClass fscheme_segre(const FScheme& u, const SegreOptions& opts = {},
                          const std::optional<Ideal>& within = {});

} // namespace csmforge
