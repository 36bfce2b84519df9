#pragma once

// Segre classes of subschemes of P^n pushed forward to the ambient Chow ring,
// computed from the projective degrees of the rational map given by a
// degree-equalized generating set.  Randomized over GF(p) with independent
// repetitions that must agree; deterministic for a fixed master seed.

#include <cstdint>
#include <vector>

#include "csmforge/chow.hpp"
#include "csmforge/groebner.hpp"
#include "csmforge/prng.hpp"

namespace csmforge {

struct SegreOptions {
    std::uint64_t seed = kDefaultSeed;
    int trials = 2;              // independent runs that must agree
    std::uint32_t prime = 65521; // field used when the input ring is the rationals
    GroebnerOptions groebner;
};

// Generators rescaled to one common degree by padding low-degree members with
// pure variable powers (same subscheme; verified whenever padding happened).
std::vector<Poly> equalize_generators(const Ideal& I, const GroebnerOptions& opts = {});

// Projective degrees (g_0, ..., g_n) of the map P^n -> P^{m-1} by the equalized
// generators; g_0 = 1.  Requires a nonzero homogeneous ideal.
std::vector<std::int64_t> projective_degrees(const Ideal& I, const SegreOptions& opts = {});

// Segre class s(X, P^n) of the subscheme cut out by I, as a class on P^n.
// Depends only on the subscheme: saturation-equal ideals give equal output.
GradedClass segre_class(const Ideal& I, const SegreOptions& opts = {});

} // namespace csmforge
