#pragma once

#include "csmforge/chow.hpp"
#include "csmforge/fscheme.hpp"
#include "csmforge/groebner.hpp"
#include "csmforge/segre.hpp"

#include <string>
#include <vector>

namespace csmforge {

// An ordered tuple of hypersurfaces F_1..F_m in P^n cutting out a codimension-m
// subscheme.  The distinguished entry plays the pivot role in the almost-smooth
// formulas: the remaining m-1 hypersurfaces form the intermediate smooth ambient Z.
struct CompleteIntersection {
    std::vector<Poly> hypersurfaces;
    int distinguished_index = 0;
    bool almost_smooth_claimed = false;

    const Ring& ring() const { return hypersurfaces.front().ring(); }
    int m() const { return static_cast<int>(hypersurfaces.size()); }
    int n() const { return ring().nvars() - 1; }
    const Poly& distinguished() const {
        return hypersurfaces[static_cast<size_t>(distinguished_index)];
    }
};

// Validates hypersurface count, homogeneity, positive degrees, and that the
// common zero scheme really has codimension m.  distinguished < 0 selects the
// last hypersurface.
CompleteIntersection make_ci(std::vector<Poly> hypersurfaces, int distinguished = -1,
                             bool almost_smooth_claimed = false,
                             const GroebnerOptions& opts = {});

// The ideal generated by the defining hypersurfaces (no saturation).
Ideal ci_ideal(const CompleteIntersection& ci);

// I_X plus the m x m minors of the Jacobian of F_1..F_m, saturated by the
// irrelevant ideal.  Cut out inside X; empty (unit ideal) exactly when X is smooth.
Ideal singular_scheme(const CompleteIntersection& ci, const GroebnerOptions& opts = {});

// c(TP^n) capped with the Segre class: the Chern-Fulton class of the subscheme.
GradedClass chern_fulton(const Ideal& I, const SegreOptions& opts = {});

// CSM class through the one-parameter Segre family of X u J^k evaluated at k = -1
// (the blowup formula realized by interpolation).  Smooth X collapses to the
// Chern-Fulton class.
GradedClass csm_blowup(const CompleteIntersection& ci, const SegreOptions& opts = {});

// Independent CSM oracle for almost smooth complete intersections: Chern-Fulton
// plus the twisted correction term built from the singular scheme's Segre class.
GradedClass csm_fmc_oracle(const CompleteIntersection& ci, const SegreOptions& opts = {});

// Second independent oracle with no almost-smoothness assumption: inclusion-
// exclusion of the hypersurface oracle over all nonempty sub-collections, with
// unions realized as product hypersurfaces.  Guarded against m > 4.
GradedClass csm_incl_excl(const CompleteIntersection& ci, const SegreOptions& opts = {});

// Milnor class (csm - fulton) and Euler characteristic (integral of csm).
GradedClass milnor_class(const CompleteIntersection& ci, const SegreOptions& opts = {});
mpq_class euler_characteristic(const CompleteIntersection& ci, const SegreOptions& opts = {});

struct Provenance {
    std::string method;
    std::uint64_t seed = 0;
    std::uint32_t prime = 0;
    int trials = 0;
};

struct ClassReport {
    GradedClass csm, fulton, milnor;
    mpq_class euler;
    Provenance provenance;
};

// One-stop record; refuses (AnomalyError) when the Euler characteristic fails to
// be an integer — a symptom of a bad random run that slipped every other gate.
ClassReport class_report(const CompleteIntersection& ci, const SegreOptions& opts = {});

struct VerifyResult {
    bool match = false;
    GradedClass lhs, rhs, diff; // diff = lhs - rhs
};

struct LemmaResult {
    long k = 0;
    bool match = false;
    GradedClass lhs, rhs;
};

// Main theorem: blowup-family CSM against the almost-smooth oracle.
VerifyResult verify_theorem(const CompleteIntersection& ci, const SegreOptions& opts = {});

// Residual-intersection lemma at each requested k > 0: Segre classes of X u J^k
// inside the intermediate smooth ambient Z against the closed-form right side.
std::vector<LemmaResult> verify_lemma(const CompleteIntersection& ci,
                                      const std::vector<long>& ks,
                                      const SegreOptions& opts = {});

// Non-reducedness insensitivity: csm of the hypersurface F^k equals csm of F.
VerifyResult verify_remark(const Poly& f, int k, const SegreOptions& opts = {});

// Conjectural comparison on arbitrary complete intersections: blowup-family CSM
// against inclusion-exclusion.  Disagreement is reported, never asserted away.
VerifyResult verify_conjecture(const CompleteIntersection& ci, const SegreOptions& opts = {});

// Sum of local Milnor numbers of an isolated-singularity hypersurface, computed
// in the affine chart x_chart = 1 as dim of the Jacobian algebra minus its part
// away from the curve.  Every singular point must avoid the chart hyperplane.
long milnor_sum_isolated(const Poly& f, int chart_var, const GroebnerOptions& opts = {});

} // namespace csmforge
