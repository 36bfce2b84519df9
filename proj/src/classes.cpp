#include "csmforge/classes.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace csmforge {

namespace {

int degree_of(const Poly& f) {
    auto h = f.homogeneity();
    if (!h.homogeneous || *h.degree <= 0)
        throw InputError("hypersurface must be homogeneous of positive degree");
    return *h.degree;
}

SplitBundle ci_bundle(const CompleteIntersection& ci, bool drop_distinguished) {
    SplitBundle e;
    for (int i = 0; i < ci.m(); ++i) {
        if (drop_distinguished && i == ci.distinguished_index) continue;
        e.degrees.push_back(degree_of(ci.hypersurfaces[static_cast<size_t>(i)]));
    }
    e.formal_rank = static_cast<int>(e.degrees.size());
    return e;
}

// csm of a single hypersurface through the almost-smooth oracle; shared by
// csm_fmc_oracle (m = 1 case is itself) and inclusion-exclusion.
// Ideal of the intermediate complete intersection cut out by the non-distinguished
// hypersurfaces; nullopt for a single hypersurface (the ambient space itself).
std::optional<Ideal> intermediate_ideal(const CompleteIntersection& ci) {
    if (ci.m() < 2) return std::nullopt;
    std::vector<Poly> others;
    for (int i = 0; i < ci.m(); ++i)
        if (i != ci.distinguished_index)
            others.push_back(ci.hypersurfaces[static_cast<size_t>(i)]);
    return Ideal(ci.ring(), std::move(others), "Z");
}

GradedClass fmc_for(const CompleteIntersection& ci, const SegreOptions& opts) {
    const int n = ci.n();
    const int dm = degree_of(ci.distinguished());

    GradedClass fulton = chern_fulton(ci_ideal(ci), opts);
    Ideal j = singular_scheme(ci, opts.groebner);
    if (is_unit_ideal(j, opts.groebner)) return fulton; // smooth: correction vanishes

    SplitBundle e = ci_bundle(ci, false);
    GradedClass bundle_factor =
        mul(chern_twisted(e, dm, true, n), inverse_chern(chern(e, n)));
    GradedClass twisted = tensor_line(dual(segre_class(j, opts), 0), dm, 0);
    GradedClass corr = cap(bundle_factor, twisted);
    if (ci.m() % 2 == 0) corr = corr.scaled(mpq_class(-1));
    return fulton + cap(ambient_tangent_chern(n), corr);
}

} // namespace

CompleteIntersection make_ci(std::vector<Poly> hypersurfaces, int distinguished,
                             bool almost_smooth_claimed, const GroebnerOptions& opts) {
    if (hypersurfaces.empty()) throw InputError("a complete intersection needs at least one hypersurface");
    const Ring& r = hypersurfaces.front().ring();
    for (const auto& f : hypersurfaces) {
        r.require_compatible(f.ring());
        degree_of(f);
    }
    const int m = static_cast<int>(hypersurfaces.size());
    const int n = r.nvars() - 1;
    if (m > n) throw InputError("more hypersurfaces than the ambient dimension allows");
    if (distinguished < 0) distinguished = m - 1;
    if (distinguished >= m) throw InputError("distinguished index out of range");

    int dim = dim_and_degree(Ideal(r, hypersurfaces), opts).first;
    if (dim != n - m)
        throw InputError("hypersurfaces do not form a complete intersection: expected dimension " +
                         std::to_string(n - m) + ", got " + std::to_string(dim));

    CompleteIntersection ci;
    ci.hypersurfaces = std::move(hypersurfaces);
    ci.distinguished_index = distinguished;
    ci.almost_smooth_claimed = almost_smooth_claimed;
    return ci;
}

Ideal ci_ideal(const CompleteIntersection& ci) {
    return Ideal(ci.ring(), ci.hypersurfaces);
}

Ideal singular_scheme(const CompleteIntersection& ci, const GroebnerOptions& opts) {
    std::vector<Poly> gens = ci.hypersurfaces;
    for (auto& mi : minors(jacobian_matrix(ci.hypersurfaces), ci.m()))
        gens.push_back(std::move(mi));
    Ideal raw(ci.ring(), std::move(gens), "J");
    return saturate_irrelevant(raw, opts);
}

GradedClass chern_fulton(const Ideal& I, const SegreOptions& opts) {
    int n = I.ring().nvars() - 1;
    return cap(ambient_tangent_chern(n), segre_class(I, opts));
}

GradedClass csm_blowup(const CompleteIntersection& ci, const SegreOptions& opts) {
    Ideal ix = ci_ideal(ci);
    Ideal j = singular_scheme(ci, opts.groebner);
    if (is_unit_ideal(j, opts.groebner)) return chern_fulton(ix, opts);

    // the residual powers of J thicken X inside the intermediate complete
    // intersection, so the factor products are formed there, not in the ambient ring
    FScheme u{{{ix, 1}, {j, -1}}};
    return cap(ambient_tangent_chern(ci.n()), fscheme_segre(u, opts, intermediate_ideal(ci)));
}

GradedClass csm_fmc_oracle(const CompleteIntersection& ci, const SegreOptions& opts) {
    return fmc_for(ci, opts);
}

GradedClass csm_incl_excl(const CompleteIntersection& ci, const SegreOptions& opts) {
    const int m = ci.m();
    if (m > 4)
        throw InputError("inclusion-exclusion over " + std::to_string((1 << m) - 1) +
                         " products is out of scope (m > 4)");
    GradedClass total(ci.n());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Poly prod = Poly::one(ci.ring());
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) prod = prod * ci.hypersurfaces[static_cast<size_t>(i)];
        CompleteIntersection hyp;
        hyp.hypersurfaces = {std::move(prod)};
        hyp.distinguished_index = 0;
        GradedClass term = fmc_for(hyp, opts);
        bool add = (static_cast<unsigned>(__builtin_popcount(mask)) % 2) == 1;
        total = add ? total + term : total - term;
    }
    return total;
}

GradedClass milnor_class(const CompleteIntersection& ci, const SegreOptions& opts) {
    return csm_blowup(ci, opts) - chern_fulton(ci_ideal(ci), opts);
}

mpq_class euler_characteristic(const CompleteIntersection& ci, const SegreOptions& opts) {
    return integral(csm_blowup(ci, opts));
}

ClassReport class_report(const CompleteIntersection& ci, const SegreOptions& opts) {
    ClassReport r;
    r.csm = csm_blowup(ci, opts);
    r.fulton = chern_fulton(ci_ideal(ci), opts);
    r.milnor = r.csm - r.fulton;
    r.euler = integral(r.csm);
    if (r.euler.get_den() != 1)
        throw AnomalyError("euler characteristic came out non-integral: " + r.euler.get_str());
    r.provenance = {"blowup-family", opts.seed, opts.prime, opts.trials};
    return r;
}

VerifyResult verify_theorem(const CompleteIntersection& ci, const SegreOptions& opts) {
    if (!ci.almost_smooth_claimed)
        throw InputError("verify_theorem needs an input declared almost smooth");
    VerifyResult v;
    v.lhs = csm_blowup(ci, opts);
    v.rhs = csm_fmc_oracle(ci, opts);
    v.diff = v.lhs - v.rhs;
    v.match = v.diff.is_zero();
    return v;
}

std::vector<LemmaResult> verify_lemma(const CompleteIntersection& ci,
                                      const std::vector<long>& ks,
                                      const SegreOptions& opts) {
    if (!ci.almost_smooth_claimed)
        throw InputError("verify_lemma needs an input declared almost smooth");
    const int n = ci.n();
    const int m = ci.m();
    const int dm = degree_of(ci.distinguished());

    Ideal ix = ci_ideal(ci);
    Ideal j = singular_scheme(ci, opts.groebner);
    std::optional<Ideal> within = intermediate_ideal(ci);
    GradedClass nz = chern(ci_bundle(ci, true), n); // c(N_Z M), Z = the other m-1

    GradedClass sx_in_z = cap(nz, segre_class(ix, opts));
    GradedClass sj_in_z = cap(nz, segre_class(j, opts));
    GradedClass line_inv = inverse_chern(line_power(n, dm, 1));

    std::vector<LemmaResult> out;
    for (long k : ks) {
        if (k <= 0) throw InputError("lemma holds for positive k only");
        LemmaResult r;
        r.k = k;
        Ideal thick = ideal_product(ix, ideal_power(j, static_cast<int>(k)));
        if (within) thick = ideal_sum(*within, thick); // thicken inside Z, not in the ambient ring
        r.lhs = cap(nz, segre_class(thick, opts));
        r.rhs = sx_in_z +
                cap(line_inv, tensor_line(adams(sj_in_z, k, m - 1), dm, m - 1));
        r.match = r.lhs == r.rhs;
        out.push_back(std::move(r));
    }
    return out;
}

VerifyResult verify_remark(const Poly& f, int k, const SegreOptions& opts) {
    if (k < 2) throw InputError("non-reduced power needs k >= 2");
    CompleteIntersection base = make_ci({f}, -1, true, opts.groebner);
    Ideal j = singular_scheme(base, opts.groebner);
    if (ideal_equal_as_schemes(j, ci_ideal(base), opts.groebner))
        throw InputError("hypersurface is its own singular scheme; remark needs a reduced input");

    CompleteIntersection power = make_ci({f.pow(static_cast<unsigned>(k))}, -1, true, opts.groebner);
    VerifyResult v;
    v.lhs = csm_blowup(power, opts);
    v.rhs = csm_blowup(base, opts);
    v.diff = v.lhs - v.rhs;
    v.match = v.diff.is_zero();
    return v;
}

VerifyResult verify_conjecture(const CompleteIntersection& ci, const SegreOptions& opts) {
    VerifyResult v;
    v.lhs = csm_blowup(ci, opts);
    v.rhs = csm_incl_excl(ci, opts);
    v.diff = v.lhs - v.rhs;
    v.match = v.diff.is_zero();
    return v;
}

long milnor_sum_isolated(const Poly& f, int chart_var, const GroebnerOptions& opts) {
    const Ring& r = f.ring();
    if (chart_var < 0 || chart_var >= r.nvars()) throw InputError("chart variable out of range");

    std::vector<std::string> names;
    for (int v = 0; v < r.nvars(); ++v)
        if (v != chart_var) names.push_back(r.var_name(v));
    Ring aff = Ring::make(r.field(), names);

    std::vector<Poly> images;
    int next = 0;
    for (int v = 0; v < r.nvars(); ++v)
        images.push_back(v == chart_var ? Poly::one(aff) : Poly::variable(aff, next++));

    Poly f_aff = f.compose(images);
    std::vector<Poly> partials;
    for (int v = 0; v < aff.nvars(); ++v) {
        Poly d = f_aff.derivative(v);
        if (!d.is_zero()) partials.push_back(std::move(d));
    }
    Ideal jac(aff, std::move(partials));

    long total = quotient_vs_dimension(jac, opts); // all critical points, with multiplicity
    Ideal off_curve = saturate(jac, Ideal(aff, {f_aff}), opts); // critical points with f != 0
    return total - quotient_vs_dimension(off_curve, opts);
}

} // namespace csmforge
