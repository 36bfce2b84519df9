#include "csmforge/segre.hpp"

#include <algorithm>
#include <string>

namespace csmforge {

namespace {

// ---- degree equalization --------------------------------------------------

int common_degree(const std::vector<Poly>& gens) {
    int d = 0;
    for (const auto& g : gens) {
        auto h = g.homogeneity();
        if (!h.homogeneous)
            throw InputError("projective computation on an inhomogeneous generator");
        d = std::max(d, *h.degree);
    }
    return d;
}

// ---- linear-section substitution -------------------------------------------

// Affine substitution eliminating rank(rows) variables: rows * x = rhs is solved
// for the pivot variables, which are then expressed in the remaining ones.
struct LinearChart {
    std::vector<int> kept;                         // surviving variable indices
    std::vector<std::vector<std::uint32_t>> expr;  // per original var: coeffs on kept vars
    std::vector<std::uint32_t> cnst;               // per original var: constant term
    bool ok = false;
};

LinearChart solve_linear_sections(const Fp& fld, int nvars,
                                  std::vector<std::vector<std::uint32_t>> rows,
                                  std::vector<std::uint32_t> rhs) {
    const size_t m = rows.size();
    LinearChart out;
    std::vector<int> pivot_col(m, -1);
    size_t r = 0;
    for (int c = 0; c < nvars && r < m; ++c) {
        size_t sel = r;
        while (sel < m && rows[sel][static_cast<size_t>(c)] == 0) ++sel;
        if (sel == m) continue;
        std::swap(rows[r], rows[sel]);
        std::swap(rhs[r], rhs[sel]);
        std::uint32_t inv = fld.inv(rows[r][static_cast<size_t>(c)]);
        for (int k = c; k < nvars; ++k)
            rows[r][static_cast<size_t>(k)] = fld.mul(rows[r][static_cast<size_t>(k)], inv);
        rhs[r] = fld.mul(rhs[r], inv);
        for (size_t o = 0; o < m; ++o) {
            if (o == r) continue;
            std::uint32_t f = rows[o][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int k = c; k < nvars; ++k)
                rows[o][static_cast<size_t>(k)] =
                    fld.sub(rows[o][static_cast<size_t>(k)], fld.mul(f, rows[r][static_cast<size_t>(k)]));
            rhs[o] = fld.sub(rhs[o], fld.mul(f, rhs[r]));
        }
        pivot_col[r] = c;
        ++r;
    }
    if (r < m) return out; // degenerate draw; caller resamples

    std::vector<bool> is_pivot(static_cast<size_t>(nvars), false);
    for (size_t i = 0; i < m; ++i) is_pivot[static_cast<size_t>(pivot_col[i])] = true;
    for (int v = 0; v < nvars; ++v)
        if (!is_pivot[static_cast<size_t>(v)]) out.kept.push_back(v);

    out.expr.assign(static_cast<size_t>(nvars), {});
    out.cnst.assign(static_cast<size_t>(nvars), 0);
    for (int v = 0; v < nvars; ++v) {
        auto& e = out.expr[static_cast<size_t>(v)];
        e.assign(out.kept.size(), 0);
        if (!is_pivot[static_cast<size_t>(v)]) {
            for (size_t k = 0; k < out.kept.size(); ++k)
                if (out.kept[k] == v) e[k] = fld.one();
            continue;
        }
        size_t row = 0;
        while (pivot_col[row] != v) ++row;
        // x_v = rhs - sum over kept columns
        out.cnst[static_cast<size_t>(v)] = rhs[row];
        for (size_t k = 0; k < out.kept.size(); ++k)
            e[k] = fld.neg(rows[row][static_cast<size_t>(out.kept[k])]);
    }
    out.ok = true;
    return out;
}

Poly chart_image(const Ring& target, const LinearChart& chart, int var) {
    // affine-linear expression of the original variable in the chart ring
    const auto& e = chart.expr[static_cast<size_t>(var)];
    core::TermsT<Fp> terms;
    Fp fld(target.field().characteristic);
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        terms.t.push_back({Monomial::var(target.nvars(), static_cast<int>(k)), e[k]});
    }
    if (chart.cnst[static_cast<size_t>(var)] != 0)
        terms.t.push_back({Monomial::unit(target.nvars()), chart.cnst[static_cast<size_t>(var)]});
    core::resort(TermOrder::grevlex(), terms);
    return Poly::from_terms<Fp>(target, std::move(terms));
}

Poly random_combination(const Ring& r, const std::vector<Poly>& gens, const Fp& fld,
                        RngStream& rng) {
    Poly acc = Poly::zero(r);
    for (const auto& g : gens) {
        std::uint32_t c = rng.uniform(fld.p);
        if (c == 0) continue;
        acc = acc + Poly::constant(r, mpq_class(static_cast<unsigned long>(c))) * g;
    }
    return acc;
}

// One projective degree g_i for a fixed random draw.  Throws
// NotZeroDimensionalError on degenerate geometry (caller retries).
std::int64_t degree_once(const std::vector<Poly>& gens, int i, RngStream rng,
                         const GroebnerOptions& gopts) {
    const Ring& ring = gens[0].ring();
    const int nv = ring.nvars(); // n + 1 homogeneous coordinates
    Fp fld(ring.field().characteristic);

    // n - i cutting hyperplanes plus the chart form lambda = 1
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> rhs;
    for (int s = 0; s < nv - 1 - i; ++s) {
        std::vector<std::uint32_t> row(static_cast<size_t>(nv));
        for (auto& v : row) v = rng.uniform(fld.p);
        rows.push_back(std::move(row));
        rhs.push_back(0);
    }
    {
        std::vector<std::uint32_t> chart(static_cast<size_t>(nv));
        for (auto& v : chart) v = rng.uniform(fld.p);
        rows.push_back(std::move(chart));
        rhs.push_back(1);
    }
    LinearChart chart = solve_linear_sections(fld, nv, std::move(rows), std::move(rhs));
    if (!chart.ok) throw NotZeroDimensionalError("degenerate linear sections");

    // chart ring: kept coordinates plus the Rabinowitsch variable
    std::vector<std::string> names;
    for (int v : chart.kept) names.push_back(ring.var_name(v));
    names.push_back(fresh_var_name(ring, "t"));
    Ring small = Ring::make(ring.field(), names);

    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) images.push_back(chart_image(small, chart, v));

    std::vector<Poly> system;
    for (int k = 0; k < i; ++k) {
        Poly combo = random_combination(ring, gens, fld, rng);
        if (combo.is_zero()) throw NotZeroDimensionalError("zero combination drawn");
        system.push_back(combo.compose(images));
    }
    Poly excl = random_combination(ring, gens, fld, rng).compose(images);
    if (excl.is_zero()) throw NotZeroDimensionalError("zero exclusion combination drawn");
    Poly t = Poly::variable(small, small.nvars() - 1);
    system.push_back(Poly::one(small) - t * excl);

    Ideal zero_dim(small, std::move(system));
    return quotient_vs_dimension(zero_dim, gopts);
}

std::vector<std::int64_t> degrees_one_trial(const std::vector<Poly>& gens, int n,
                                            RngStream trial_stream,
                                            const GroebnerOptions& gopts) {
    std::vector<std::int64_t> g(static_cast<size_t>(n) + 1, 0);
    g[0] = 1;
    for (int i = 1; i <= n; ++i) {
        RngStream gi = trial_stream.derive("g").derive(static_cast<std::uint64_t>(i));
        std::int64_t value = -1;
        for (int attempt = 0;; ++attempt) {
            try {
                value = degree_once(gens, i, gi.derive(static_cast<std::uint64_t>(attempt)), gopts);
                break;
            } catch (const NotZeroDimensionalError&) {
                if (attempt >= 4) throw;
            }
        }
        g[static_cast<size_t>(i)] = value;
    }
    return g;
}

// ---- shared preparation -----------------------------------------------------

struct SegrePrep {
    Ring work_ring;          // GF(p) ring all randomized work happens in
    std::vector<Poly> gens;  // equalized generators over work_ring
    int n = 0;               // ambient projective dimension
    int degree = 0;          // common generator degree
    int dim = -2;            // projective dimension of V(I) (mod p), -1 when empty
};

SegrePrep prepare(const Ideal& I, const SegreOptions& opts) {
    if (I.is_zero_ideal()) throw InputError("segre class of the zero ideal");
    SegrePrep prep;
    prep.n = I.ring().nvars() - 1;

    std::vector<Poly> eq = equalize_generators(I, opts.groebner);
    prep.degree = common_degree(eq);

    if (I.ring().field().kind == FieldSpec::Kind::rationals) {
        prep.work_ring = I.ring().with_field(FieldSpec::gf(opts.prime));
        for (const auto& g : eq) prep.gens.push_back(g.change_field(prep.work_ring));
    } else {
        prep.work_ring = I.ring();
        prep.gens = std::move(eq);
    }

    prep.dim = dim_and_degree(Ideal(prep.work_ring, prep.gens), opts.groebner).first;
    return prep;
}

std::vector<std::int64_t> agreed_degrees(const SegrePrep& prep, const SegreOptions& opts) {
    int trials = std::max(opts.trials, 1);
    RngStream base(opts.seed, "projective-degrees");
    std::vector<std::vector<std::int64_t>> runs;
    for (int t = 0; t < trials; ++t)
        runs.push_back(degrees_one_trial(prep.gens, prep.n,
                                         base.derive(static_cast<std::uint64_t>(t)),
                                         opts.groebner));
    bool all_equal = true;
    for (const auto& r : runs) all_equal = all_equal && r == runs[0];
    if (all_equal) return runs[0];

    // tie-break with one extra independent run; accept any majority value
    runs.push_back(degrees_one_trial(prep.gens, prep.n,
                                     base.derive(static_cast<std::uint64_t>(trials)),
                                     opts.groebner));
    for (size_t a = 0; a < runs.size(); ++a)
        for (size_t b = a + 1; b < runs.size(); ++b)
            if (runs[a] == runs[b]) return runs[a];

    std::string detail = "projective degree runs disagree:";
    for (const auto& r : runs) {
        detail += " (";
        for (size_t i = 0; i < r.size(); ++i)
            detail += (i ? "," : "") + std::to_string(r[i]);
        detail += ")";
    }
    throw RandomnessError(detail);
}

} // namespace

std::vector<Poly> equalize_generators(const Ideal& I, const GroebnerOptions& opts) {
    const Ring& r = I.ring();
    std::vector<Poly> gens = I.gens();
    if (gens.empty()) return gens;
    int d = common_degree(gens);

    bool changed = false;
    std::vector<Poly> out;
    for (const auto& g : gens) {
        int e = *g.homogeneity().degree;
        if (e == d) {
            out.push_back(g);
            continue;
        }
        changed = true;
        for (int v = 0; v < r.nvars(); ++v)
            out.push_back(g * Poly::variable(r, v).pow(static_cast<unsigned>(d - e)));
    }
    out = interreduce_generators(std::move(out));
    if (changed && !ideal_equal_as_schemes(I, Ideal(r, out), opts))
        throw AnomalyError("degree equalization changed the subscheme");
    return out;
}

std::vector<std::int64_t> projective_degrees(const Ideal& I, const SegreOptions& opts) {
    return agreed_degrees(prepare(I, opts), opts);
}

GradedClass segre_class(const Ideal& I, const SegreOptions& opts) {
    SegrePrep prep = prepare(I, opts);
    if (prep.dim < 0) return GradedClass(prep.n); // empty subscheme

    std::vector<std::int64_t> g = agreed_degrees(prep, opts);

    GradedClass proj(prep.n);
    for (int j = 0; j <= prep.n; ++j) proj.set(j, mpq_class(static_cast<long>(g[static_cast<size_t>(j)])));

    GradedClass shadow = tensor_line(proj, prep.degree, 0);
    GradedClass line = line_power(prep.n, prep.degree, 1); // c(O(dH))
    GradedClass s = unit_class(prep.n) - mul(inverse_chern(line), shadow);

    int codim = prep.n - prep.dim;
    for (int j = 0; j < codim; ++j)
        if (s[j] != 0)
            throw AnomalyError("segre class has support above the dimension of the scheme");
    return s;
}

} // namespace csmforge
