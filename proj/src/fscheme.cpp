#include "csmforge/fscheme.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

namespace csmforge {

namespace {

// ---- exact univariate interpolation -----------------------------------------

// Coefficients (low degree first) of the unique polynomial of degree < #points
// through the given (k, value) pairs, by incremental Newton expansion:
// p += c * B with c = (y - p(k)) / B(k), then B *= (x - k).
std::vector<mpq_class> interpolate(const std::vector<std::pair<long, mpq_class>>& pts) {
    std::vector<mpq_class> coeffs;
    std::vector<mpq_class> basis = {mpq_class(1)}; // prod (x - k_i) over points used so far
    for (const auto& [k, y] : pts) {
        mpq_class acc = 0, bas = 0, xp = 1;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (i < coeffs.size()) acc += coeffs[i] * xp;
            bas += basis[i] * xp;
            xp *= k;
        }
        mpq_class c = (y - acc) / bas; // bas nonzero for distinct nodes
        if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), mpq_class(0));
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += c * basis[i];
        std::vector<mpq_class> nb(basis.size() + 1, mpq_class(0));
        for (size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] += basis[i];
            nb[i] -= mpq_class(k) * basis[i];
        }
        basis = std::move(nb);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, long k) {
    mpq_class v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * k + coeffs[i];
    return v;
}

std::string render_samples(const std::map<int, GradedClass>& samples) {
    std::string s;
    for (const auto& [k, cls] : samples)
        s += " k=" + std::to_string(k) + ": " + cls.str() + ";";
    return s;
}

// The sampled ideal for one value of k: the plain product s1*s2^pow, or, inside a
// fixed subscheme, within + s1*s2^pow.
Ideal sampled_ideal(const Ideal& s1, const Ideal& pow, const std::optional<Ideal>& within) {
    Ideal prod = ideal_product(s1, pow);
    return within ? ideal_sum(*within, prod) : prod;
}

// One full sampling + fitting pass; returns nullopt when a holdout or the k = 0
// gate fails (caller retries with fresh randomness, then hard-errors).
std::optional<SegreFamily> family_attempt(const Ideal& s1, const Ideal& s2, int j_max,
                                          const SegreOptions& opts,
                                          const std::optional<Ideal>& within, std::string& why) {
    const int n = s1.ring().nvars() - 1;
    SegreFamily fam;
    fam.n = n;

    Ideal pow = ideal_power(s2, 0); // unit ideal; rebuilt cumulatively below
    for (int k = 1; k <= j_max + 2; ++k) {
        pow = ideal_product(pow, s2);
        fam.samples.emplace(k, segre_class(sampled_ideal(s1, pow, within), opts));
    }

    fam.fitted.resize(static_cast<size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) {
        std::vector<std::pair<long, mpq_class>> pts;
        for (int k = 1; k <= j + 1; ++k) pts.emplace_back(k, fam.samples.at(k)[j]);
        fam.fitted[static_cast<size_t>(j)] = interpolate(pts);
        for (const auto& [k, cls] : fam.samples) {
            if (eval_poly(fam.fitted[static_cast<size_t>(j)], k) != cls[j]) {
                why = "codimension " + std::to_string(j) + " fit missed the sample at k=" +
                      std::to_string(k);
                return std::nullopt;
            }
        }
    }

    // internal consistency gate: the fit extrapolated to k = 0 must equal the
    // directly computed class at exponent zero
    fam.holdout_ok = true;
    GradedClass direct = segre_class(within ? ideal_sum(*within, s1) : s1, opts);
    if (evaluate_family(fam, 0) != direct) {
        why = "family at k=0 is " + evaluate_family(fam, 0).str() +
              " but the direct class is " + direct.str();
        fam.holdout_ok = false;
        return std::nullopt;
    }
    return fam;
}

} // namespace

FScheme fs_normalize(std::vector<FSchemeFactor> factors, const GroebnerOptions& opts) {
    FScheme out;
    for (auto& f : factors) {
        if (f.exponent == 0) continue;
        if (!out.factors.empty())
            out.factors.front().ideal.ring().require_compatible(f.ideal.ring());
        bool merged = false;
        for (auto& g : out.factors) {
            if (ideal_equal_as_schemes(g.ideal, f.ideal, opts)) {
                g.exponent += f.exponent;
                merged = true;
                break;
            }
        }
        if (!merged) out.factors.push_back(std::move(f));
    }
    std::erase_if(out.factors, [](const FSchemeFactor& f) { return f.exponent == 0; });
    return out;
}

SegreFamily segre_family(const Ideal& s1, const Ideal& s2, int j_max,
                         const SegreOptions& opts, const std::optional<Ideal>& within) {
    s1.ring().require_compatible(s2.ring());
    if (within) s1.ring().require_compatible(within->ring());
    const int n = s1.ring().nvars() - 1;
    if (j_max < 0) throw InputError("segre_family needs a nonnegative codimension bound");
    j_max = std::min(j_max, n);

    std::string why_first, why_second;
    if (auto fam = family_attempt(s1, s2, j_max, opts, within, why_first)) return *fam;

    SegreOptions fresh = opts;
    fresh.seed = mix_label(opts.seed, "family-retry");
    if (auto fam = family_attempt(s1, s2, j_max, fresh, within, why_second)) return *fam;

    // rebuild the samples once more so the report carries the evidence
    std::string detail = "segre family failed its exactness gates twice (" + why_first +
                         "; retry: " + why_second + ")";
    try {
        std::map<int, GradedClass> diag;
        Ideal pow = ideal_power(s2, 0);
        for (int k = 1; k <= j_max + 2; ++k) {
            pow = ideal_product(pow, s2);
            diag.emplace(k, segre_class(sampled_ideal(s1, pow, within), opts));
        }
        detail += "; samples:" + render_samples(diag);
    } catch (const Error&) {
        detail += "; samples could not be rebuilt";
    }
    throw HoldoutMismatchError(detail);
}

GradedClass evaluate_family(const SegreFamily& f, long k) {
    if (!f.holdout_ok)
        throw InputError("evaluate_family called on a family that failed its holdout");
    GradedClass out(f.n);
    for (size_t j = 0; j < f.fitted.size(); ++j)
        out.set(static_cast<int>(j), eval_poly(f.fitted[j], k));
    return out;
}

GradedClass fscheme_segre(const FScheme& u, const SegreOptions& opts,
                          const std::optional<Ideal>& within) {
    if (u.factors.empty()) throw InputError("segre class of an empty f-scheme");
    const Ring& r = u.factors.front().ideal.ring();
    const int n = r.nvars() - 1;

    std::optional<Ideal> pos, neg;
    auto fold = [](std::optional<Ideal>& acc, const Ideal& next) {
        acc = acc ? ideal_product(*acc, next) : next;
    };
    for (const auto& f : u.factors) {
        Ideal p = ideal_power(f.ideal, std::abs(f.exponent));
        fold(f.exponent > 0 ? pos : neg, p);
    }

    if (!neg) return segre_class(within ? ideal_sum(*within, *pos) : *pos, opts);
    if (!pos && !within) return dual(segre_class(*neg, opts), 0);
    Ideal base = pos ? *pos : ideal_power(*neg, 0); // unit ideal: the factor is all of V(within)
    return evaluate_family(segre_family(base, *neg, n, opts, within), -1);
}

} // namespace csmforge
