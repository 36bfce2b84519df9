#pragma once

// Field-templated polynomial kernel.  Term lists are kept strictly descending in a
// caller-supplied order with no zero coefficients and no duplicate monomials.
// The public facade (poly.hpp) dispatches here per coefficient field.

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "csmforge/field.hpp"
#include "csmforge/monomial.hpp"

namespace csmforge::core {

template <class F>
struct TermsT {
    using C = typename F::Elem;
    struct Term {
        Monomial m;
        C c;
    };
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
};

template <class F>
void normalize(const F& fld, const TermOrder& ord, TermsT<F>& p) {
    auto& v = p.t;
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.m, b.m) > 0; });
    size_t w = 0;
    for (size_t i = 0; i < v.size();) {
        Monomial m = v[i].m;
        auto c = v[i].c;
        size_t j = i + 1;
        while (j < v.size() && v[j].m == m) {
            c = fld.add(c, v[j].c);
            ++j;
        }
        if (!fld.is_zero(c)) {
            v[w].m = m;
            v[w].c = c;
            ++w;
        }
        i = j;
    }
    v.resize(w);
}

template <class F>
void resort(const TermOrder& ord, TermsT<F>& p) {
    std::sort(p.t.begin(), p.t.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.m, b.m) > 0; });
}

template <class F>
TermsT<F> add(const F& fld, const TermOrder& ord, const TermsT<F>& a, const TermsT<F>& b) {
    TermsT<F> r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = ord.compare(a.t[i].m, b.t[j].m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            auto s = fld.add(a.t[i].c, b.t[j].c);
            if (!fld.is_zero(s)) r.t.push_back({a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
    return r;
}

template <class F>
TermsT<F> neg(const F& fld, const TermsT<F>& a) {
    TermsT<F> r = a;
    for (auto& tm : r.t) tm.c = fld.neg(tm.c);
    return r;
}

template <class F>
TermsT<F> sub(const F& fld, const TermOrder& ord, const TermsT<F>& a, const TermsT<F>& b) {
    return add(fld, ord, a, neg(fld, b));
}

template <class F>
TermsT<F> scale(const F& fld, const TermsT<F>& a, const typename F::Elem& c) {
    TermsT<F> r;
    if (fld.is_zero(c)) return r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        auto p = fld.mul(tm.c, c);
        if (!fld.is_zero(p)) r.t.push_back({tm.m, p});
    }
    return r;
}

// a * (c * m); preserves ordering for any monomial order
template <class F>
TermsT<F> mul_term(const F& fld, const TermsT<F>& a, const Monomial& m,
                   const typename F::Elem& c) {
    TermsT<F> r;
    if (fld.is_zero(c)) return r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        auto p = fld.mul(tm.c, c);
        if (!fld.is_zero(p)) r.t.push_back({tm.m.mul(m), p});
    }
    return r;
}

template <class F>
TermsT<F> mul(const F& fld, const TermOrder& ord, const TermsT<F>& a, const TermsT<F>& b) {
    TermsT<F> r;
    if (a.t.empty() || b.t.empty()) return r;
    if (a.t.size() == 1) return mul_term(fld, b, a.t[0].m, a.t[0].c);
    if (b.t.size() == 1) return mul_term(fld, a, b.t[0].m, b.t[0].c);
    std::unordered_map<Monomial, typename F::Elem, MonomialHash> acc;
    acc.reserve(a.t.size() * b.t.size());
    for (const auto& ta : a.t) {
        for (const auto& tb : b.t) {
            Monomial m = ta.m.mul(tb.m);
            auto p = fld.mul(ta.c, tb.c);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, p);
            else
                it->second = fld.add(it->second, p);
        }
    }
    r.t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!fld.is_zero(c)) r.t.push_back({m, c});
    resort(ord, r);
    return r;
}

template <class F>
TermsT<F> pow(const F& fld, const TermOrder& ord, TermsT<F> base, unsigned k, int nvars) {
    TermsT<F> r;
    r.t.push_back({Monomial::unit(nvars), fld.one()});
    while (true) {
        if (k & 1u) r = mul(fld, ord, r, base);
        k >>= 1u;
        if (k == 0) break;
        base = mul(fld, ord, base, base);
    }
    return r;
}

template <class F>
TermsT<F> derivative(const F& fld, const TermsT<F>& a, int var) {
    TermsT<F> r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        std::uint32_t e = tm.m[var];
        if (e == 0) continue;
        auto c = fld.mul(tm.c, fld.from_int(static_cast<long>(e)));
        if (fld.is_zero(c)) continue;
        Monomial m = tm.m;
        m.set(var, e - 1);
        r.t.push_back({m, c});
    }
    // monomial orders are multiplication-invariant, so dividing the surviving terms
    // by the same variable keeps the list strictly descending
    return r;
}

template <class F>
typename F::Elem eval(const F& fld, const TermsT<F>& a,
                      const std::vector<typename F::Elem>& point) {
    auto total = fld.zero();
    for (const auto& tm : a.t) {
        auto v = tm.c;
        for (int i = 0; i < tm.m.nvars; ++i) {
            for (std::uint32_t k = 0; k < tm.m[i]; ++k) v = fld.mul(v, point[static_cast<size_t>(i)]);
        }
        total = fld.add(total, v);
    }
    return total;
}

// Substitute images[i] for variable i; images live in the target variable space.
template <class F>
TermsT<F> compose(const F& fld, const TermOrder& ord, const TermsT<F>& a,
                  const std::vector<TermsT<F>>& images, int target_nvars) {
    TermsT<F> total;
    // per-variable power cache
    std::vector<std::vector<TermsT<F>>> powers(images.size());
    auto power_of = [&](size_t v, std::uint32_t e) -> const TermsT<F>& {
        auto& cache = powers[v];
        if (cache.empty()) {
            TermsT<F> one;
            one.t.push_back({Monomial::unit(target_nvars), fld.one()});
            cache.push_back(one);
        }
        while (cache.size() <= e) cache.push_back(mul(fld, ord, cache.back(), images[v]));
        return cache[e];
    };
    for (const auto& tm : a.t) {
        TermsT<F> prod;
        prod.t.push_back({Monomial::unit(target_nvars), tm.c});
        for (int v = 0; v < tm.m.nvars; ++v) {
            std::uint32_t e = tm.m[v];
            if (e == 0) continue;
            prod = mul(fld, ord, prod, power_of(static_cast<size_t>(v), e));
        }
        total = add(fld, ord, total, prod);
    }
    return total;
}

template <class F>
int total_degree(const TermsT<F>& a) {
    int d = -1;
    for (const auto& tm : a.t) d = std::max(d, static_cast<int>(tm.m.deg));
    return d;
}

template <class F>
bool is_homogeneous(const TermsT<F>& a) {
    for (const auto& tm : a.t)
        if (tm.m.deg != a.t[0].m.deg) return false;
    return true;
}

} // namespace csmforge::core
