#pragma once

// Field-templated Buchberger engine with the two classical pair-elimination
// criteria and sugar-strategy selection, plus the combinatorial helpers built on
// lead-term ideals (Hilbert numerator, staircase counts, row interreduction).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "csmforge/poly_core.hpp"

namespace csmforge::core {

struct StepBudget {
    std::int64_t limit = 10'000'000;
    std::int64_t used = 0;

    void bump(std::int64_t n = 1) {
        used += n;
        if (used > limit)
            throw ResourceError("reduction step budget exceeded (" + std::to_string(limit) +
                                " steps)");
    }
};

// Accumulator holding a sum of sorted term lists; leads are pulled on demand with
// cancellation across chunks.  Keeps reduction cost near the merged sizes instead
// of re-merging the whole working polynomial at each step.
template <class F>
class ChunkSum {
public:
    ChunkSum(const F& fld, const TermOrder& ord) : fld_(fld), ord_(ord) {}

    void add(TermsT<F>&& p) {
        if (p.t.empty()) return;
        chunks_.push_back(std::move(p.t));
        heads_.push_back(0);
        if (chunks_.size() > 48) consolidate();
    }

    // Removes and returns the largest term (coefficients combined across chunks);
    // false when the sum is exhausted.
    bool pull_lead(typename TermsT<F>::Term& out) {
        for (;;) {
            int best = -1;
            for (size_t i = 0; i < chunks_.size(); ++i) {
                if (heads_[i] >= chunks_[i].size()) continue;
                if (best < 0 ||
                    ord_.compare(chunks_[i][heads_[i]].m, chunks_[static_cast<size_t>(best)][heads_[static_cast<size_t>(best)]].m) > 0)
                    best = static_cast<int>(i);
            }
            if (best < 0) return false;
            Monomial m = chunks_[static_cast<size_t>(best)][heads_[static_cast<size_t>(best)]].m;
            auto c = fld_.zero();
            for (size_t i = 0; i < chunks_.size(); ++i) {
                if (heads_[i] >= chunks_[i].size()) continue;
                if (chunks_[i][heads_[i]].m == m) {
                    c = fld_.add(c, chunks_[i][heads_[i]].c);
                    ++heads_[i];
                }
            }
            prune();
            if (!fld_.is_zero(c)) {
                out.m = m;
                out.c = c;
                return true;
            }
        }
    }

private:
    void prune() {
        size_t w = 0;
        for (size_t i = 0; i < chunks_.size(); ++i) {
            if (heads_[i] >= chunks_[i].size()) continue;
            if (w != i) {
                chunks_[w] = std::move(chunks_[i]);
                heads_[w] = heads_[i];
            }
            ++w;
        }
        chunks_.resize(w);
        heads_.resize(w);
    }

    void consolidate() {
        // merge the two shortest chunks
        size_t a = 0, b = 1;
        auto len = [&](size_t i) { return chunks_[i].size() - heads_[i]; };
        if (len(b) < len(a)) std::swap(a, b);
        for (size_t i = 2; i < chunks_.size(); ++i) {
            if (len(i) < len(a)) {
                b = a;
                a = i;
            } else if (len(i) < len(b)) {
                b = i;
            }
        }
        std::vector<typename TermsT<F>::Term> merged;
        merged.reserve(len(a) + len(b));
        size_t i = heads_[a], j = heads_[b];
        while (i < chunks_[a].size() && j < chunks_[b].size()) {
            int c = ord_.compare(chunks_[a][i].m, chunks_[b][j].m);
            if (c > 0) {
                merged.push_back(chunks_[a][i++]);
            } else if (c < 0) {
                merged.push_back(chunks_[b][j++]);
            } else {
                auto s = fld_.add(chunks_[a][i].c, chunks_[b][j].c);
                if (!fld_.is_zero(s)) merged.push_back({chunks_[a][i].m, s});
                ++i;
                ++j;
            }
        }
        for (; i < chunks_[a].size(); ++i) merged.push_back(chunks_[a][i]);
        for (; j < chunks_[b].size(); ++j) merged.push_back(chunks_[b][j]);
        size_t lo = std::min(a, b), hi = std::max(a, b);
        chunks_.erase(chunks_.begin() + static_cast<long>(hi));
        heads_.erase(heads_.begin() + static_cast<long>(hi));
        chunks_[lo] = std::move(merged);
        heads_[lo] = 0;
    }

    const F& fld_;
    const TermOrder& ord_;
    std::vector<std::vector<typename TermsT<F>::Term>> chunks_;
    std::vector<size_t> heads_;
};

template <class F>
struct GBElem {
    TermsT<F> p; // monic, sorted descending in the engine order
    Monomial lm;
    std::uint32_t sugar = 0;
    bool alive = true;
};

template <class F>
class GroebnerEngine {
public:
    GroebnerEngine(const F& fld, const TermOrder& ord, StepBudget& budget)
        : fld_(fld), ord_(ord), budget_(budget) {}

    // Full normal form of p against the monic divisors in basis (alive entries only
    // when alive != nullptr).  sugar, when given, is updated to the sugar of the result.
    TermsT<F> normal_form(const TermsT<F>& p, const std::vector<GBElem<F>>& basis,
                          std::uint32_t* sugar = nullptr) const {
        TermsT<F> out;
        ChunkSum<F> work(fld_, ord_);
        {
            TermsT<F> copy = p;
            work.add(std::move(copy));
        }
        typename TermsT<F>::Term lead;
        while (work.pull_lead(lead)) {
            int div = find_divisor(lead.m, basis);
            if (div < 0) {
                out.t.push_back(lead);
                continue;
            }
            budget_.bump();
            const GBElem<F>& g = basis[static_cast<size_t>(div)];
            Monomial q = lead.m.div(g.lm);
            if (sugar != nullptr)
                *sugar = std::max(*sugar, g.sugar + q.deg);
            // cancel: subtract lead.c * q * g  (g monic, head q*g.lm == lead.m)
            TermsT<F> tail;
            tail.t.reserve(g.p.t.size());
            auto neg_c = fld_.neg(lead.c);
            for (size_t i = 1; i < g.p.t.size(); ++i) {
                auto c = fld_.mul(g.p.t[i].c, neg_c);
                if (!fld_.is_zero(c)) tail.t.push_back({g.p.t[i].m.mul(q), c});
            }
            work.add(std::move(tail));
        }
        return out;
    }

    // Buchberger with coprime-lead and chain criteria, sugar selection, reduced output.
    std::vector<TermsT<F>> reduced_basis(std::vector<TermsT<F>> gens) {
        std::vector<GBElem<F>> basis;
        for (auto& g : gens) {
            if (g.t.empty()) continue;
            resort(ord_, g);
            std::uint32_t sug = g_sugar(g);
            push_elem(basis, std::move(g), sug);
        }
        if (basis.empty()) return {};
        if (has_unit(basis)) return unit_basis();

        // pending S-pairs keyed for sugar-strategy selection
        struct PairKey {
            std::uint32_t sugar;
            Monomial lcm;
            int i, j;
        };
        struct PairCmp {
            const TermOrder* ord;
            bool operator()(const PairKey& a, const PairKey& b) const {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
                int c = ord->compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                if (a.i != b.i) return a.i < b.i;
                return a.j < b.j;
            }
        };
        std::set<PairKey, PairCmp> queue(PairCmp{&ord_});
        std::unordered_set<std::uint64_t> pending;
        auto pair_id = [](int i, int j) {
            return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
        };
        auto push_pair = [&](int i, int j) {
            if (i > j) std::swap(i, j);
            const auto& a = basis[static_cast<size_t>(i)];
            const auto& b = basis[static_cast<size_t>(j)];
            Monomial l = a.lm.lcm(b.lm);
            std::uint32_t sug = std::max(a.sugar + l.deg - a.lm.deg, b.sugar + l.deg - b.lm.deg);
            queue.insert(PairKey{sug, l, i, j});
            pending.insert(pair_id(i, j));
        };

        for (int i = 0; i < static_cast<int>(basis.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) push_pair(i, j);

        while (!queue.empty()) {
            // batch: pairs sharing the minimal sugar value (capped so the dense
            // elimination matrix stays bounded)
            std::uint32_t batch_sugar = queue.begin()->sugar;
            std::vector<PairKey> batch;
            while (!queue.empty() && queue.begin()->sugar == batch_sugar && batch.size() < 64) {
                batch.push_back(*queue.begin());
                queue.erase(queue.begin());
            }

            // criteria applied in pop order: pending is cleared per pair as it is
            // decided, so the chain criterion's mutual-justification argument stays
            // well-founded (every pair is enqueued on creation; absence from
            // pending means decided earlier)
            std::vector<TermsT<F>> spolys;
            std::vector<std::uint32_t> sugars;
            for (const PairKey& pk : batch) {
                pending.erase(pair_id(pk.i, pk.j));
                const auto& gi = basis[static_cast<size_t>(pk.i)];
                const auto& gj = basis[static_cast<size_t>(pk.j)];

                if (gi.lm.coprime(gj.lm)) continue; // first criterion

                // chain criterion: some third lead divides the lcm and both
                // companion pairs have already been handled
                bool skip = false;
                for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
                    if (k == pk.i || k == pk.j) continue;
                    if (!basis[static_cast<size_t>(k)].lm.divides(pk.lcm)) continue;
                    std::uint64_t ik = pair_id(std::min(pk.i, k), std::max(pk.i, k));
                    std::uint64_t jk = pair_id(std::min(pk.j, k), std::max(pk.j, k));
                    if (pending.count(ik) == 0 && pending.count(jk) == 0) skip = true;
                }
                if (skip) continue;

                // S-polynomial (heads cancel since both are monic)
                Monomial qi = pk.lcm.div(gi.lm);
                Monomial qj = pk.lcm.div(gj.lm);
                TermsT<F> s = sub(fld_, ord_, mul_term(fld_, gi.p, qi, fld_.one()),
                                  mul_term(fld_, gj.p, qj, fld_.one()));
                if (s.t.empty()) continue;
                spolys.push_back(std::move(s));
                sugars.push_back(pk.sugar);
            }
            if (spolys.empty()) continue;

            size_t batch_start = basis.size();
            std::vector<TermsT<F>> rems = batch_reduce(std::move(spolys), basis, sugars);

            for (size_t k = 0; k < rems.size(); ++k) {
                if (rems[k].t.empty()) continue;
                std::uint32_t sug = sugars[k];
                // the dense pass fully reduced against the batch-start basis; only
                // an element inserted later in this batch can still claim the lead
                bool hit = false;
                for (size_t t = batch_start; t < basis.size() && !hit; ++t)
                    hit = basis[t].alive && basis[t].lm.divides(rems[k].t[0].m);
                TermsT<F> r = hit ? normal_form(rems[k], basis, &sug) : std::move(rems[k]);
                if (r.t.empty()) continue;
                int idx = push_elem(basis, std::move(r), sug);
                if (basis[static_cast<size_t>(idx)].lm.is_unit()) return unit_basis();
                // pairs are formed against every earlier element, retired or not;
                // retirement only narrows the reducer set, never the pair set
                for (int t = 0; t < idx; ++t) push_pair(t, idx);
            }
        }

        return reduce_final(basis);
    }

private:
    static std::uint32_t g_sugar(const TermsT<F>& g) {
        std::uint32_t d = 0;
        for (const auto& tm : g.t) d = std::max(d, tm.m.deg);
        return d;
    }

    bool has_unit(const std::vector<GBElem<F>>& basis) const {
        for (const auto& e : basis)
            if (e.alive && e.lm.is_unit()) return true;
        return false;
    }

    std::vector<TermsT<F>> unit_basis() const {
        TermsT<F> one;
        one.t.push_back({Monomial::unit(nvars_hint_), fld_.one()});
        return {one};
    }

    int find_divisor(const Monomial& m, const std::vector<GBElem<F>>& basis) const {
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!basis[i].alive) continue;
            if (basis[i].lm.divides(m)) return static_cast<int>(i);
        }
        return -1;
    }

    // Normal forms of several polynomials at once: one symbolic pass attaches a
    // reducer multiple q*g to every reachable reducible monomial, then each input
    // is eliminated over a dense coefficient vector.  Reducer multiples are built
    // once per batch instead of once per use, and the inner loop is a flat
    // multiply-subtract over the tail of the pivot row.
    std::vector<TermsT<F>> batch_reduce(std::vector<TermsT<F>> inputs,
                                        const std::vector<GBElem<F>>& basis,
                                        std::vector<std::uint32_t>& sugars) const {
        // symbolic closure over all monomials reachable from the inputs
        std::unordered_map<Monomial, int, MonomialHash> state; // -2 queued, -1 free, >=0 row
        std::vector<TermsT<F>> rows;
        std::vector<std::uint32_t> row_sugar;
        std::vector<Monomial> work;
        auto visit = [&](const Monomial& m) {
            if (state.emplace(m, -2).second) work.push_back(m);
        };
        for (const auto& s : inputs)
            for (const auto& t : s.t) visit(t.m);
        while (!work.empty()) {
            Monomial m = work.back();
            work.pop_back();
            int div = find_divisor(m, basis);
            if (div < 0) {
                state[m] = -1;
                continue;
            }
            const GBElem<F>& g = basis[static_cast<size_t>(div)];
            Monomial q = m.div(g.lm);
            TermsT<F> mult = mul_term(fld_, g.p, q, fld_.one());
            state[m] = static_cast<int>(rows.size());
            row_sugar.push_back(g.sugar + q.deg);
            for (size_t i = 1; i < mult.t.size(); ++i) visit(mult.t[i].m);
            rows.push_back(std::move(mult));
        }
        budget_.bump(static_cast<std::int64_t>(rows.size()));

        // columns: reachable monomials, descending in the engine order
        std::vector<Monomial> cols;
        cols.reserve(state.size());
        for (const auto& kv : state) cols.push_back(kv.first);
        std::sort(cols.begin(), cols.end(),
                  [&](const Monomial& a, const Monomial& b) { return ord_.compare(a, b) > 0; });
        std::unordered_map<Monomial, int, MonomialHash> col_of;
        col_of.reserve(cols.size());
        for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], static_cast<int>(i));

        // reducer rows keyed by pivot column; tails remapped to column indices
        // (heads are monic, so the pivot coefficient is 1 and is not stored)
        std::vector<int> pivot_of_col(cols.size(), -1);
        std::vector<std::vector<std::pair<int, typename F::Elem>>> tails(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            pivot_of_col[static_cast<size_t>(col_of.at(rows[r].t[0].m))] = static_cast<int>(r);
            auto& tail = tails[r];
            tail.reserve(rows[r].t.size() - 1);
            for (size_t i = 1; i < rows[r].t.size(); ++i)
                tail.emplace_back(col_of.at(rows[r].t[i].m), rows[r].t[i].c);
            rows[r].t.clear();
        }

        std::vector<TermsT<F>> out;
        out.reserve(inputs.size());
        std::vector<typename F::Elem> dense(cols.size(), fld_.zero());
        for (size_t k = 0; k < inputs.size(); ++k) {
            for (const auto& t : inputs[k].t)
                dense[static_cast<size_t>(col_of.at(t.m))] = t.c;
            TermsT<F> rem;
            for (size_t c = 0; c < cols.size(); ++c) {
                if (fld_.is_zero(dense[c])) continue;
                int r = pivot_of_col[c];
                if (r < 0) {
                    rem.t.push_back({cols[c], dense[c]});
                    dense[c] = fld_.zero();
                    continue;
                }
                budget_.bump();
                sugars[k] = std::max(sugars[k], row_sugar[static_cast<size_t>(r)]);
                auto coef = dense[c];
                dense[c] = fld_.zero();
                for (const auto& [cc, v] : tails[static_cast<size_t>(r)]) {
                    auto& slot = dense[static_cast<size_t>(cc)];
                    slot = fld_.sub(slot, fld_.mul(coef, v));
                }
            }
            out.push_back(std::move(rem));
        }
        return out;
    }

    int push_elem(std::vector<GBElem<F>>& basis, TermsT<F> p, std::uint32_t sugar) {
        nvars_hint_ = p.t[0].m.nvars;
        if (!fld_.is_one(p.t[0].c)) p = scale(fld_, p, fld_.inv(p.t[0].c));
        GBElem<F> e;
        e.lm = p.t[0].m;
        e.sugar = sugar;
        e.p = std::move(p);
        // retire basis members whose lead the newcomer divides (their pairs remain
        // pending, which is harmless; reductions stop using them)
        for (auto& old : basis)
            if (old.alive && e.lm.divides(old.lm)) old.alive = false;
        basis.push_back(std::move(e));
        return static_cast<int>(basis.size()) - 1;
    }

    std::vector<TermsT<F>> reduce_final(std::vector<GBElem<F>>& basis) {
        // minimal heads
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!basis[i].alive) continue;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !basis[j].alive) continue;
                if (basis[j].lm.divides(basis[i].lm) && basis[j].lm != basis[i].lm) {
                    basis[i].alive = false;
                    break;
                }
                if (basis[j].lm == basis[i].lm && j < i) {
                    basis[i].alive = false;
                    break;
                }
            }
        }
        // tail reduction: heads are pairwise non-divisible, so one pass suffices
        std::vector<GBElem<F>> minimal;
        for (auto& e : basis)
            if (e.alive) minimal.push_back(std::move(e));
        std::vector<TermsT<F>> out;
        for (size_t i = 0; i < minimal.size(); ++i) {
            GBElem<F> self = std::move(minimal[i]);
            minimal[i].alive = false;
            minimal[i].p.t.clear();
            TermsT<F> r = normal_form(self.p, minimal);
            minimal[i] = std::move(self);
            minimal[i].alive = true;
            if (!fld_.is_one(r.t[0].c)) r = scale(fld_, r, fld_.inv(r.t[0].c));
            minimal[i].p = r;
            minimal[i].lm = r.t[0].m;
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const GBElem<F>& a, const GBElem<F>& b) { return ord_.compare(a.lm, b.lm) > 0; });
        out.reserve(minimal.size());
        for (auto& e : minimal) out.push_back(std::move(e.p));
        return out;
    }

    const F& fld_;
    const TermOrder& ord_;
    StepBudget& budget_;
    int nvars_hint_ = kMaxVars;
};

// ---- lead-term combinatorics ---------------------------------------------------

// Minimal generating set of a monomial ideal (divisibility prune, duplicates dropped).
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(m);
    }
    return out;
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/L for a monomial ideal L,
// via pivot splitting: N(L) = N(L + (x)) + t * N(L : x).
class HilbertNumerator {
public:
    explicit HilbertNumerator(int nvars) : nvars_(nvars) {}

    std::vector<mpz_class> run(std::vector<Monomial> gens) {
        gens = minimalize_monomials(std::move(gens));
        return recurse(std::move(gens));
    }

private:
    int nvars_;
    std::int64_t nodes_ = 0;

    static void mul_one_minus_power(std::vector<mpz_class>& poly, std::uint32_t d) {
        // poly *= 1 - t^d
        std::vector<mpz_class> out(poly.size() + d, mpz_class(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i];
            out[i + d] -= poly[i];
        }
        poly = std::move(out);
    }

    std::vector<mpz_class> recurse(std::vector<Monomial> gens) {
        if (++nodes_ > 2'000'000)
            throw ResourceError("hilbert numerator recursion too large");
        if (gens.empty()) return {mpz_class(1)};
        for (const auto& m : gens)
            if (m.is_unit()) return {mpz_class(0)};

        // shared variable with the highest incidence; none shared => pairwise coprime
        std::array<int, kMaxVars> count{};
        for (const auto& m : gens)
            for (int v = 0; v < nvars_; ++v)
                if (m[v] > 0) ++count[static_cast<size_t>(v)];
        int pivot = -1, best = 1;
        for (int v = 0; v < nvars_; ++v) {
            if (count[static_cast<size_t>(v)] > best) {
                best = count[static_cast<size_t>(v)];
                pivot = v;
            }
        }
        if (pivot < 0) {
            std::vector<mpz_class> acc{mpz_class(1)};
            for (const auto& m : gens) mul_one_minus_power(acc, m.deg);
            return acc;
        }

        // L : x_pivot
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        for (const auto& m : gens) {
            if (m[pivot] > 0) {
                Monomial q = m;
                q.set(pivot, m[pivot] - 1);
                colon.push_back(q);
            } else {
                colon.push_back(m);
            }
        }
        // L + (x_pivot)
        std::vector<Monomial> plus;
        for (const auto& m : gens)
            if (m[pivot] == 0) plus.push_back(m);
        plus.push_back(Monomial::var(nvars_, pivot));

        std::vector<mpz_class> a = recurse(minimalize_monomials(std::move(plus)));
        std::vector<mpz_class> b = recurse(minimalize_monomials(std::move(colon)));
        std::vector<mpz_class> out(std::max(a.size(), b.size() + 1), mpz_class(0));
        for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        return out;
    }
};

// Count of monomials outside the monomial ideal L (throws when infinite).
// caps[v] must hold an exponent bound per variable (from pure-power members).
std::int64_t staircase_count(const std::vector<Monomial>& minimal_gens, int nvars);

// Exact reduced row echelon form of a list of polynomials viewed as coefficient
// rows over the monomials they span (columns ordered descending in ord).  Returns
// the nonzero rows; a canonical generating set for the rows' span.
template <class F>
std::vector<TermsT<F>> rref_rows(const F& fld, const TermOrder& ord, const std::vector<TermsT<F>>& rows) {
    std::vector<Monomial> cols;
    {
        std::unordered_set<Monomial, MonomialHash> seen;
        for (const auto& r : rows)
            for (const auto& t : r.t)
                if (seen.insert(t.m).second) cols.push_back(t.m);
    }
    std::sort(cols.begin(), cols.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    std::unordered_map<Monomial, size_t, MonomialHash> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

    std::vector<std::vector<typename F::Elem>> mat;
    mat.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<typename F::Elem> row(cols.size(), fld.zero());
        for (const auto& t : r.t) row[col_of.at(t.m)] = t.c;
        mat.push_back(std::move(row));
    }

    size_t pivot_row = 0;
    for (size_t col = 0; col < cols.size() && pivot_row < mat.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < mat.size() && fld.is_zero(mat[sel][col])) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[pivot_row], mat[sel]);
        auto inv = fld.inv(mat[pivot_row][col]);
        for (size_t c = col; c < cols.size(); ++c)
            mat[pivot_row][c] = fld.mul(mat[pivot_row][c], inv);
        for (size_t r = 0; r < mat.size(); ++r) {
            if (r == pivot_row || fld.is_zero(mat[r][col])) continue;
            auto factor = mat[r][col];
            for (size_t c = col; c < cols.size(); ++c)
                mat[r][c] = fld.sub(mat[r][c], fld.mul(factor, mat[pivot_row][c]));
        }
        ++pivot_row;
    }

    std::vector<TermsT<F>> out;
    for (size_t r = 0; r < pivot_row; ++r) {
        TermsT<F> p;
        for (size_t c = 0; c < cols.size(); ++c)
            if (!fld.is_zero(mat[r][c])) p.t.push_back({cols[c], mat[r][c]});
        if (!p.t.empty()) out.push_back(std::move(p));
    }
    return out;
}

} // namespace csmforge::core
