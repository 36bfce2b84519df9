#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "csmforge/errors.hpp"

namespace csmforge {

// Exponent vectors are fixed-width: enough for ambient P^n plus the auxiliary
// variables added by Rabinowitsch tricks and eliminations at desk scale.
inline constexpr int kMaxVars = 12;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint8_t nvars = 0;
    std::uint32_t deg = 0; // cached total degree

    static Monomial unit(int nvars) {
        Monomial m;
        m.nvars = static_cast<std::uint8_t>(nvars);
        return m;
    }

    static Monomial var(int nvars, int idx, std::uint32_t exp = 1) {
        Monomial m = unit(nvars);
        m.set(idx, exp);
        return m;
    }

    std::uint32_t operator[](int i) const { return e[static_cast<size_t>(i)]; }

    void set(int i, std::uint32_t v) {
        if (v > kMaxExponent) throw InputError("exponent overflow (limit 65535)");
        deg = deg - e[static_cast<size_t>(i)] + v;
        e[static_cast<size_t>(i)] = static_cast<std::uint16_t>(v);
    }

    bool is_unit() const { return deg == 0; }

    Monomial mul(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) {
            std::uint32_t s = std::uint32_t(r.e[i]) + o.e[i];
            if (s > kMaxExponent) throw InputError("exponent overflow (limit 65535)");
            r.e[i] = static_cast<std::uint16_t>(s);
        }
        r.deg = deg + o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility
    Monomial div(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] - o.e[i]);
        r.deg = deg - o.deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        std::uint32_t d = 0;
        for (int i = 0; i < nvars; ++i) {
            r.e[i] = std::max(r.e[i], o.e[i]);
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        if (nvars != o.nvars || deg != o.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int i = 0; i < nvars; ++i) {
            h ^= e[i];
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Monomial orders: grevlex, lex, and block orders (grevlex within each block,
// blocks compared in sequence; block 0 dominates, so putting the variables to be
// eliminated in block 0 yields an elimination order).
struct TermOrder {
    enum class Kind { grevlex, lex, block };

    Kind kind = Kind::grevlex;
    std::vector<std::uint8_t> block_of; // only for Kind::block: block index per variable
    int nblocks = 0;

    static TermOrder grevlex() { return TermOrder{}; }

    static TermOrder lex() {
        TermOrder o;
        o.kind = Kind::lex;
        return o;
    }

    static TermOrder elimination(const std::vector<std::uint8_t>& block_of_var) {
        TermOrder o;
        o.kind = Kind::block;
        o.block_of = block_of_var;
        int mx = -1;
        for (auto b : block_of_var) mx = std::max(mx, static_cast<int>(b));
        o.nblocks = mx + 1;
        return o;
    }

    // +1 if a > b, 0 if equal, -1 if a < b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::grevlex: return cmp_grevlex(a, b, nullptr, 0);
            case Kind::lex: {
                for (int i = 0; i < a.nvars; ++i) {
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
                }
                return 0;
            }
            case Kind::block: {
                for (int blk = 0; blk < nblocks; ++blk) {
                    int c = cmp_grevlex(a, b, &block_of, blk);
                    if (c != 0) return c;
                }
                return 0;
            }
        }
        return 0;
    }

    bool operator==(const TermOrder& o) const {
        return kind == o.kind && block_of == o.block_of;
    }
    bool operator<(const TermOrder& o) const {
        if (kind != o.kind) return kind < o.kind;
        return block_of < o.block_of;
    }

private:
    // grevlex restricted to the variables of one block (or all variables when blocks == nullptr):
    // higher block-degree wins; on ties the last differing variable with the smaller exponent wins.
    static int cmp_grevlex(const Monomial& a, const Monomial& b,
                           const std::vector<std::uint8_t>* blocks, int blk) {
        std::uint32_t da = 0, db = 0;
        if (blocks == nullptr) {
            da = a.deg;
            db = b.deg;
        } else {
            for (int i = 0; i < a.nvars; ++i) {
                if ((*blocks)[static_cast<size_t>(i)] != blk) continue;
                da += a.e[i];
                db += b.e[i];
            }
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = a.nvars - 1; i >= 0; --i) {
            if (blocks != nullptr && (*blocks)[static_cast<size_t>(i)] != blk) continue;
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }
};

} // namespace csmforge
