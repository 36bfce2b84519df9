#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "csmforge/errors.hpp"

namespace csmforge {

// mpq_class(a, b) does not canonicalize; every rational built from parts goes through here.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class make_rational(long num, long den = 1) {
    return make_rational(mpz_class(num), mpz_class(den));
}

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Coefficient field descriptor: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint32_t characteristic = 0; // 0 for the rationals

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    static FieldSpec gf(std::uint32_t p) {
        if (!is_prime_u32(p))
            throw InputError("GF(" + std::to_string(p) + "): modulus is not prime");
        return FieldSpec{Kind::prime_field, p};
    }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && characteristic == o.characteristic;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const {
        return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
    }
};

// Field models used to instantiate the polynomial/Groebner core.  Both expose the
// same interface; GF(p) stays in machine words throughout.

struct Fp {
    using Elem = std::uint32_t;

    std::uint32_t p;

    explicit Fp(std::uint32_t prime) : p(prime) {}

    static constexpr bool is_rationals = false;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p) s -= p;
        return static_cast<Elem>(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((std::uint64_t(a) * b) % p);
    }

    Elem inv(Elem a) const {
        if (a == 0) throw Error(Error::Kind::internal, "GF(p): inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_mpz(const mpz_class& z) const {
        mpz_class r = z % p;
        if (r < 0) r += p;
        return static_cast<Elem>(r.get_ui());
    }

    Elem from_mpq(const mpq_class& q) const {
        Elem den = from_mpz(mpz_class(q.get_den()));
        if (den == 0)
            throw InputError("coefficient denominator vanishes mod " + std::to_string(p));
        return mul(from_mpz(mpz_class(q.get_num())), inv(den));
    }

    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }

    std::string str(Elem a) const { return std::to_string(a); }
};

struct QQ {
    using Elem = mpq_class;

    static constexpr bool is_rationals = true;

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw Error(Error::Kind::internal, "QQ: inverse of zero");
        return 1 / a;
    }

    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_mpz(const mpz_class& z) const { return mpq_class(z); }
    Elem from_mpq(const mpq_class& q) const { return q; }
    Elem from_int(long v) const { return mpq_class(v); }

    std::string str(const Elem& a) const { return a.get_str(); }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw Error(Error::Kind::internal, "QQ: division by zero");
        return b;
    }
};

} // namespace csmforge
