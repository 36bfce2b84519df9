#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csmforge/chow.hpp"
#include "csmforge/prng.hpp"

using namespace csmforge;

namespace {

GradedClass gc(std::vector<long> ints) {
    std::vector<mpq_class> q;
    for (long v : ints) q.push_back(mpq_class(v));
    return GradedClass::from_coeffs(std::move(q));
}

GradedClass random_class(int n, RngStream& rng) {
    GradedClass g(n);
    for (int j = 0; j <= n; ++j)
        g.set(j, mpq_class(static_cast<long>(rng.uniform(11)) - 5));
    return g;
}

} // namespace

TEST_CASE("rendering") {
    CHECK(gc({0, 2, -4}).str() == "2*H - 4*H^2");
    CHECK(gc({0, 3, 1}).str() == "3*H + 1*H^2");
    CHECK(gc({1, 0, 0}).str() == "1");
    CHECK(gc({0, 0, 0}).str() == "0");
    CHECK(gc({-1, 0, 2}).str() == "-1 + 2*H^2");
    CHECK(GradedClass(3).str() == "0");
    GradedClass half(2);
    half.set(1, make_rational(1, 2));
    CHECK(half.str() == "1/2*H");
}

TEST_CASE("ring arithmetic") {
    CHECK(mul(gc({1, 3, 3}), gc({0, 3, -8})) == gc({0, 3, 1})); // truncation past H^2
    CHECK(integral(gc({0, 0, 3})) == 3);
    CHECK(integral(gc({5, 1, 0})) == 0);
    CHECK(gc({1, 2, 3}) + gc({1, 0, -3}) == gc({2, 2, 0}));
    CHECK(-gc({1, -2, 0}) == gc({-1, 2, 0}));
    CHECK(gc({1, 2, 3}).scaled(mpq_class(-2)) == gc({-2, -4, -6}));
    CHECK_THROWS_AS(mul(gc({1, 2, 3}), gc({1, 2})), InputError);
    CHECK_THROWS_AS(GradedClass::from_coeffs({}), InputError);
    CHECK_THROWS_AS(gc({1, 2})[5], InputError);
}

TEST_CASE("line powers") {
    CHECK(line_power(2, 2, -1) == gc({1, -2, 4}));
    CHECK(line_power(3, 1, 3) == gc({1, 3, 3, 1}));
    CHECK(line_power(3, 1, -2) == gc({1, -2, 3, -4}));
    CHECK(line_power(4, 0, 7) == unit_class(4));
    CHECK(ambient_tangent_chern(2) == gc({1, 3, 3}));
    CHECK(ambient_tangent_chern(3) == gc({1, 4, 6, 4}));
}

TEST_CASE("duality and adams scalings") {
    CHECK(dual(gc({0, 3, -8}), 0) == gc({0, -3, -8}));
    CHECK(dual(gc({0, 0, 1}), 0) == gc({0, 0, 1}));
    CHECK(dual(gc({0, 2, -5, 1, 0}), 1) == gc({0, 2, 5, 1, 0}));

    GradedClass a = gc({0, 0, 1, 1});
    CHECK(adams(a, 2, 2) == gc({0, 0, 1, 2}));
    CHECK(adams(a, 1, 0) == a);
    CHECK_THROWS_AS(adams(gc({0, 1, 0}), 2, 2), InputError);
    CHECK(adams(gc({0, 1, 0}), -1, 2) == gc({0, -1, 0})); // duality stays total

    RngStream rng(kDefaultSeed, "chow-adams");
    for (int i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(4));
        int off = static_cast<int>(rng.uniform(static_cast<std::uint32_t>(n)));
        GradedClass x = random_class(n, rng);
        CHECK(dual(dual(x, off), off) == x);
        CHECK(adams(x, -1, off) == dual(x, off));
        CHECK(adams(adams(x, -1, off), -1, off) == x);
        // (-1)^{j-off} = (-1)^{off} (-1)^j
        GradedClass lhs = dual(x, off);
        GradedClass rhs = dual(x, 0);
        if (off % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }

    // multiplicativity where defined: coefficients vanish below the offset
    RngStream rng2(kDefaultSeed, "chow-adams-mult");
    for (int i = 0; i < 100; ++i) {
        int n = 3 + static_cast<int>(rng2.uniform(3));
        int off = static_cast<int>(rng2.uniform(3));
        GradedClass x(n);
        for (int j = off; j <= n; ++j)
            x.set(j, mpq_class(static_cast<long>(rng2.uniform(11)) - 5));
        long j = static_cast<long>(rng2.uniform(5)) - 2;
        long k = static_cast<long>(rng2.uniform(5)) - 2;
        CHECK(adams(adams(x, j, off), k, off) == adams(x, j * k, off));
    }
}

TEST_CASE("tensor by a line bundle") {
    CHECK(tensor_line(gc({0, 2, -4}), 2, 0) == gc({0, 2, -8}));
    CHECK(tensor_line(gc({0, 2, -4}), 0, 0) == gc({0, 2, -4}));

    RngStream rng(kDefaultSeed, "chow-tensor");
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(4));
        int off = static_cast<int>(rng.uniform(static_cast<std::uint32_t>(n + 1)));
        long lam = static_cast<long>(rng.uniform(7)) - 3;
        long mu = static_cast<long>(rng.uniform(7)) - 3;
        GradedClass x = random_class(n, rng);
        // twists compose additively
        CHECK(tensor_line(tensor_line(x, lam, off), mu, off) == tensor_line(x, lam + mu, off));
        // grading offset is conjugation by (1 + lam H)^off
        CHECK(tensor_line(x, lam, off) ==
              mul(line_power(n, lam, off), tensor_line(x, lam, 0)));
        // degree-zero twist is the identity
        CHECK(tensor_line(x, 0, off) == x);
    }
}

TEST_CASE("split bundle chern classes") {
    CHECK(chern(SplitBundle{{2}, 1}, 2) == gc({1, 2, 0}));
    CHECK(chern(SplitBundle{{2, 1}, 2}, 3) == gc({1, 3, 2, 0}));
    // trivial pads contribute nothing untwisted
    CHECK(chern(SplitBundle{{2, 1}, 5}, 3) == chern(SplitBundle{{2, 1}, 2}, 3));
    // dualized and twisted by 1: (1 + (1-2)H)(1 + (1-1)H) = 1 - H
    CHECK(chern_twisted(SplitBundle{{2, 1}, 2}, 1, true, 3) == gc({1, -1, 0, 0}));
    CHECK_THROWS_AS(chern(SplitBundle{{1, 2, 3}, 2}, 3), InputError);

    RngStream rng(kDefaultSeed, "chow-bundles");
    for (int i = 0; i < 150; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(4));
        SplitBundle e;
        int len = 1 + static_cast<int>(rng.uniform(3));
        for (int d = 0; d < len; ++d)
            e.degrees.push_back(static_cast<long>(rng.uniform(7)) - 3);
        e.formal_rank = len + static_cast<int>(rng.uniform(3));
        long lam = static_cast<long>(rng.uniform(7)) - 3;

        // tensor identity: c(E (x) O(lam)) = sum_j c_j(E) (1 + lam H)^{rank - j}
        GradedClass lhs = chern_twisted(e, lam, false, n);
        GradedClass rhs =
            mul(line_power(n, lam, e.formal_rank), tensor_line(chern(e, n), lam, 0));
        CHECK(lhs == rhs);

        // duality negates the odd chern classes
        CHECK(chern_twisted(e, 0, true, n) == dual(chern(e, n), 0));
    }
}

TEST_CASE("inverses") {
    CHECK(inverse_chern(gc({1, 2, 0})) == gc({1, -2, 4}));
    CHECK_THROWS_AS(inverse_chern(gc({0, 1, 0})), InputError);

    RngStream rng(kDefaultSeed, "chow-inverse");
    for (int i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(4));
        GradedClass x = random_class(n, rng);
        x.set(0, mpq_class(1 + static_cast<long>(rng.uniform(4))));
        CHECK(mul(x, inverse_chern(x)) == unit_class(n));
    }
}
