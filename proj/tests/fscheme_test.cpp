#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csmforge/fscheme.hpp"

using namespace csmforge;

namespace {

Ring p2() { return Ring::make(FieldSpec::rationals(), {"x", "y", "z"}); }

Ideal parse_ideal(const Ring& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> ps;
    for (const char* g : gens) ps.push_back(Poly::parse(g, r));
    return Ideal(r, std::move(ps));
}

GradedClass gc(std::vector<long> ints) {
    std::vector<mpq_class> q;
    for (long v : ints) q.push_back(mpq_class(v));
    return GradedClass::from_coeffs(std::move(q));
}

} // namespace

TEST_CASE("fs_normalize group laws") {
    Ring r = p2();
    Ideal point = parse_ideal(r, {"x", "y"});
    Ideal point_cone = parse_ideal(r, {"x^2", "x*y", "y^2", "x*z", "y*z"}); // same scheme
    Ideal conic = parse_ideal(r, {"y*z - x^2"});

    FScheme merged = fs_normalize({{point, 2}, {point_cone, -1}});
    REQUIRE(merged.factors.size() == 1);
    CHECK(merged.factors[0].exponent == 1);

    FScheme untouched = fs_normalize({{point, 1}, {conic, -1}});
    CHECK(untouched.factors.size() == 2);

    CHECK(fs_normalize({{point, 1}, {point, -1}}).factors.empty());
    CHECK(fs_normalize({{point, 0}}).factors.empty());

    // idempotent and order-independent on the merged result
    FScheme twice = fs_normalize(merged.factors);
    REQUIRE(twice.factors.size() == 1);
    CHECK(twice.factors[0].exponent == 1);
    FScheme swapped = fs_normalize({{point_cone, -1}, {point, 2}});
    REQUIRE(swapped.factors.size() == 1);
    CHECK(swapped.factors[0].exponent == 1);
}

TEST_CASE("nodal cubic family") {
    Ring r = p2();
    Ideal cubic = parse_ideal(r, {"y^2*z - x^2*z - x^3"});
    Ideal node = parse_ideal(r, {"x", "y"});

    SegreFamily fam = segre_family(cubic, node, 2);
    CHECK(fam.holdout_ok);
    REQUIRE(fam.samples.size() == 4); // k = 1..4

    // coefficient of H is the constant 3, coefficient of H^2 is k^2 - 9
    CHECK(fam.samples.at(1) == gc({0, 3, -8}));
    CHECK(fam.samples.at(2) == gc({0, 3, -5}));
    CHECK(fam.samples.at(3) == gc({0, 3, 0}));
    CHECK(fam.samples.at(4) == gc({0, 3, 7}));
    REQUIRE(fam.fitted.size() == 3);
    CHECK(fam.fitted[1] == std::vector<mpq_class>{mpq_class(3)});
    CHECK(fam.fitted[2] ==
          std::vector<mpq_class>{mpq_class(-9), mpq_class(0), mpq_class(1)});

    CHECK(evaluate_family(fam, 0) == gc({0, 3, -9}));  // s(X, P^2)
    CHECK(evaluate_family(fam, -1) == gc({0, 3, -8}));
    CHECK(evaluate_family(fam, 2) == fam.samples.at(2));
}

TEST_CASE("disjoint points split into class plus adams part") {
    Ring r = p2();
    Ideal p1 = parse_ideal(r, {"x", "y"});
    Ideal p2i = parse_ideal(r, {"y", "z"});

    SegreFamily fam = segre_family(p1, p2i, 2);
    // s(P1 u P2^k) = s(P1) + adams_k(s(P2)): coefficient of H^2 is 1 + k^2
    CHECK(fam.samples.at(1) == gc({0, 0, 2}));
    CHECK(fam.samples.at(3) == gc({0, 0, 10}));
    CHECK(evaluate_family(fam, -1) == gc({0, 0, 2}));
}

TEST_CASE("evaluate_family requires a verified fit") {
    SegreFamily broken;
    broken.n = 2;
    broken.holdout_ok = false;
    CHECK_THROWS_AS(evaluate_family(broken, 1), InputError);
}

TEST_CASE("fscheme_segre reductions") {
    Ring r = p2();
    Ideal cubic = parse_ideal(r, {"y^2*z - x^2*z - x^3"});
    Ideal node = parse_ideal(r, {"x", "y"});

    CHECK(fscheme_segre(FScheme{{{cubic, 1}}}) == gc({0, 3, -9}));
    CHECK(fscheme_segre(FScheme{{{node, -1}}}) == gc({0, 0, 1})); // dual of H^2 at offset 0
    CHECK(fscheme_segre(fs_normalize({{cubic, 1}, {node, -1}})) == gc({0, 3, -8}));
    CHECK_THROWS_AS(fscheme_segre(FScheme{}), InputError);
}
