#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csmforge/classes.hpp"

using namespace csmforge;

namespace {

Ring p2() { return Ring::make(FieldSpec::rationals(), {"x", "y", "z"}); }
Ring p3() { return Ring::make(FieldSpec::rationals(), {"x", "y", "z", "w"}); }

Poly pp(const char* s, const Ring& r) { return Poly::parse(s, r); }

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

CompleteIntersection nodal_cubic() {
    Ring r = p2();
    return make_ci({pp("y^2*z - x^2*z - x^3", r)}, -1, true);
}

CompleteIntersection cuspidal_cubic() {
    Ring r = p2();
    return make_ci({pp("y^2*z - x^3", r)}, -1, true);
}

CompleteIntersection crossing_lines() {
    Ring r = p3();
    return make_ci({pp("x*w - y*z", r), pp("w", r)}, -1, true);
}

} // namespace

TEST_CASE("make_ci validation") {
    Ring r = p2();
    CHECK_THROWS_AS(make_ci({}), InputError);
    CHECK_THROWS_AS(make_ci({pp("x + 1", r)}), InputError);               // inhomogeneous
    CHECK_THROWS_AS(make_ci({pp("x", r), pp("y", r), pp("z", r)}), InputError); // m > n
    CHECK_THROWS_AS(make_ci({pp("x*y", r), pp("x*z", r)}), InputError);   // codim 1, not 2
    CompleteIntersection ok = make_ci({pp("x*w - y*z", p3()), pp("w", p3())});
    CHECK(ok.m() == 2);
    CHECK(ok.distinguished_index == 1);
}

TEST_CASE("singular schemes") {
    Ring r = p2();
    Ideal j_node = singular_scheme(nodal_cubic());
    CHECK(ideal_equal_as_schemes(j_node, parse_ideal(r, {"x", "y"})));

    Ideal j_cusp = singular_scheme(cuspidal_cubic());
    CHECK(ideal_equal_as_schemes(j_cusp, parse_ideal(r, {"x^2", "y"})));

    Ideal j_conic = singular_scheme(make_ci({pp("y*z - x^2", r)}, -1, true));
    CHECK(is_unit_ideal(j_conic));

    Ideal j_cross = singular_scheme(crossing_lines());
    CHECK(ideal_equal_as_schemes(j_cross, parse_ideal(p3(), {"w", "y", "z"})));
}

TEST_CASE("chern-fulton classes") {
    CHECK(chern_fulton(ci_ideal(nodal_cubic())) == gc({0, 3, 0}));
    CHECK(chern_fulton(parse_ideal(p2(), {"y*z - x^2"})) == gc({0, 2, 2}));
    CHECK(chern_fulton(parse_ideal(p3(), {"x*y - z*w"})) == gc({0, 2, 4, 4}));
}

TEST_CASE("csm of singular curves in the plane") {
    CHECK(csm_blowup(nodal_cubic()) == gc({0, 3, 1}));
    CHECK(csm_blowup(cuspidal_cubic()) == gc({0, 3, 2}));
}

TEST_CASE("csm of the quadric cone") {
    CompleteIntersection cone = make_ci({pp("x*y - z^2", p3())}, -1, true);
    CHECK(csm_blowup(cone) == gc({0, 2, 4, 3}));
    CHECK(euler_characteristic(cone) == 3);
}

TEST_CASE("csm of two crossing lines, both pipelines") {
    CompleteIntersection ci = crossing_lines();
    GradedClass expected = gc({0, 0, 2, 3});
    CHECK(csm_blowup(ci) == expected);
    CHECK(csm_fmc_oracle(ci) == expected);
    CHECK(csm_incl_excl(ci) == expected);
    CHECK(euler_characteristic(ci) == 3);
}

TEST_CASE("smooth collapse") {
    CompleteIntersection conic = make_ci({pp("y*z - x^2", p2())}, -1, true);
    CHECK(csm_blowup(conic) == gc({0, 2, 2}));
    CHECK(csm_blowup(conic) == chern_fulton(ci_ideal(conic)));
    CHECK(milnor_class(conic).is_zero());
    CHECK(euler_characteristic(conic) == 2);

    CompleteIntersection quadric = make_ci({pp("x*y - z*w", p3())}, -1, true);
    CHECK(csm_blowup(quadric) == gc({0, 2, 4, 4}));

    Ring r3 = p3();
    CompleteIntersection quartic = make_ci(
        {pp("x^2 + y^2 + z^2 + w^2", r3), pp("x^2 + 2*y^2 + 3*z^2 + 4*w^2", r3)}, -1, true);
    GradedClass cq = csm_blowup(quartic);
    CHECK(cq == gc({0, 0, 4, 0}));
    CHECK(cq == chern_fulton(ci_ideal(quartic)));
    CHECK(cq == csm_incl_excl(quartic));
    CHECK(euler_characteristic(quartic) == 0);
}

TEST_CASE("fmc oracle values") {
    CHECK(csm_fmc_oracle(nodal_cubic()) == gc({0, 3, 1}));
    // union of the quadric and the tangent plane as one degree-3 hypersurface
    CompleteIntersection uni = make_ci({pp("(x*w - y*z)*w", p3())}, -1, true);
    CHECK(csm_fmc_oracle(uni) == gc({0, 3, 5, 4}));
    // m = 1 inclusion-exclusion is the oracle itself
    CHECK(csm_incl_excl(nodal_cubic()) == csm_fmc_oracle(nodal_cubic()));
}

TEST_CASE("milnor class and milnor numbers") {
    CHECK(milnor_class(nodal_cubic()) == gc({0, 0, 1}));
    CHECK(milnor_class(cuspidal_cubic()) == gc({0, 0, 2}));

    // independent local count: Jacobian algebra in the chart z = 1
    CHECK(milnor_sum_isolated(nodal_cubic().hypersurfaces[0], 2) == 1);
    CHECK(milnor_sum_isolated(cuspidal_cubic().hypersurfaces[0], 2) == 2);

    CHECK(integral(milnor_class(nodal_cubic())) == 1);
    CHECK(integral(milnor_class(cuspidal_cubic())) == 2);
}

TEST_CASE("class report") {
    ClassReport r = class_report(nodal_cubic());
    CHECK(r.csm == gc({0, 3, 1}));
    CHECK(r.fulton == gc({0, 3, 0}));
    CHECK(r.milnor == gc({0, 0, 1}));
    CHECK(r.euler == 1);
    CHECK(r.provenance.method == "blowup-family");
    CHECK(r.provenance.prime == 65521);
    CHECK(r.provenance.trials == 2);
}

TEST_CASE("verify_theorem") {
    CHECK(verify_theorem(nodal_cubic()).match);
    CHECK(verify_theorem(crossing_lines()).match);
    CompleteIntersection unclaimed = make_ci({pp("y*z - x^2", p2())});
    CHECK_THROWS_AS(verify_theorem(unclaimed), InputError);
}

TEST_CASE("verify_lemma on the nodal cubic") {
    auto rs = verify_lemma(nodal_cubic(), {1, 2, 3});
    REQUIRE(rs.size() == 3);
    for (const auto& r : rs) {
        CHECK(r.match);
        CHECK(r.lhs == gc({0, 3, r.k * r.k - 9}));
    }
    CHECK_THROWS_AS(verify_lemma(nodal_cubic(), {0}), InputError);
}

TEST_CASE("verify_lemma on crossing lines") {
    auto rs = verify_lemma(crossing_lines(), {1, 2});
    REQUIRE(rs.size() == 2);
    for (const auto& r : rs) {
        CHECK(r.match);
        CHECK(r.lhs == gc({0, 0, 2, r.k * r.k - 2}));
    }
}

TEST_CASE("verify_remark") {
    Ring r = p2();
    VerifyResult nodal2 = verify_remark(pp("y^2*z - x^2*z - x^3", r), 2);
    CHECK(nodal2.match);
    CHECK(nodal2.rhs == gc({0, 3, 1}));

    VerifyResult conic2 = verify_remark(pp("y*z - x^2", r), 2);
    CHECK(conic2.match);
    CHECK(conic2.rhs == gc({0, 2, 2}));

    CHECK_THROWS_AS(verify_remark(pp("y*z - x^2", r), 1), InputError);
}

TEST_CASE("verify_conjecture on an almost smooth instance") {
    VerifyResult v = verify_conjecture(nodal_cubic());
    CHECK(v.match);
    CHECK(v.lhs == gc({0, 3, 1}));
}

TEST_CASE("inclusion-exclusion guard") {
    Ring r5 = Ring::make(FieldSpec::rationals(), {"x0", "x1", "x2", "x3", "x4", "x5"});
    std::vector<Poly> fs;
    for (int i = 0; i < 5; ++i) fs.push_back(Poly::variable(r5, i));
    CompleteIntersection big = make_ci(std::move(fs));
    CHECK_THROWS_AS(csm_incl_excl(big), InputError);
}
