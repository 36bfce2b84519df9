#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "csmforge/groebner.hpp"
#include "csmforge/prng.hpp"

using namespace csmforge;

namespace {

Ring qq2() { return Ring::make(FieldSpec::rationals(), {"x", "y"}); }
Ring qq3() { return Ring::make(FieldSpec::rationals(), {"x", "y", "z"}); }
Ring qq4() { return Ring::make(FieldSpec::rationals(), {"x", "y", "z", "w"}); }

Ideal parse_ideal(const Ring& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> ps;
    for (const char* g : gens) ps.push_back(Poly::parse(g, r));
    return Ideal(r, std::move(ps));
}

std::vector<std::string> basis_strings(const std::vector<Poly>& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb) out.push_back(g.str());
    return out;
}

Ideal twisted_cubic(const Ring& r) {
    return parse_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
}

} // namespace

TEST_CASE("linear ideals reduce like matrices") {
    Ring r = qq2();
    auto gb = parse_ideal(r, {"x + y", "x - y"}).groebner_basis();
    CHECK(basis_strings(gb) == std::vector<std::string>{"x", "y"});
}

TEST_CASE("classic basis completion") {
    Ring r = qq2();
    auto gb = parse_ideal(r, {"x^2 + y^2", "x*y"}).groebner_basis();
    // descending lead order: the completed cubic element sorts first
    CHECK(basis_strings(gb) == std::vector<std::string>{"y^3", "x^2 + y^2", "x*y"});
}

TEST_CASE("twisted cubic is already a basis") {
    Ring r = qq4();
    auto gb = twisted_cubic(r).groebner_basis();
    CHECK(basis_strings(gb) ==
          std::vector<std::string>{"y^2 - x*z", "y*z - x*w", "z^2 - y*w"});

    Ring g = Ring::make(FieldSpec::gf(65521), {"x", "y", "z", "w"});
    auto gbp = ideal_change_field(twisted_cubic(r), g).groebner_basis();
    CHECK(gbp.size() == 3);
    CHECK(gbp[0] == Poly::parse("y^2 - x*z", g));
}

TEST_CASE("reduced basis ignores generator order and scaling") {
    Ring r = qq4();
    std::vector<Poly> gens = twisted_cubic(r).gens();
    auto reference = basis_strings(twisted_cubic(r).groebner_basis());
    std::sort(gens.begin(), gens.end(),
              [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    do {
        std::vector<Poly> scaled;
        for (size_t i = 0; i < gens.size(); ++i)
            scaled.push_back(Poly::constant(r, make_rational(2 + static_cast<long>(i))) * gens[i]);
        CHECK(basis_strings(Ideal(r, scaled).groebner_basis()) == reference);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        return a.str() < b.str();
    }));
}

TEST_CASE("normal forms") {
    Ring r = qq2();
    Ideal I = parse_ideal(r, {"x^2 - y"});
    CHECK(normal_form(Poly::parse("x^2 + y", r), I) == Poly::parse("2*y", r));

    Ring r4 = qq4();
    Ideal tc = twisted_cubic(r4);
    Poly member = Poly::parse("z", r4) * tc.gens()[0] + Poly::parse("y", r4) * tc.gens()[1] +
                  Poly::parse("x", r4) * tc.gens()[2];
    CHECK(normal_form(member, tc).is_zero());
    CHECK(normal_form(member + Poly::one(r4), tc) == Poly::one(r4));
    // irreducible stays put
    CHECK(normal_form(Poly::parse("x^2", r4), tc) == Poly::parse("x^2", r4));
    // idempotence on random combinations
    RngStream rng(kDefaultSeed, "nf-idempotent");
    for (int i = 0; i < 20; ++i) {
        Poly p = Poly::zero(r4);
        for (const auto& g : tc.gens()) {
            long c = static_cast<long>(rng.uniform(9)) - 4;
            int v = static_cast<int>(rng.uniform(4));
            p = p + Poly::constant(r4, make_rational(c)) * Poly::variable(r4, v) * g;
        }
        CHECK(normal_form(p, tc).is_zero());
        Poly q = p + Poly::parse("x^2 + w", r4);
        Poly nf = normal_form(q, tc);
        CHECK(normal_form(nf, tc) == nf);
        CHECK(normal_form(q - nf, tc).is_zero());
    }
}

TEST_CASE("unit and zero ideals") {
    Ring r = qq2();
    CHECK(is_unit_ideal(parse_ideal(r, {"x + 1", "x"})));
    CHECK_FALSE(is_unit_ideal(parse_ideal(r, {"x"})));
    Ideal z(r, {Poly::zero(r), Poly::zero(r)});
    CHECK(z.is_zero_ideal());
    CHECK(z.groebner_basis().empty());
}

TEST_CASE("intersection") {
    Ring r = qq2();
    auto xy = ideal_intersect(parse_ideal(r, {"x"}), parse_ideal(r, {"y"}));
    CHECK(basis_strings(xy.groebner_basis()) == std::vector<std::string>{"x*y"});

    auto m2 = ideal_intersect(parse_ideal(r, {"x^2", "y"}), parse_ideal(r, {"x", "y^2"}));
    CHECK(basis_strings(m2.groebner_basis()) ==
          std::vector<std::string>{"x^2", "x*y", "y^2"});
}

TEST_CASE("saturation") {
    Ring r = qq2();
    auto s = saturate(parse_ideal(r, {"x^2", "x*y"}), parse_ideal(r, {"y"}));
    CHECK(basis_strings(s.groebner_basis()) == std::vector<std::string>{"x"});

    // multi-generator saturation folds through intersections
    auto t = saturate(parse_ideal(r, {"x^2*y", "x*y^2"}), parse_ideal(r, {"x", "y"}));
    CHECK(basis_strings(t.groebner_basis()) == std::vector<std::string>{"x*y"});

    // A is contained in the saturation; saturating twice changes nothing
    Ideal a = parse_ideal(r, {"x^2*y", "x*y^2"});
    for (const auto& g : a.gens()) CHECK(normal_form(g, t).is_zero());
    auto tt = saturate(t, parse_ideal(r, {"x", "y"}));
    CHECK(basis_strings(tt.groebner_basis()) == basis_strings(t.groebner_basis()));

    CHECK_THROWS_AS(saturate(t, Ideal(r, {Poly::zero(r)})), InputError);
}

TEST_CASE("scheme equality via irrelevant saturation") {
    Ring r = qq3();
    Ideal line = parse_ideal(r, {"x", "y"});
    Ideal thick = parse_ideal(r, {"x^2", "x*y", "y^2", "x*z", "y*z"}); // (x,y)*(x,y,z)
    CHECK(ideal_equal_as_schemes(line, thick));
    CHECK_FALSE(ideal_equal_as_schemes(line, parse_ideal(r, {"x", "z"})));
    CHECK(basis_strings(saturate_irrelevant(thick).groebner_basis()) ==
          std::vector<std::string>{"x", "y"});
}

TEST_CASE("projective dimension and degree") {
    Ring r3 = qq3();
    CHECK(dim_and_degree(parse_ideal(r3, {"y^2*z - x^2*z - x^3"})) == std::pair{1, 3L});
    CHECK(dim_and_degree(parse_ideal(r3, {"x", "y"})) == std::pair{0, 1L});
    CHECK(dim_and_degree(parse_ideal(r3, {"x", "y", "z"})) == std::pair{-1, 0L});
    CHECK(dim_and_degree(Ideal(r3, {})) == std::pair{2, 1L});
    CHECK(dim_and_degree(parse_ideal(r3, {"x^2 - y*z", "y^2 - x*z"})) == std::pair{0, 4L});

    Ring r4 = qq4();
    CHECK(dim_and_degree(twisted_cubic(r4)) == std::pair{1, 3L});
    CHECK(dim_and_degree(parse_ideal(r4, {"x*w - y*z"})) == std::pair{2, 2L});

    CHECK_THROWS_AS(dim_and_degree(parse_ideal(r3, {"x^2 + y"})), InputError);
}

TEST_CASE("affine quotient dimension") {
    Ring r = qq2();
    CHECK(quotient_vs_dimension(parse_ideal(r, {"x^2", "y"})) == 2);
    CHECK(quotient_vs_dimension(parse_ideal(r, {"x^2", "x*y", "y^2"})) == 3);
    CHECK(quotient_vs_dimension(parse_ideal(r, {"x^2 + y^2", "x*y"})) == 4);
    CHECK(quotient_vs_dimension(parse_ideal(r, {"x - 1", "y - 2"})) == 1);
    CHECK(quotient_vs_dimension(parse_ideal(r, {"x", "x + 1"})) == 0); // empty
    CHECK_THROWS_AS(quotient_vs_dimension(parse_ideal(r, {"x"})), NotZeroDimensionalError);
    CHECK_THROWS_AS(quotient_vs_dimension(Ideal(r, {})), NotZeroDimensionalError);
}

TEST_CASE("step budget aborts runaway computations") {
    Ring r = qq4();
    auto cyclic4 = [&] {
        return parse_ideal(r, {"x + y + z + w", "x*y + y*z + z*w + w*x",
                               "x*y*z + y*z*w + z*w*x + w*x*y", "x*y*z*w - 1"});
    };
    GroebnerOptions tiny;
    tiny.step_budget = 3;
    CHECK_THROWS_AS(cyclic4().groebner_basis(TermOrder::grevlex(), tiny), ResourceError);
    CHECK_NOTHROW(cyclic4().groebner_basis());
}

TEST_CASE("generator interreduction") {
    Ring r = qq2();
    // same-degree lists get a canonical row echelon basis
    auto rows = interreduce_generators(
        {Poly::parse("x + y", r), Poly::parse("x - y", r), Poly::parse("2*x", r)});
    CHECK(basis_strings(rows) == std::vector<std::string>{"x", "y"});

    auto sq = interreduce_generators({Poly::parse("x^2", r), Poly::parse("x^2", r),
                                      Poly::zero(r), Poly::parse("y^2", r)});
    CHECK(sq.size() == 2);

    // mixed degrees only prune members of the ideal generated by the rest
    auto mixed = interreduce_generators(
        {Poly::parse("x", r), Poly::parse("x^2 + x*y", r), Poly::parse("y^3 + 1", r)});
    CHECK(basis_strings(mixed) == std::vector<std::string>{"x", "y^3 + 1"});
}

TEST_CASE("ideal products and powers") {
    Ring r = qq2();
    Ideal m = parse_ideal(r, {"x", "y"});
    auto m2 = ideal_product(m, m);
    CHECK(basis_strings(m2.gens()) == std::vector<std::string>{"x^2", "x*y", "y^2"});
    auto m3 = ideal_power(m, 3);
    CHECK(m3.gens().size() == 4);
    CHECK(basis_strings(ideal_power(m, 0).gens()) == std::vector<std::string>{"1"});
    CHECK_THROWS_AS(ideal_power(m, -1), InputError);

    // product generators live in the intersection
    Ideal a = parse_ideal(r, {"x^2", "y"});
    Ideal b = parse_ideal(r, {"x", "y^2"});
    Ideal prod = ideal_product(a, b);
    Ideal inter = ideal_intersect(a, b);
    for (const auto& g : prod.gens()) CHECK(normal_form(g, inter).is_zero());
}

TEST_CASE("sum concatenates without duplicates") {
    Ring r = qq2();
    Ideal s = ideal_sum(parse_ideal(r, {"x", "y"}), parse_ideal(r, {"y", "x^2"}));
    CHECK(s.gens().size() == 3);
}
