#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cycoh/surface.hpp"
#include "support/oracles.hpp"

using namespace cycoh;
using namespace cycoh_test;

namespace {

SurfaceWithAction quadric_swap() {
    return {"quadric_swap", Int(2), GModule{Int(2), make_matrix({{0, 1}, {1, 0}})},
            {0},           0,      true,
            true};
}

SurfaceWithAction dp2_geiser() {
    return {"dp2_geiser", Int(2), geiser_module(), {3}, 0, true, true};
}

SurfaceWithAction no_fixed_point() {
    return {"no_fixed_point", Int(2), GModule{Int(2), make_matrix({{-1}})},
            {},              0,      true,
            true};
}

bool has_violation(const std::vector<std::string>& violations, const std::string& text) {
    return std::find(violations.begin(), violations.end(), text) != violations.end();
}

}  // namespace

TEST_CASE("hypothesis violations are reported individually") {
    CHECK(verify_hypotheses(quadric_swap()).empty());
    CHECK(verify_hypotheses(dp2_geiser()).empty());

    SurfaceWithAction s = quadric_swap();
    s.m = Int(1);
    s.h2 = trivial_module(Int(1), 1);
    auto v = verify_hypotheses(s);
    CHECK(has_violation(v, "group order must be at least 2"));
    CHECK(has_violation(v, "action on H^2 is trivial"));

    s = quadric_swap();
    s.h2.m = Int(3);
    CHECK(has_violation(verify_hypotheses(s), "module group order differs from m"));

    s = quadric_swap();
    s.h2.action = IntMatrix::Zero(2, 3);
    v = verify_hypotheses(s);
    CHECK(v == std::vector<std::string>{"action matrix not square"});

    s = quadric_swap();
    s.h2.action = make_matrix({{2, 0}, {0, 1}});
    CHECK(has_violation(verify_hypotheses(s), "action matrix does not satisfy T^m = I"));

    CHECK(verify_hypotheses(no_fixed_point()) ==
          std::vector<std::string>{"fixed locus is empty"});

    s = quadric_swap();
    s.fixed_curve_genera = {1, -1};
    CHECK(has_violation(verify_hypotheses(s), "negative curve genus"));

    s = quadric_swap();
    s.isolated_fixed_points = -2;
    CHECK(has_violation(verify_hypotheses(s), "negative fixed point count"));

    s = quadric_swap();
    s.h1_zero = false;
    s.stabilizers_ok = false;
    v = verify_hypotheses(s);
    CHECK(has_violation(v, "H^1(M, Z) = 0 not asserted"));
    CHECK(has_violation(v, "stabilizer condition not asserted"));
}

TEST_CASE("the geiser module, with an independent order count") {
    const GModule geiser = geiser_module();
    validate(geiser);
    REQUIRE(geiser.action.rows() == 8);
    CHECK(geiser.m == Int(2));
    CHECK(geiser.action * geiser.action == IntMatrix::Identity(8, 8));
    CHECK(geiser.action.row(0) == make_matrix({{8, 3, 3, 3, 3, 3, 3, 3}}));

    // The involution is an isometry of the Picard lattice diag(1,-1,...,-1).
    IntMatrix form = -IntMatrix::Identity(8, 8);
    form(0, 0) = Int(1);
    CHECK(geiser.action.transpose() * form * geiser.action == form);

    // Independent order of H^1: with N = 1 + T, ker N is the saturation of
    // im(T - 1) (equal ranks, and N(T - 1) = 0), so the index
    // [ker N : im(T - 1)] is the product of invariant factors of T - 1, i.e.
    // the gcd of its rank-sized minors. rank(T - 1) = 7 because det(T-1) = 0
    // while some 7x7 minor survives.
    const BigMatrix b = to_big(geiser.action - IntMatrix::Identity(8, 8));
    CHECK(det_bareiss(b) == 0);
    const BigInt d7 = minors_gcd(b, 7);
    CHECK(d7 == 64);
    // Every class is 2-torsion (2x = Nx - (T-1)x), so order 64 forces (Z/2)^6.
    const FinAbGroup h1 = group_cohomology(geiser, 1);
    CHECK(h1 == direct_sum_power(FinAbGroup::cyclic(Int(2)), 6));
    CHECK(to_string(h1) == "(Z/2)^6");
}

TEST_CASE("main theorem verdicts") {
    SUBCASE("quadric with the factor swap") {
        const Verdict v = check_main_theorem(quadric_swap());
        CHECK(v.admissible);
        CHECK(v.violations.empty());
        CHECK(v.lhs == FinAbGroup(0, {}));
        CHECK(v.rhs == FinAbGroup(0, {}));
        CHECK(v.isomorphic);
    }
    SUBCASE("degree-2 del Pezzo with the Geiser involution") {
        const Verdict v = check_main_theorem(dp2_geiser());
        CHECK(v.admissible);
        CHECK(v.lhs == direct_sum_power(FinAbGroup::cyclic(Int(2)), 6));
        CHECK(v.rhs == v.lhs);
        CHECK(v.isomorphic);
    }
    SUBCASE("a deliberately wrong genus is caught") {
        SurfaceWithAction s = dp2_geiser();
        s.fixed_curve_genera = {2};
        const Verdict v = check_main_theorem(s);
        CHECK(v.admissible);
        CHECK(v.lhs == direct_sum_power(FinAbGroup::cyclic(Int(2)), 6));
        CHECK(v.rhs == direct_sum_power(FinAbGroup::cyclic(Int(2)), 4));
        CHECK(!v.isomorphic);
    }
    SUBCASE("inadmissible input still reports both sides") {
        const Verdict v = check_main_theorem(no_fixed_point());
        CHECK(!v.admissible);
        CHECK(v.violations == std::vector<std::string>{"fixed locus is empty"});
        CHECK(v.lhs == FinAbGroup::cyclic(Int(2)));
        CHECK(v.rhs == FinAbGroup(0, {}));
        CHECK(!v.isomorphic);
    }
}

TEST_CASE("rhs depends only on total genus") {
    SurfaceWithAction s = quadric_swap();
    s.m = Int(4);
    s.h2 = cyclotomic_module(Int(4));
    s.fixed_curve_genera = {1, 2};
    CHECK(rhs(s) == direct_sum_power(FinAbGroup::cyclic(Int(4)), 6));
    s.fixed_curve_genera = {};
    s.isolated_fixed_points = 5;
    CHECK(rhs(s) == FinAbGroup(0, {}));
}

TEST_CASE("double cover family") {
    const DoubleCoverReport one = double_cover_family(1);
    CHECK(one.r == 2);
    CHECK(one.genus == 0);
    CHECK(one.lhs_abstract == FinAbGroup(0, {}));
    CHECK(one.consistent);

    const DoubleCoverReport two = double_cover_family(2);
    CHECK(two.r == 8);
    CHECK(two.genus == 3);
    CHECK(two.lhs_abstract == direct_sum_power(FinAbGroup::cyclic(Int(2)), 6));
    CHECK(two.lhs_abstract == group_cohomology(geiser_module(), 1));
    CHECK(two.consistent);

    const DoubleCoverReport three = double_cover_family(3);
    CHECK(three.r == 22);
    CHECK(three.genus == 10);

    for (std::int64_t d = 1; d <= 50; ++d) {
        const DoubleCoverReport rep = double_cover_family(d);
        CHECK(rep.d == d);
        CHECK(rep.r == 2 * (2 * d * d - 3 * d + 2));
        CHECK(rep.genus == (2 * d - 1) * (2 * d - 2) / 2);
        CHECK(rep.consistent);
        CHECK(rep.lhs_abstract == rep.rhs_abstract);
        CHECK(rep.lhs_abstract ==
              direct_sum_power(FinAbGroup::cyclic(Int(2)), rep.r - 2));
    }
    CHECK_THROWS_AS(double_cover_family(0), InvalidInputError);
}

TEST_CASE("blow-up invariance") {
    const std::vector<GModule> modules = {character_eps(Int(2)), geiser_module(),
                                          cyclotomic_module(Int(4)),
                                          cyclotomic_module(Int(6))};
    for (const GModule& a : modules) {
        for (Int index(1); index <= a.m; index += Int(1)) {
            if (a.m % index != Int(0)) continue;
            CAPTURE(index);
            CHECK(blowup_invariance_check(a, index));
        }
        CHECK_THROWS_AS(blowup_invariance_check(a, a.m + Int(1)), InvalidIndexError);
        CHECK_THROWS_AS(blowup_invariance_check(a, Int(0)), InvalidIndexError);
    }
}

TEST_CASE("equivariant H^3") {
    CHECK(h3_equivariant(quadric_swap()) == FinAbGroup(0, {}));
    CHECK(h3_equivariant(dp2_geiser()) ==
          direct_sum_power(FinAbGroup::cyclic(Int(2)), 6));
    CHECK(h3_equivariant(dp2_geiser()) == lhs(dp2_geiser()));
    CHECK_THROWS_AS(h3_equivariant(no_fixed_point()), InadmissibleSurfaceError);
}
