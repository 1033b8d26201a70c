#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycoh/abgroup.hpp"
#include "support/oracles.hpp"

using namespace cycoh;
using namespace cycoh_test;

TEST_CASE("canonical form") {
    CHECK(FinAbGroup(0, {2, 3}) == FinAbGroup(0, {6}));
    CHECK(to_string(FinAbGroup(0, {2, 2})) == "(Z/2)^2");
    CHECK(FinAbGroup(2, {4}).free_rank() == 2);
    CHECK(FinAbGroup(0, {1, 1}) == FinAbGroup(0, {}));
    CHECK(FinAbGroup(0, {0, 4}) == FinAbGroup(1, {4}));  // 0 contributes a Z
    CHECK(FinAbGroup(0, {4, 6}) == FinAbGroup(0, {2, 12}));
    CHECK(FinAbGroup(0, {-6}) == FinAbGroup(0, {6}));
    CHECK(FinAbGroup(0, {2, 3, 4, 9}) == FinAbGroup(0, {6, 36}));
    CHECK(FinAbGroup::cyclic(Int(0)) == FinAbGroup(1, {}));
    CHECK(FinAbGroup::cyclic(Int(1)).is_trivial());
    CHECK(FinAbGroup::cyclic(Int(12)) == FinAbGroup(0, {12}));
    CHECK(FinAbGroup::free_group(3) == FinAbGroup(3, {}));
    CHECK_THROWS_AS(FinAbGroup(-1, {}), InvalidInputError);
}

TEST_CASE("order and torsion counting") {
    CHECK(FinAbGroup(0, {2, 6}).order() == Int(12));
    CHECK(FinAbGroup(0, {}).order() == Int(1));
    CHECK_THROWS_AS(FinAbGroup(1, {2}).order(), Error);
    const FinAbGroup g(0, {2, 4});
    CHECK(g.torsion_count(Int(2)) == Int(4));
    CHECK(g.torsion_count(Int(4)) == Int(8));
    CHECK(g.torsion_count(Int(3)) == Int(1));

    // torsion_count agrees with literal element counting.
    std::mt19937 rng(1234);
    const std::vector<CyclicBag> groups = all_groups_up_to(24);
    std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const CyclicBag& bag = groups[pick(rng)];
        const FinAbGroup lib(0, std::vector<Int>(bag.begin(), bag.end()));
        for (std::int64_t k = 1; k <= 10; ++k)
            CHECK(lib.torsion_count(Int(k)) == Int(bag_count_killed_by(bag, k)));
    }
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(FinAbGroup::cyclic(Int(2)), FinAbGroup::cyclic(Int(3))) == FinAbGroup::cyclic(Int(6)));
    CHECK(direct_sum(FinAbGroup::cyclic(Int(2)), FinAbGroup::cyclic(Int(2))) == FinAbGroup(0, {2, 2}));
    CHECK(direct_sum(FinAbGroup::free_group(2), FinAbGroup(0, {4})) == FinAbGroup(2, {4}));
    CHECK(direct_sum_power(FinAbGroup::cyclic(Int(2)), 3) == FinAbGroup(0, {2, 2, 2}));
    CHECK(direct_sum_power(FinAbGroup(1, {2}), 0).is_trivial());
}

TEST_CASE("tensor and tor on pinned cases") {
    CHECK(tensor(FinAbGroup::free_group(2), FinAbGroup::cyclic(Int(5))) == FinAbGroup(0, {5, 5}));
    CHECK(tensor(FinAbGroup::cyclic(Int(4)), FinAbGroup::cyclic(Int(6))) == FinAbGroup::cyclic(Int(2)));
    CHECK(tensor(FinAbGroup::free_group(2), FinAbGroup::free_group(3)) == FinAbGroup::free_group(6));
    CHECK(tor(FinAbGroup::free_group(2), FinAbGroup(5, {2, 4, 8})).is_trivial());
    CHECK(tor(FinAbGroup::cyclic(Int(4)), FinAbGroup::cyclic(Int(6))) == FinAbGroup::cyclic(Int(2)));
    CHECK(tor(FinAbGroup::cyclic(Int(7)), FinAbGroup::cyclic(Int(7))) == FinAbGroup::cyclic(Int(7)));
    CHECK(tensor_with_cyclic(FinAbGroup::free_group(4), Int(3)) == FinAbGroup(0, {3, 3, 3, 3}));
    CHECK(tensor_with_cyclic(FinAbGroup::cyclic(Int(3)), Int(2)).is_trivial());
    CHECK(tensor_with_cyclic(FinAbGroup(1, {4}), Int(2)) == FinAbGroup(0, {2, 2}));
    // Z is the unit of the tensor product.
    CHECK(tensor(FinAbGroup::free_group(1), FinAbGroup(2, {3, 9})) == FinAbGroup(2, {3, 9}));
}

TEST_CASE("tensor and tor agree with the enumeration oracle on all orders <= 36") {
    const std::vector<CyclicBag> groups = all_groups_up_to(36);
    // Exhaustive over pairs would be ~40k enumerations of up to 36^2 elements;
    // sample deterministically instead, plus the full diagonal.
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
    const auto check_pair = [&](const CyclicBag& a, const CyclicBag& b) {
        const FinAbGroup ga(0, std::vector<Int>(a.begin(), a.end()));
        const FinAbGroup gb(0, std::vector<Int>(b.begin(), b.end()));
        CHECK(bags_isomorphic(bag_of(tensor(ga, gb)), bag_tensor(a, b)));
        CHECK(bags_isomorphic(bag_of(tor(ga, gb)), bag_tor(a, b)));
    };
    for (const CyclicBag& g : groups) check_pair(g, g);
    for (int trial = 0; trial < 300; ++trial) check_pair(groups[pick(rng)], groups[pick(rng)]);
}

TEST_CASE("sum and tensor are commutative, associative, distributive") {
    std::mt19937 rng(31337);
    const std::vector<CyclicBag> groups = all_groups_up_to(20);
    std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
    std::uniform_int_distribution<std::int64_t> rank(0, 2);
    const auto random_group = [&] {
        const CyclicBag& bag = groups[pick(rng)];
        return FinAbGroup(rank(rng), std::vector<Int>(bag.begin(), bag.end()));
    };
    for (int trial = 0; trial < 60; ++trial) {
        const FinAbGroup a = random_group(), b = random_group(), c = random_group();
        CHECK(direct_sum(a, b) == direct_sum(b, a));
        CHECK(tensor(a, b) == tensor(b, a));
        CHECK(tor(a, b) == tor(b, a));
        CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
        CHECK(tor(a, direct_sum(b, c)) == direct_sum(tor(a, b), tor(a, c)));
    }
}

TEST_CASE("rendering and parsing") {
    CHECK(to_string(FinAbGroup(0, {})) == "0");
    CHECK(to_string(FinAbGroup::free_group(1)) == "Z");
    CHECK(to_string(FinAbGroup::free_group(2)) == "Z^2");
    CHECK(to_string(FinAbGroup(0, {6})) == "Z/6");
    CHECK(to_string(FinAbGroup(2, {2, 2, 6})) == "Z^2 + (Z/2)^2 + Z/6");
    CHECK(group_from_string("Z^2 + Z/2 + Z/6") == FinAbGroup(2, {2, 6}));
    CHECK(group_from_string("0") == FinAbGroup(0, {}));
    CHECK(group_from_string(" Z/3+Z ") == FinAbGroup(1, {3}));
    CHECK(group_from_string("(Z/4)^2") == FinAbGroup(0, {4, 4}));
    CHECK(group_from_string("Z/2 + Z/3") == FinAbGroup::cyclic(Int(6)));  // re-canonicalized
    CHECK_THROWS_AS(group_from_string("Z/"), InvalidInputError);
    CHECK_THROWS_AS(group_from_string("Q"), InvalidInputError);
    CHECK_THROWS_AS(group_from_string("Z/0"), InvalidInputError);
    CHECK_THROWS_AS(group_from_string(""), InvalidInputError);

    std::mt19937 rng(99);
    const std::vector<CyclicBag> groups = all_groups_up_to(30);
    std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
    std::uniform_int_distribution<std::int64_t> rank(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const CyclicBag& bag = groups[pick(rng)];
        const FinAbGroup g(rank(rng), std::vector<Int>(bag.begin(), bag.end()));
        CHECK(group_from_string(to_string(g)) == g);
    }
}
