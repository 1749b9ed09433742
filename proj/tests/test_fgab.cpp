#include "nilmult/fgab.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace nilmult;

TEST_CASE("from_cyclic_orders normalizes into the invariant factor chain", "[fgab]")
{
    // Z4 + Z6 = Z12 + Z2 by CRT
    const FgAbGroup g = from_cyclic_orders({4, 6});
    CHECK(g.free_rank() == 0);
    REQUIRE(g.torsion().size() == 2);
    CHECK(g.torsion()[0] == FgAbGroup::TorsionEntry{12, 1});
    CHECK(g.torsion()[1] == FgAbGroup::TorsionEntry{2, 1});

    // the element-order multisets of both presentations agree
    CHECK(oracle::order_multiset({4, 6}) == oracle::order_multiset({12, 2}));

    CHECK(from_cyclic_orders({1}).is_trivial());
    const FgAbGroup h = from_cyclic_orders({0, 2, 2});
    CHECK(h.free_rank() == 1);
    REQUIRE(h.torsion().size() == 1);
    CHECK(h.torsion()[0] == FgAbGroup::TorsionEntry{2, 2});

    CHECK_THROWS_AS(from_cyclic_orders({-3}), std::invalid_argument);
}

TEST_CASE("from_cyclic_orders is invariant under input permutation", "[fgab]")
{
    std::vector<Integer> orders = {0, 12, 4, 6, 2, 9};
    const FgAbGroup expected = from_cyclic_orders(orders);
    std::sort(orders.begin(), orders.end());
    do {
        CHECK(from_cyclic_orders(orders) == expected);
    } while (std::next_permutation(orders.begin(), orders.end()));
}

TEST_CASE("direct_sum is commutative, associative, with the trivial identity", "[fgab]")
{
    const FgAbGroup a = from_cyclic_orders({4, 6});
    const FgAbGroup b = from_cyclic_orders({0, 9});
    const FgAbGroup c = from_cyclic_orders({8, 2});

    CHECK(direct_sum(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6)) ==
          from_cyclic_orders({12, 2}));
    CHECK(direct_sum(a, FgAbGroup::trivial()) == a);
    CHECK(direct_sum(FgAbGroup::cyclic(0), FgAbGroup::cyclic(2)) ==
          from_cyclic_orders({0, 2}));

    CHECK(direct_sum(a, b) == direct_sum(b, a));
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
}

TEST_CASE("isomorphism is canonical equality", "[fgab]")
{
    CHECK(is_isomorphic(from_cyclic_orders({4, 6}), from_cyclic_orders({12, 2})));
    CHECK_FALSE(is_isomorphic(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)));
    const FgAbGroup a = from_cyclic_orders({0, 8, 4});
    CHECK(is_isomorphic(a, a));
}

TEST_CASE("isomorphism iff order, free rank and primary tables agree", "[fgab]")
{
    const auto groups = oracle::abelian_groups_up_to(64);
    for (const auto& a : groups)
        for (const auto& b : groups) {
            const bool same = a.order() == b.order() &&
                              a.free_rank() == b.free_rank() &&
                              primary_decomposition(a) == primary_decomposition(b);
            CHECK(is_isomorphic(a, b) == same);
        }
}

TEST_CASE("is_direct_summand decides the summand relation", "[fgab]")
{
    CHECK(is_direct_summand(FgAbGroup::cyclic(2), from_cyclic_orders({4, 2})));
    CHECK_FALSE(is_direct_summand(FgAbGroup::cyclic(4), from_cyclic_orders({2, 2})));
    CHECK(is_direct_summand(FgAbGroup::trivial(), from_cyclic_orders({0, 9})));
}

TEST_CASE("is_direct_summand matches the exhaustive complement search", "[fgab]")
{
    // A is a summand of B iff some C with |C| = |B|/|A| satisfies A + C = B
    const auto groups = oracle::abelian_groups_up_to(16);
    for (const auto& a : groups)
        for (const auto& b : groups) {
            const Integer oa = *a.order(), ob = *b.order();
            bool expected = false;
            if (ob % oa == 0) {
                const Integer oc = ob / oa;
                for (const auto& c :
                     oracle::abelian_groups_of_order(oc.convert_to<std::int64_t>()))
                    if (direct_sum(a, c) == b) {
                        expected = true;
                        break;
                    }
            }
            CHECK(is_direct_summand(a, b) == expected);
        }
}

TEST_CASE("mutual summands are isomorphic", "[fgab]")
{
    const auto groups = oracle::abelian_groups_up_to(36);
    for (const auto& a : groups)
        for (const auto& b : groups)
            if (is_direct_summand(a, b) && is_direct_summand(b, a))
                CHECK(is_isomorphic(a, b));
}

TEST_CASE("order, exponent and elementary abelian predicates", "[fgab]")
{
    CHECK(*from_cyclic_orders({4, 2}).order() == 8);
    CHECK(*from_cyclic_orders({12, 2}).exponent() == 12);
    CHECK_FALSE(from_cyclic_orders({0, 4}).order().has_value());
    CHECK(*FgAbGroup::trivial().order() == 1);
    CHECK(*FgAbGroup::trivial().exponent() == 1);

    CHECK(is_elementary_abelian(from_cyclic_orders({2, 2}), 2));
    CHECK(is_elementary_abelian(FgAbGroup::trivial(), 5));
    CHECK_FALSE(is_elementary_abelian(FgAbGroup::cyclic(4), 2));
    CHECK_FALSE(is_elementary_abelian(from_cyclic_orders({0, 2}), 2));
    CHECK_FALSE(is_elementary_abelian(FgAbGroup::cyclic(4), 4));  // 4 is not prime
}

TEST_CASE("compressed multiplicities stay compressed", "[fgab]")
{
    // Z_2^(10^30) must be a single entry, not an expansion
    const Integer huge = pow(Integer(10), 30);
    const FgAbGroup g = FgAbGroup::from_summands(0, {{2, huge}});
    REQUIRE(g.torsion().size() == 1);
    CHECK(g.torsion()[0].second == huge);
    CHECK_THROWS_AS(cyclic_summands(g), capacity_error);
}

TEST_CASE("rendering round-trips through the canonical form", "[fgab]")
{
    CHECK(to_string(from_cyclic_orders({4, 6})) == "Z12 + Z2");
    CHECK(to_string(FgAbGroup::trivial()) == "1");
    CHECK(to_string(from_cyclic_orders({0, 0, 2, 2})) == "Z^2 + Z2^2");
}
