#include <doctest.h>

#include "helpers.hpp"
#include "minmaxhom/classify.hpp"
#include "minmaxhom/generate.hpp"
#include "minmaxhom/solver.hpp"

using namespace minmaxhom;
using namespace minmaxhom::testing;

namespace {

std::vector<std::vector<std::int64_t>> random_costs(int ng, int nh,
                                                    std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<std::int64_t>> c(ng, std::vector<std::int64_t>(nh));
    for (auto& row : c)
        for (auto& x : row) x = static_cast<std::int64_t>(rng.next() % 10);
    return c;
}

}  // namespace

TEST_CASE("prune_lists seeds classes by shifted level and filters loops") {
    Digraph c6 = directed_cycle(6);
    Classification cls = classify(c6);
    REQUIRE(cls.polynomial());
    const auto& orders = cls.components[0].orders;

    Digraph lone(1, {});
    auto s = prune_lists(lone, c6, 6, {0}, orders, 2);
    REQUIRE(s.has_value());
    CHECK((*s)[0] == std::vector<int>{2});

    Digraph arc(2, {{0, 1}});
    auto s2 = prune_lists(arc, c6, 6, {0, 1}, orders, 0);
    REQUIRE(s2.has_value());
    CHECK((*s2)[0] == std::vector<int>{0});
    CHECK((*s2)[1] == std::vector<int>{1});

    // Loop-carrying instance vertex against a loop-free template: wipeout.
    Digraph loopy(1, {{0, 0}});
    Digraph path(2, {{0, 1}});
    CHECK_FALSE(prune_lists(loopy, path, 1, {0}, {{0, 1}}, 0).has_value());
}

TEST_CASE("arc consistency prunes unsupported candidates") {
    // Template: 0->2, 1->2, 1->3. Instance: arc u->w.
    Digraph templ(4, {{0, 2}, {1, 2}, {1, 3}});
    Digraph arc(2, {{0, 1}});
    auto lists = prune_lists(arc, templ, 1, {0, 0}, {{0, 1, 2, 3}}, 0);
    REQUIRE(lists.has_value());
    CHECK((*lists)[0] == std::vector<int>{0, 1});  // 2, 3 have no out-support
    CHECK((*lists)[1] == std::vector<int>{2, 3});  // 0, 1 have no in-support

    // Instance demanding a 2-walk in a template with none: wipeout.
    Digraph two_path(3, {{0, 1}, {1, 2}});
    Digraph one_arc(2, {{0, 1}});
    CHECK_FALSE(
        prune_lists(two_path, one_arc, 1, {0, 0, 0}, {{0, 1}}, 0).has_value());
}

TEST_CASE("staircase extracts interval rows with monotone endpoints") {
    Digraph templ(3, {{0, 1}, {0, 2}});
    Staircase st = staircase({0}, {1, 2}, templ);
    CHECK(st.lo == std::vector<int>{0});
    CHECK(st.hi == std::vector<int>{1});

    // Full biclique: every row spans the whole opposite list.
    Digraph biclique(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Staircase full = staircase({0, 1}, {2, 3}, biclique);
    CHECK(full.lo == std::vector<int>{0, 0});
    CHECK(full.hi == std::vector<int>{1, 1});

    Digraph clique(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    Staircase refl = staircase({0, 1}, {0, 1}, clique);
    CHECK(refl.lo == std::vector<int>{0, 0});
    CHECK(refl.hi == std::vector<int>{1, 1});
}

TEST_CASE("staircase rejects gaps and non-monotone rows") {
    Digraph gap(4, {{0, 1}, {0, 3}});  // neighbors {1,3} skip index of 2
    CHECK_THROWS_AS(staircase({0}, {1, 2, 3}, gap), StaircaseViolation);

    Digraph crossed(4, {{0, 3}, {1, 2}});
    CHECK_THROWS_AS(staircase({0, 1}, {2, 3}, crossed), StaircaseViolation);

    Digraph empty_row(3, {{1, 2}});
    CHECK_THROWS_AS(staircase({0, 1}, {2}, empty_row), StaircaseViolation);
}

TEST_CASE("solve_component picks the cheapest cut") {
    Digraph lone(1, {});
    Digraph clique(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto res = solve_component(lone, clique, {{0, 1}}, {{5, 2}});
    REQUIRE(res.has_value());
    CHECK(res->first == 2);
    CHECK(res->second == std::vector<int>{1});

    Digraph arc(2, {{0, 1}});
    auto res2 = solve_component(arc, clique, {{0, 1}, {0, 1}},
                                {{0, 0}, {0, 0}});
    REQUIRE(res2.has_value());
    CHECK(res2->first == 0);
    std::vector<int> img{(*res2).second[0], (*res2).second[1]};
    CHECK(clique.has_arc(img[0], img[1]));  // indices equal ids here
}

TEST_CASE("solve_polynomial matches the simple closed forms") {
    Digraph c6 = directed_cycle(6);
    Classification cls = classify(c6);
    REQUIRE(cls.polynomial());

    // Single vertex: min over all classes and offsets.
    CostInstance one{Digraph(1, {}), {{3, 1, 4, 1, 5, 9}}};
    Solution s = solve_polynomial(c6, cls, one);
    REQUIRE(s.optimal());
    CHECK(s.cost == 1);

    // Rotations of the hexagon onto itself: cost pinned to vertex 0's image.
    std::vector<std::vector<std::int64_t>> rot(6,
                                               std::vector<std::int64_t>(6, 0));
    rot[0] = {7, 3, 9, 2, 8, 5};
    CostInstance hex{directed_cycle(6), rot};
    Solution sr = solve_polynomial(c6, cls, hex);
    REQUIRE(sr.optimal());
    CHECK(sr.cost == 2);
    CHECK(sr.mapping[0] == 3);
    Solution sb = solve_bruteforce(c6, hex);
    CHECK(sb.cost == sr.cost);

    // Loops in the instance, loop-free template: infeasible.
    CostInstance loopy{Digraph(1, {{0, 0}}), {{0, 0, 0, 0, 0, 0}}};
    CHECK_FALSE(solve_polynomial(c6, cls, loopy).optimal());
}

TEST_CASE("solve_bruteforce basics") {
    Digraph arc(2, {{0, 1}});
    Solution s = solve_bruteforce(arc, CostInstance{arc, {{0, 0}, {0, 0}}});
    REQUIRE(s.optimal());
    CHECK(s.cost == 0);
    CHECK(s.mapping == std::vector<int>{0, 1});

    Digraph no_arcs(2, {});
    CHECK_FALSE(solve_bruteforce(no_arcs, CostInstance{arc, {{0, 0}, {0, 0}}})
                    .optimal());

    CostInstance big{Digraph(30, {}),
                     std::vector<std::vector<std::int64_t>>(
                         30, std::vector<std::int64_t>(2, 0))};
    CHECK_THROWS_AS(solve_bruteforce(arc, big, 1000), GuardExceeded);
}

TEST_CASE("exact solver agrees with brute force on random instances") {
    int solved = 0;
    for (std::uint64_t seed = 1; solved < 60; ++seed) {
        REQUIRE(seed < 500);  // enough polynomial templates exist below this
        Digraph h = gen_random(GeneratorSpec{5, 0.35, seed, seed % 2 == 0});
        Classification cls = classify(h);
        if (!cls.polynomial()) continue;

        Digraph g = gen_random(GeneratorSpec{6, 0.3, seed * 977 + 1, false});
        CostInstance inst{g, random_costs(6, 5, seed * 31 + 7)};

        Solution fast = solve_polynomial(h, cls, inst);
        Solution slow = solve_bruteforce(h, inst);
        CHECK(fast.optimal() == slow.optimal());
        if (fast.optimal()) {
            CHECK(fast.cost == slow.cost);
            CHECK(is_homomorphism(g, h, fast.mapping));
            std::int64_t total = 0;
            for (int u = 0; u < 6; ++u) total += inst.costs[u][fast.mapping[u]];
            CHECK(total == fast.cost);
        }
        ++solved;
    }
}

TEST_CASE("solver is deterministic") {
    Digraph h = gen_proper_interval(6, 99);
    Classification cls = classify(h);
    REQUIRE(cls.polynomial());
    Digraph g = gen_random(GeneratorSpec{7, 0.3, 12345, false});
    CostInstance inst{g, random_costs(7, 6, 777)};
    Solution a = solve_polynomial(h, cls, inst);
    Solution b = solve_polynomial(h, cls, inst);
    CHECK(a.optimal() == b.optimal());
    CHECK(a.cost == b.cost);
    CHECK(a.mapping == b.mapping);
}
