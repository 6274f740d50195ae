#include <doctest.h>

#include "oracle.hpp"

#include <injhom/error.hpp>
#include <injhom/gadgets.hpp>
#include <injhom/generators.hpp>
#include <injhom/solver.hpp>

#include <random>
#include <set>

using namespace injhom;

namespace {

auto small_targets() -> std::vector<OrientedGraph>
{
    std::vector<OrientedGraph> out;
    for (bool r : {false, true}) {
        for (std::size_t n = 1; n <= 3; ++n)
            out.push_back(transitive_tournament(n, r));
        out.push_back(cycle3(r));
        out.push_back(dominated_cycle(4, r));
        out.push_back(transitive_tournament(4, r));
        // a non-tournament target keeps the solver honest about absent pairs
        out.push_back(OrientedGraph(4, {{0, 1}, {1, 2}, {3, 2}}, r));
    }
    return out;
}

auto counted(const OrientedGraph & g, const OrientedGraph & h, Mode mode) -> SolveResult
{
    return solve(g, h, mode, {true, std::nullopt});
}

} // namespace

TEST_CASE("check_hom")
{
    CHECK(check_hom(cycle3(), cycle3(), std::vector<Vertex>{0, 1, 2}, Mode::ios));
    // ends of the hat collide
    CHECK_FALSE(check_hom(hat(), transitive_tournament(2, true), std::vector<Vertex>{0, 1, 0}, Mode::ios));
    CHECK_FALSE(oracle::valid(hat(), transitive_tournament(2, true), {0, 1, 0}, Mode::ios));
    // ends split over t0 and t1, which is allowed
    CHECK(check_hom(hat(), transitive_tournament(2, true), std::vector<Vertex>{0, 1, 1}, Mode::ios));
    CHECK(oracle::valid(hat(), transitive_tournament(2, true), {0, 1, 1}, Mode::ios));
    CHECK(check_hom(directed_cycle(3), cycle3(true), std::vector<Vertex>{0, 0, 0}, Mode::ios));
    CHECK_FALSE(check_hom(directed_cycle(3), cycle3(), std::vector<Vertex>{0, 0, 0}, Mode::ios));
    CHECK(check_hom(hat(), transitive_tournament(2, true), std::vector<Vertex>{0, 1, 1}, Mode::plain));
    // a directed P3 collapsed onto one loop: ios allows it, iot does not
    CHECK(check_hom(directed_path(3), transitive_tournament(2, true), std::vector<Vertex>{1, 1, 1}, Mode::ios));
    CHECK_FALSE(check_hom(directed_path(3), transitive_tournament(2, true), std::vector<Vertex>{1, 1, 1}, Mode::iot));
    CHECK(check_hom(directed_path(3), transitive_tournament(2, true), std::vector<Vertex>{0, 1, 1}, Mode::iot));
    CHECK_THROWS_AS(check_hom(hat(), cycle3(), std::vector<Vertex>{0, 1}, Mode::ios), InvalidParameter);
    CHECK_THROWS_AS(check_hom(hat(), cycle3(), std::vector<Vertex>{0, 1, 3}, Mode::ios), InvalidParameter);
}

TEST_CASE("basic solves")
{
    auto r = solve(directed_path(3), transitive_tournament(1, true), Mode::iot);
    CHECK_FALSE(r.satisfiable);
    CHECK_FALSE(r.witness);

    for (auto mode : {Mode::plain, Mode::ios, Mode::iot}) {
        auto e = counted(edgeless(3), cycle3(), mode);
        CHECK(e.satisfiable);
        CHECK(*e.count == 27);
    }

    auto empty = solve(edgeless(2), OrientedGraph(0, {}), Mode::ios);
    CHECK_FALSE(empty.satisfiable);
    auto both_empty = counted(OrientedGraph(0, {}), OrientedGraph(0, {}), Mode::ios);
    CHECK(both_empty.satisfiable);
    CHECK(*both_empty.count == 1);

    auto limited = solve(edgeless(3), cycle3(), Mode::ios, {true, 5});
    CHECK(*limited.count == 5);
}

TEST_CASE("pins")
{
    auto k1 = counted(edgeless(1), transitive_tournament(3), Mode::ios);
    CHECK(*k1.count == 3);
    auto pinned = solve_with_pins(edgeless(1), transitive_tournament(3), Mode::ios, {{0, 0}}, {true, std::nullopt});
    CHECK(*pinned.count == 1);
    CHECK(pinned.witness->map == VertexMap{0});

    auto b8 = gadget_B(8);
    auto t3r = transitive_tournament(3, true);
    auto v0 = b8.role("v0");
    REQUIRE(b8.graph.out_degree(v0) == 2);
    CHECK_FALSE(solve_with_pins(b8.graph, t3r, Mode::iot, {{v0, 2}}).satisfiable);
    CHECK(solve(b8.graph, t3r, Mode::iot).satisfiable);

    CHECK_FALSE(solve_with_pins(hat(), cycle3(), Mode::ios, {{0, 0}, {0, 1}}).satisfiable);
    CHECK_THROWS_AS(solve_with_pins(hat(), cycle3(), Mode::ios, {{0, 3}}), InvalidParameter);
    CHECK_THROWS_AS(solve_with_pins(hat(), cycle3(), Mode::ios, {{3, 0}}), InvalidParameter);
}

TEST_CASE("D_2 forcing under enumeration")
{
    auto d2 = gadget_D(2);
    auto x1 = d2.role("x1"), x4 = d2.role("x4");
    std::uint64_t n = for_each_hom(d2.graph, cycle3(true), Mode::ios, {}, [&](std::span<const Vertex> f) {
        CHECK(f[x1] == f[x4]);
        CHECK(check_hom(d2.graph, cycle3(true), f, Mode::ios));
        return true;
    });
    CHECK(n > 0);
}

TEST_CASE("solver agrees with brute force on every graph up to 4 vertices")
{
    auto targets = small_targets();
    for (std::size_t n = 0; n <= 4; ++n)
        for_each_oriented_graph(n, [&](const OrientedGraph & g) {
            for (const auto & h : targets)
                for (auto mode : {Mode::plain, Mode::ios, Mode::iot}) {
                    auto r = counted(g, h, mode);
                    auto expect = oracle::count(g, h, mode);
                    CHECK(*r.count == expect);
                    CHECK(r.satisfiable == (expect > 0));
                    if (r.witness)
                        CHECK(oracle::valid(g, h, r.witness->map, mode));
                }
        });
}

TEST_CASE("the pruned oracle agrees with full enumeration")
{
    auto targets = small_targets();
    for (std::size_t n = 0; n <= 4; ++n)
        for_each_oriented_graph(n, [&](const OrientedGraph & g) {
            for (const auto & h : targets)
                for (auto mode : {Mode::plain, Mode::ios, Mode::iot})
                    CHECK(oracle::search_exists(g, h, mode) == oracle::exists(g, h, mode));
        });
}

TEST_CASE("solver agrees with brute force on random 5-vertex graphs")
{
    auto targets = small_targets();
    std::mt19937 rng(2024);
    for (int i = 0; i < 400; ++i) {
        auto g = random_oriented_graph(5, rng, 0.3 + 0.1 * (i % 5));
        const auto & h = targets[i % targets.size()];
        for (auto mode : {Mode::plain, Mode::ios, Mode::iot}) {
            auto r = counted(g, h, mode);
            CHECK(*r.count == oracle::count(g, h, mode));
        }
    }
}

TEST_CASE("witnesses validate and enumeration visits distinct valid maps")
{
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto g = random_oriented_graph(4 + i % 4, rng, 0.4);
        auto h = (i % 2) ? cycle3(true) : dominated_cycle(4, true);
        auto mode = (i % 3 == 0) ? Mode::iot : Mode::ios;
        std::set<VertexMap> seen;
        auto visited = for_each_hom(g, h, mode, {}, [&](std::span<const Vertex> f) {
            CHECK(oracle::valid(g, h, VertexMap(f.begin(), f.end()), mode));
            seen.insert(VertexMap(f.begin(), f.end()));
            return true;
        });
        CHECK(seen.size() == visited);
        auto r = solve(g, h, mode);
        CHECK(r.satisfiable == (visited > 0));
        if (r.witness)
            CHECK(check_hom(g, h, r.witness->map, mode));
    }
}

TEST_CASE("mode monotonicity and irreflexive collapse")
{
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
        auto g = random_oriented_graph(3 + i % 6, rng, 0.35);
        for (const auto & h : small_targets()) {
            bool plain = solve(g, h, Mode::plain).satisfiable;
            bool ios = solve(g, h, Mode::ios).satisfiable;
            bool iot = solve(g, h, Mode::iot).satisfiable;
            CHECK((! iot || ios));
            CHECK((! ios || plain));
            if (! h.reflexive())
                CHECK(ios == iot);
        }
    }
}

TEST_CASE("converse symmetry")
{
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        auto g = random_oriented_graph(3 + i % 5, rng, 0.4);
        for (const auto & h : small_targets())
            for (auto mode : {Mode::ios, Mode::iot})
                CHECK(*counted(g, h, mode).count == *counted(converse(g), converse(h), mode).count);
    }
}

TEST_CASE("composition of injective homomorphisms")
{
    std::mt19937 rng(31);
    auto k = dominated_cycle(5, true);
    auto k_irr = dominated_cycle(5);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        auto g = random_oriented_graph(4 + i % 4, rng, 0.35);
        // the middle graph is an input to the second map, so it has no loops
        auto h = random_oriented_graph(3 + i % 4, rng, 0.6);
        for (auto mode : {Mode::ios, Mode::iot}) {
            auto f = solve(g, h, mode);
            auto s = solve(h, k, mode);
            if (! f.satisfiable || ! s.satisfiable)
                continue;
            ++checked;
            CHECK(check_hom(g, k, compose(f.witness->map, s.witness->map), mode));
            auto s2 = solve(h, k_irr, mode);
            if (s2.satisfiable)
                CHECK(check_hom(g, k_irr, compose(f.witness->map, s2.witness->map), mode));
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("deterministic witnesses")
{
    auto x = gadget_X(3);
    auto a = solve(x.graph, cycle3(true), Mode::ios);
    auto b = solve(x.graph, cycle3(true), Mode::ios);
    CHECK(a.witness->map == b.witness->map);
    CHECK(a.nodes_explored == b.nodes_explored);
}
