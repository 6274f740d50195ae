#include <doctest.h>

#include "oracle.hpp"

#include <injhom/chromatic.hpp>
#include <injhom/error.hpp>
#include <injhom/generators.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace injhom;

namespace {

auto isomorphic(const OrientedGraph & a, const OrientedGraph & b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool all = true;
        for (const auto & arc : a.arcs())
            if (! b.has_arc(perm[arc.tail], perm[arc.head])) {
                all = false;
                break;
            }
        if (all)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

auto all_tournaments(std::size_t k) -> std::vector<OrientedGraph>
{
    std::vector<OrientedGraph> out;
    std::size_t pairs = k * (k - 1) / 2;
    for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
        std::vector<Arc> arcs;
        std::size_t p = 0;
        for (Vertex i = 0; i < k; ++i)
            for (Vertex j = i + 1; j < k; ++j, ++p)
                if (code >> p & 1u)
                    arcs.push_back({i, j});
                else
                    arcs.push_back({j, i});
        out.emplace_back(k, std::move(arcs));
    }
    return out;
}

// Smallest k for which some labelled tournament on k vertices takes g.
auto naive_chi(const OrientedGraph & g, bool reflexive, Mode mode) -> std::size_t
{
    for (std::size_t k = 1; k <= 5; ++k)
        for (const auto & t : all_tournaments(k))
            if (oracle::exists(g, t.with_reflexive(reflexive), mode))
                return k;
    return 0;
}

} // namespace

TEST_CASE("catalogue sizes and coverage")
{
    const std::size_t expected[] = {0, 1, 1, 2, 4, 12, 56};
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto & cat = enumerate_tournaments(k);
        CHECK(cat.k == k);
        CHECK(cat.members.size() == expected[k]);
        for (const auto & m : cat.members)
            CHECK(m.is_tournament());
    }
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto & members = enumerate_tournaments(k).members;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                CHECK_FALSE(isomorphic(members[i], members[j]));
        for (const auto & t : all_tournaments(k)) {
            auto hits = std::count_if(members.begin(), members.end(), [&](const auto & m) { return isomorphic(t, m); });
            CHECK(hits == 1);
        }
    }
    auto three = enumerate_tournaments(3).members;
    CHECK(std::any_of(three.begin(), three.end(), [](const auto & m) { return isomorphic(m, cycle3()); }));
    CHECK(std::any_of(three.begin(), three.end(), [](const auto & m) { return isomorphic(m, transitive_tournament(3)); }));
    CHECK_THROWS_AS(enumerate_tournaments(7), SizeCapExceeded);
    CHECK(canonical_code(cycle3()) == canonical_code(converse(cycle3())));
}

TEST_CASE("chi on small named graphs")
{
    for (auto flavour : {ColouringFlavour::proper_ios, ColouringFlavour::improper_ios, ColouringFlavour::improper_iot}) {
        auto r = chi(edgeless(4), flavour);
        CHECK(r.resolved);
        CHECK(r.k == 1);
    }
    auto p3 = chi(directed_path(3), ColouringFlavour::improper_iot);
    CHECK(p3.k == 2);
    CHECK(p3.tournament->reflexive());
    CHECK(check_hom(directed_path(3), *p3.tournament, p3.witness->map, Mode::iot));
    CHECK(chi(hat(), ColouringFlavour::improper_ios).k == 2);
    CHECK(chi(cycle3(), ColouringFlavour::proper_ios).k == 3);
    CHECK(has_colouring(hat(), 2, ColouringFlavour::improper_ios));
    CHECK_FALSE(has_colouring(hat(), 1, ColouringFlavour::improper_ios));
}

TEST_CASE("chi matches a brute-force search over labelled tournaments")
{
    std::mt19937 rng(4);
    for (int i = 0; i < 60; ++i) {
        auto g = random_oriented_graph(3 + i % 2, rng, 0.6);
        for (auto flavour : {ColouringFlavour::proper_ios, ColouringFlavour::improper_ios, ColouringFlavour::improper_iot})
            CHECK(chi(g, flavour).k == naive_chi(g, flavour_reflexive(flavour), flavour_mode(flavour)));
    }
}

TEST_CASE("chi orderings and monotonicity")
{
    std::mt19937 rng(9);
    for (int i = 0; i < 80; ++i) {
        auto g = random_oriented_graph(4 + i % 4, rng, 0.3);
        auto proper = chi(g, ColouringFlavour::proper_ios);
        auto ios = chi(g, ColouringFlavour::improper_ios);
        auto iot = chi(g, ColouringFlavour::improper_iot);
        REQUIRE(proper.resolved);
        CHECK(ios.k <= iot.k);
        CHECK(proper.k >= ios.k);

        // add one arc between a non-adjacent pair
        std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
        bool added = false;
        for (Vertex a = 0; a < g.order() && ! added; ++a)
            for (Vertex b = a + 1; b < g.order() && ! added; ++b)
                if (! g.adjacent(a, b)) {
                    arcs.push_back({b, a});
                    added = true;
                }
        if (! added)
            continue;
        OrientedGraph more(g.order(), arcs);
        CHECK(chi(more, ColouringFlavour::proper_ios).k >= proper.k);
        CHECK(chi(more, ColouringFlavour::improper_ios).k >= ios.k);
        auto iot_more = chi(more, ColouringFlavour::improper_iot);
        if (iot.resolved)
            CHECK((! iot_more.resolved || iot_more.k >= iot.k));
    }
}

TEST_CASE("irreflexive catalogue search does not depend on the mode")
{
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        auto g = random_oriented_graph(4 + i % 3, rng, 0.4);
        for (std::size_t k = 1; k <= 4; ++k)
            for (const auto & t : enumerate_tournaments(k).members)
                CHECK(solve(g, t, Mode::ios).satisfiable == solve(g, t, Mode::iot).satisfiable);
    }
}

TEST_CASE("U_m forcing")
{
    auto u4 = dominated_cycle(4);
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(check_Um_forcing(u4, all, u4, Mode::ios));
    CHECK(check_Um_forcing(u4, all, transitive_tournament(4), Mode::ios));
    auto padded = disjoint_union(u4, edgeless(1));
    for (const auto & t : enumerate_tournaments(4).members) {
        CHECK(check_Um_forcing(padded, all, t.with_reflexive(true), Mode::iot));
        CHECK(check_Um_forcing(padded, all, t.with_reflexive(true), Mode::ios));
    }
    // a graph without the common-neighbour property is not forced
    auto c3 = directed_cycle(3);
    std::vector<Vertex> cyc{0, 1, 2};
    CHECK_FALSE(check_Um_forcing(c3, cyc, cycle3(true), Mode::ios));
    CHECK_THROWS_AS(check_Um_forcing(u4, std::vector<Vertex>{4}, u4, Mode::ios), InvalidParameter);
}
