#include <injhom/error.hpp>
#include <injhom/gadgets.hpp>
#include <injhom/generators.hpp>
#include <injhom/poly.hpp>
#include <injhom/reductions.hpp>
#include <injhom/verify.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

namespace injhom {

namespace {

class Reporter {
public:
    Reporter(std::string name, std::ostream & out) : out_(out) { report_.name = std::move(name); }

    auto item(const std::string & what, bool ok) -> void
    {
        out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
        ++(ok ? report_.passed : report_.failed);
    }

    auto finish() -> SuiteReport
    {
        out_ << report_.name << ": " << report_.passed << " passed, " << report_.failed << " failed\n";
        return report_;
    }

private:
    std::ostream & out_;
    SuiteReport report_;
};

auto brute_force_exists(const OrientedGraph & g, const OrientedGraph & h, Mode mode) -> bool
{
    const auto n = g.order();
    const auto k = h.order();
    if (n == 0)
        return true;
    if (k == 0)
        return false;
    VertexMap f(n, 0);
    while (true) {
        if (check_hom(g, h, f, mode))
            return true;
        std::size_t i = 0;
        while (i < n && f[i] == k - 1)
            f[i++] = 0;
        if (i == n)
            return false;
        ++f[i];
    }
}

/// For every enumerated witness, all of vs share one image. Returns the witness count, or 0 on a violation.
auto constant_images(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const std::vector<Vertex> & vs,
    const Pins & pins = {}) -> std::uint64_t
{
    bool ok = true;
    auto n = for_each_hom(g, h, mode, pins, [&](std::span<const Vertex> f) {
        for (auto v : vs)
            if (f[v] != f[vs.front()])
                ok = false;
        return ok;
    });
    return ok ? n : 0;
}

auto run_lemma_D(Reporter & r) -> void
{
    const auto c3r = cycle3(true);
    for (std::size_t d = 1; d <= 4; ++d) {
        auto g = gadget_D(d);
        std::vector<Vertex> xs;
        for (std::size_t t = 1; t <= 3 * d - 2; t += 3)
            xs.push_back(g.role("x" + std::to_string(t)));
        r.item("D_" + std::to_string(d) + " has 9d vertices and 12d arcs",
            g.graph.order() == 9 * d && g.graph.size() == 12 * d);
        r.item("D_" + std::to_string(d) + " to C3r (ios): x1, x4, ... share one image",
            constant_images(g.graph, c3r, Mode::ios, xs) > 0);
    }
    r.item("D_1 has no ios map to T3r", ! solve(gadget_D(1).graph, transitive_tournament(3, true), Mode::ios).satisfiable);
    for (std::size_t d = 2; d <= 4; ++d) {
        auto x = gadget_X(d);
        auto cycle = x_forced_cycle(x);
        auto name = "X_" + std::to_string(d);
        r.item(name + " to C3r (ios): forced cycle shares one image", constant_images(x.graph, c3r, Mode::ios, cycle) > 0);
        bool extends = true;
        for (Vertex c = 0; c < 3; ++c) {
            Pins pins;
            for (auto v : cycle)
                pins.emplace_back(v, c);
            extends = extends && solve_with_pins(x.graph, c3r, Mode::ios, pins).satisfiable;
        }
        r.item(name + " every constant pinning of the forced cycle extends", extends);
    }
}

auto run_lemma_B(Reporter & r) -> void
{
    const auto c3r = cycle3(true);
    const auto t3r = transitive_tournament(3, true);
    for (std::size_t n = 4; n <= 24; n += 2) {
        auto b = gadget_B(n).graph;
        auto name = "B_" + std::to_string(n);
        r.item(name + " to C3r (iot) " + (n % 6 == 0 ? "yes" : "no"), solve(b, c3r, Mode::iot).satisfiable == (n % 6 == 0));
        if (n <= 20)
            r.item(name + " to T3r (iot) " + (n % 4 == 0 ? "yes" : "no"),
                solve(b, t3r, Mode::iot).satisfiable == (n % 4 == 0));
    }
    for (std::size_t n = 6; n <= 24; n += 6) {
        auto b = gadget_B(n).graph;
        bool ok = true;
        auto count = for_each_hom(b, c3r, Mode::iot, {}, [&](std::span<const Vertex> f) {
            for (std::size_t i = 0; i < n; ++i)
                ok = ok && f[i] == f[i % 6];
            return ok;
        });
        r.item("B_" + std::to_string(n) + " C3r witnesses constant on classes mod 6", ok && count > 0);
    }
}

auto run_gadget_F(Reporter & r) -> void
{
    const auto f = gadget_F();
    const auto t3r = transitive_tournament(3, true);
    const auto u = f.role("u"), v = f.role("v");
    r.item("F has 40 vertices and 48 arcs", f.graph.order() == 40 && f.graph.size() == 48);
    r.item("u and v have in-degree 1", f.graph.in_degree(u) == 1 && f.graph.in_degree(v) == 1);
    for (auto mode : {Mode::ios, Mode::iot})
        for (Vertex x = 0; x < 3; ++x) {
            bool ok = true;
            auto n = for_each_hom(f.graph, t3r, mode, {{u, x}}, [&](std::span<const Vertex> w) {
                ok = ok && w[v] == x;
                return ok;
            });
            r.item("F " + to_string(mode) + " u->t" + std::to_string(x) + ": " + std::to_string(n) + " witnesses, all v->t" +
                    std::to_string(x),
                ok && n > 0);
        }
}

auto solve_instance(const ReductionInstance & inst) -> bool
{
    return solve(inst.graph, build_named(inst.target), inst.mode).satisfiable;
}

auto owned_once(const ReductionInstance & inst) -> bool
{
    std::vector<int> owners(inst.graph.order(), 0);
    for (const auto & e : inst.provenance)
        for (auto v : e.owned) {
            if (v >= owners.size())
                return false;
            ++owners[v];
        }
    return std::all_of(owners.begin(), owners.end(), [](int c) { return c == 1; });
}

/// One representative per isomorphism class of simple graphs on n <= 6
/// vertices satisfying keep.
auto simple_graphs(std::size_t n, const std::function<bool(const SimpleGraph &)> & keep) -> std::vector<SimpleGraph>
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        index[pairs[p].first][pairs[p].second] = p;
        index[pairs[p].second][pairs[p].first] = p;
    }
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    std::vector<SimpleGraph> out;
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << pairs.size()); ++code) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (code >> p & 1u)
                edges.push_back(pairs[p]);
        SimpleGraph g(n, edges);
        if (! keep(g))
            continue;
        auto best = code;
        for (const auto & q : perms) {
            std::uint32_t c = 0;
            for (const auto & [a, b] : edges)
                c |= std::uint32_t{1} << index[q[a]][q[b]];
            best = std::min(best, c);
        }
        if (seen.insert(best).second)
            out.push_back(std::move(g));
    }
    return out;
}

auto petersen() -> SimpleGraph
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return SimpleGraph(10, e);
}

auto corpus_item(Reporter & r, const std::string & name, const std::vector<SimpleGraph> & corpus,
    const std::function<bool(const SimpleGraph &)> & oracle,
    const std::function<ReductionInstance(const SimpleGraph &)> & reduce) -> void
{
    std::size_t agree = 0, yes = 0;
    bool provenance = true;
    for (const auto & g : corpus) {
        auto inst = reduce(g);
        auto expected = oracle(g);
        provenance = provenance && owned_once(inst);
        if (solve_instance(inst) == expected)
            ++agree;
        yes += expected;
    }
    r.item(name + ": " + std::to_string(agree) + "/" + std::to_string(corpus.size()) + " agree with the oracle (" +
            std::to_string(yes) + " yes)",
        agree == corpus.size() && ! corpus.empty());
    r.item(name + ": provenance owns every vertex once", provenance);
}

auto run_reductions(Reporter & r) -> void
{
    auto k4 = complete_graph(4);
    auto k33 = complete_bipartite(3, 3);
    auto k3 = complete_graph(3);

    auto t5_k33 = reduce_3col_to_iosC3r(k33);
    auto t5_k4 = reduce_3col_to_iosC3r(k4);
    r.item("3-colouring -> ios C3r: K4 has 138 vertices", t5_k4.graph.order() == 4 * 30 + 6 * 3);
    r.item("3-colouring -> ios C3r: K_{3,3} yes", solve_instance(t5_k33));
    r.item("3-colouring -> ios C3r: K4 no", ! solve_instance(t5_k4));

    for (auto mode : {Mode::ios, Mode::iot}) {
        auto tag = "3-edge-colouring -> " + to_string(mode) + " T3r: ";
        auto a = reduce_3edge_to_T3r(k4, mode);
        r.item(tag + "K4 has 244 vertices", a.graph.order() == 244);
        r.item(tag + "K4 yes", solve_instance(a));
        r.item(tag + "K_{3,3} yes", solve_instance(reduce_3edge_to_T3r(k33, mode)));
        r.item(tag + "Petersen no", ! solve_instance(reduce_3edge_to_T3r(petersen(), mode)));
    }

    auto t11 = reduce_3col_to_iotC3r(k3);
    r.item("3-colouring -> iot C3r: K3 has 45 vertices", t11.graph.order() == 45);
    r.item("3-colouring -> iot C3r: K3 yes", solve_instance(t11));
    r.item("3-colouring -> iot C3r: K4 no", ! solve_instance(reduce_3col_to_iotC3r(k4)));

    auto u4 = reduce_3edge_to_U4(k4);
    r.item("3-edge-colouring -> U4: K4 has 28 vertices", u4.graph.order() == 28);
    r.item("3-edge-colouring -> U4: K4 yes", solve_instance(u4));
    r.item("3-edge-colouring -> U5: K4 yes", solve_instance(lift_to_Um(u4, 5)));
    r.item("3-edge-colouring -> U4: Petersen no", ! solve_instance(reduce_3edge_to_U4(petersen())));

    auto min3 = [](const SimpleGraph & g) { return g.min_degree() >= 3; };
    auto cubic = [](const SimpleGraph & g) { return g.is_cubic(); };
    auto connected = [](const SimpleGraph & g) { return g.order() >= 2 && g.connected(); };
    std::vector<SimpleGraph> dense, cubics, linked;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (auto & g : simple_graphs(n, min3))
            dense.push_back(std::move(g));
        for (auto & g : simple_graphs(n, cubic))
            cubics.push_back(std::move(g));
        for (auto & g : simple_graphs(n, connected))
            linked.push_back(std::move(g));
    }
    cubics.push_back(petersen());
    auto colourable = [](const SimpleGraph & g) { return oracle_3col(g); };
    auto edge_colourable = [](const SimpleGraph & g) { return oracle_3edge(g); };
    corpus_item(r, "3-colouring -> ios C3r, min degree 3 up to 6 vertices", dense, colourable,
        [](const SimpleGraph & g) { return reduce_3col_to_iosC3r(g); });
    corpus_item(r, "3-colouring -> iot C3r, connected up to 6 vertices", linked, colourable,
        [](const SimpleGraph & g) { return reduce_3col_to_iotC3r(g); });
    for (auto mode : {Mode::ios, Mode::iot})
        corpus_item(r, "3-edge-colouring -> " + to_string(mode) + " T3r, cubic up to 6 vertices and Petersen", cubics,
            edge_colourable, [mode](const SimpleGraph & g) { return reduce_3edge_to_T3r(g, mode); });
    corpus_item(r, "3-edge-colouring -> U4, cubic", cubics, edge_colourable,
        [](const SimpleGraph & g) { return reduce_3edge_to_U4(g); });
    corpus_item(r, "3-edge-colouring -> U6, cubic", cubics, edge_colourable,
        [](const SimpleGraph & g) { return lift_to_Um(reduce_3edge_to_U4(g), 6); });

    // randomised edge orderings
    std::mt19937 rng(1);
    bool shuffled = true;
    for (int round = 0; round < 5; ++round) {
        auto a = k4, b = k33, c = complete_graph(3);
        a.shuffle_orderings(rng);
        b.shuffle_orderings(rng);
        c.shuffle_orderings(rng);
        shuffled = shuffled && ! solve_instance(reduce_3col_to_iosC3r(a)) && solve_instance(reduce_3col_to_iosC3r(b)) &&
            solve_instance(reduce_3edge_to_T3r(a, Mode::iot)) && solve_instance(reduce_3edge_to_T3r(b, Mode::ios)) &&
            ! solve_instance(reduce_3col_to_iotC3r(a)) && solve_instance(reduce_3col_to_iotC3r(c));
    }
    r.item("answers unchanged under random edge orderings", shuffled);

    // C3r sources into U_m^r
    std::vector<OrientedGraph> sources{edgeless(1), transitive_tournament(2), hat(), directed_cycle(3), directed_cycle(4),
        directed_cycle(6), gadget_D(1).graph, gadget_B(6).graph, gadget_B(8).graph, gadget_B(12).graph};
    std::mt19937 grng(20);
    for (int i = 0; i < 150; ++i)
        sources.push_back(random_oriented_graph(2 + i % 11, grng, 0.15 + 0.05 * (i % 5)));
    const auto c3r = cycle3(true);
    for (std::size_t m = 4; m <= 6; ++m) {
        std::size_t ios_total = 0, ios_agree = 0, iot_total = 0, iot_agree = 0;
        for (const auto & g : sources) {
            if (g.max_in_degree() <= 2 && g.max_out_degree() <= 2) {
                ++ios_total;
                ios_agree += solve(g, c3r, Mode::ios).satisfiable == solve_instance(reduce_iosC3r_to_iosUmr(g, m));
            }
            ++iot_total;
            iot_agree += solve(g, c3r, Mode::iot).satisfiable == solve_instance(reduce_iotC3r_to_iotUmr(g, m));
        }
        auto ms = std::to_string(m);
        r.item("ios C3r -> ios U" + ms + "r: " + std::to_string(ios_agree) + "/" + std::to_string(ios_total) + " agree",
            ios_agree == ios_total);
        r.item("iot C3r -> iot U" + ms + "r: " + std::to_string(iot_agree) + "/" + std::to_string(iot_total) + " agree",
            iot_agree == iot_total);
    }
}

struct Covered {
    const char * target;
    Mode mode;
};

constexpr Covered covered_cases[] = {
    {"T1", Mode::ios}, {"T2", Mode::ios}, {"T3", Mode::ios}, {"C3", Mode::ios},
    {"T1", Mode::iot}, {"T2", Mode::iot}, {"T3", Mode::iot}, {"C3", Mode::iot},
    {"T1r", Mode::ios}, {"T2r", Mode::ios}, {"T1r", Mode::iot}, {"T2r", Mode::iot},
};

auto run_oracle_equivalence(Reporter & r) -> void
{
    std::vector<OrientedGraph> corpus;
    for (std::size_t n = 0; n <= 4; ++n)
        for_each_oriented_graph(n, [&](const OrientedGraph & g) { corpus.push_back(g); });
    std::mt19937 rng(500);
    for (int i = 0; i < 500; ++i)
        corpus.push_back(random_oriented_graph(5 + i % 2, rng, 0.15 + 0.05 * (i % 6)));

    for (const auto & c : covered_cases) {
        auto spec = TargetSpec::parse(c.target);
        auto h = build_named(spec);
        std::size_t agree = 0;
        bool witnesses = true;
        for (const auto & g : corpus) {
            auto v = decide_poly(g, spec, c.mode);
            if (! v)
                continue;
            agree += v->satisfiable == brute_force_exists(g, h, c.mode);
            if (v->satisfiable)
                witnesses = witnesses && v->witness && check_hom(g, h, v->witness->map, c.mode);
        }
        r.item(std::string(c.target) + " " + to_string(c.mode) + ": " + std::to_string(agree) + "/" +
                std::to_string(corpus.size()) + " agree with brute force, witnesses valid",
            agree == corpus.size() && witnesses);
    }

    std::size_t agree = 0, total = 0;
    const auto t2r = transitive_tournament(2, true);
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_oriented_graph(n, [&](const OrientedGraph & g) {
            if (g.max_in_degree() > 2 || g.max_out_degree() > 2)
                return;
            ++total;
            agree += solve_2sat(build_2sat_T2r_ios(g)).has_value() == brute_force_exists(g, t2r, Mode::ios);
        });
    r.item("2-SAT clauses for T2r ios: " + std::to_string(agree) + "/" + std::to_string(total) + " agree up to 5 vertices",
        agree == total);
}

} // namespace

auto suite_names() -> std::vector<std::string>
{
    return {"lemma-D", "lemma-B", "gadget-F", "reductions", "oracle-equivalence"};
}

auto run_suite(const std::string & name, std::ostream & out) -> SuiteReport
{
    Reporter r(name, out);
    if (name == "lemma-D")
        run_lemma_D(r);
    else if (name == "lemma-B")
        run_lemma_B(r);
    else if (name == "gadget-F")
        run_gadget_F(r);
    else if (name == "reductions")
        run_reductions(r);
    else if (name == "oracle-equivalence")
        run_oracle_equivalence(r);
    else
        throw InvalidParameter("unknown suite '" + name + "'");
    return r.finish();
}

} // namespace injhom
