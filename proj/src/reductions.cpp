#include <injhom/error.hpp>
#include <injhom/gadgets.hpp>
#include <injhom/reductions.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>

namespace injhom {

SimpleGraph::SimpleGraph(std::size_t order, std::vector<std::pair<Vertex, Vertex>> edges) :
    edges_(std::move(edges)),
    incident_(order)
{
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [a, b] = edges_[e];
        if (a >= order || b >= order)
            throw InvalidParameter("edge endpoint out of range");
        if (a == b)
            throw InvalidParameter("loop at " + std::to_string(a));
        if (! seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw InvalidParameter("repeated edge " + std::to_string(a) + " " + std::to_string(b));
        incident_[a].push_back(e);
        incident_[b].push_back(e);
    }
    for (Vertex v = 0; v < order; ++v)
        std::sort(incident_[v].begin(), incident_[v].end(),
            [&](std::size_t e, std::size_t f) { return other_end(e, v) < other_end(f, v); });
}

auto SimpleGraph::underlying(const OrientedGraph & g) -> SimpleGraph
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto & a : g.arcs())
        edges.emplace_back(a.tail, a.head);
    return SimpleGraph(g.order(), std::move(edges));
}

auto SimpleGraph::min_degree() const -> std::size_t
{
    std::size_t best = order() == 0 ? 0 : static_cast<std::size_t>(-1);
    for (const auto & inc : incident_)
        best = std::min(best, inc.size());
    return best;
}

auto SimpleGraph::is_cubic() const -> bool
{
    return std::all_of(incident_.begin(), incident_.end(), [](const auto & inc) { return inc.size() == 3; });
}

auto SimpleGraph::connected() const -> bool
{
    if (order() == 0)
        return true;
    std::vector<bool> seen(order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto e : incident_[v]) {
            auto w = other_end(e, v);
            if (! seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == order();
}

auto SimpleGraph::rank(Vertex v, std::size_t e) const -> std::size_t
{
    const auto & inc = incident_[v];
    auto it = std::find(inc.begin(), inc.end(), e);
    if (it == inc.end())
        throw InvalidParameter("edge " + std::to_string(e) + " is not incident with " + std::to_string(v));
    return static_cast<std::size_t>(it - inc.begin()) + 1;
}

auto SimpleGraph::other_end(std::size_t e, Vertex v) const -> Vertex
{
    auto [a, b] = edges_[e];
    return a == v ? b : a;
}

auto SimpleGraph::shuffle_orderings(std::mt19937 & rng) -> void
{
    for (auto & inc : incident_)
        std::shuffle(inc.begin(), inc.end(), rng);
}

auto complete_graph(std::size_t n) -> SimpleGraph
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

auto complete_bipartite(std::size_t a, std::size_t b) -> SimpleGraph
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            edges.emplace_back(i, static_cast<Vertex>(a + j));
    return SimpleGraph(a + b, std::move(edges));
}

auto cycle_graph(std::size_t n) -> SimpleGraph
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return SimpleGraph(n, std::move(edges));
}

auto to_string(SourceKind kind) -> std::string
{
    switch (kind) {
        case SourceKind::vertex_3_colouring: return "vertex-3-colouring";
        case SourceKind::cubic_3_edge_colouring: return "cubic-3-edge-colouring";
        case SourceKind::ios_C3r: return "ios-C3r";
        case SourceKind::iot_C3r: return "iot-C3r";
    }
    return "?";
}

namespace {

class InstanceBuilder {
public:
    auto entry(std::string source) -> std::size_t
    {
        entries_.push_back({std::move(source), {}, {}});
        return entries_.size() - 1;
    }

    auto fresh(std::size_t owner) -> Vertex
    {
        auto v = static_cast<Vertex>(order_++);
        entries_[owner].owned.push_back(v);
        return v;
    }

    /// Copies g in with consecutive new vertices; returns the first index.
    auto embed(std::size_t owner, const OrientedGraph & g) -> Vertex
    {
        auto base = static_cast<Vertex>(order_);
        for (Vertex v = 0; v < g.order(); ++v)
            fresh(owner);
        for (const auto & a : g.arcs())
            arc(base + a.tail, base + a.head);
        return base;
    }

    auto arc(Vertex tail, Vertex head) -> void { arcs_.push_back({tail, head}); }

    auto role(std::size_t owner, std::string name, Vertex v) -> void
    {
        entries_[owner].roles.emplace_back(std::move(name), v);
    }

    auto finish(SourceKind kind, TargetSpec target, Mode mode) -> ReductionInstance
    {
        return ReductionInstance{OrientedGraph(order_, std::move(arcs_)), kind, std::move(target), mode, std::move(entries_)};
    }

private:
    std::size_t order_ = 0;
    std::vector<Arc> arcs_;
    std::vector<ProvenanceEntry> entries_;
};

auto write_ranges(std::ostream & out, std::vector<Vertex> vs) -> void
{
    std::sort(vs.begin(), vs.end());
    bool first = true;
    for (std::size_t i = 0; i < vs.size();) {
        std::size_t j = i;
        while (j + 1 < vs.size() && vs[j + 1] == vs[j] + 1)
            ++j;
        if (! first)
            out << ',';
        first = false;
        out << vs[i];
        if (j > i)
            out << ".." << vs[j];
        i = j + 1;
    }
}

} // namespace

auto write_provenance(std::ostream & out, const ReductionInstance & inst) -> void
{
    out << "# source-kind " << to_string(inst.source_kind) << " target " << inst.target.name << " mode "
        << to_string(inst.mode) << '\n';
    for (const auto & e : inst.provenance) {
        out << e.source << ": owned=";
        write_ranges(out, e.owned);
        for (const auto & [name, v] : e.roles)
            out << ' ' << name << '=' << v;
        out << '\n';
    }
}

auto reduce_3col_to_iosC3r(const SimpleGraph & g, IosEdgeLink link) -> ReductionInstance
{
    if (g.min_degree() < 3)
        throw InvalidParameter("3-colouring source needs minimum degree at least 3");
    InstanceBuilder b;
    std::vector<Gadget> copies;
    std::vector<Vertex> base(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        auto owner = b.entry("vertex " + std::to_string(x));
        auto gadget = gadget_X(g.degree(x));
        base[x] = b.embed(owner, gadget.graph);
        for (const auto & [name, v] : gadget.roles)
            b.role(owner, name, base[x] + v);
        copies.push_back(std::move(gadget));
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
        auto [w, z] = g.endpoints(e);
        auto owner = b.entry("edge " + std::to_string(e));
        auto u = b.fresh(owner);
        auto nw = base[w] + copies[w].role("n" + std::to_string(g.rank(w, e)));
        auto nz = base[z] + copies[z].role("n" + std::to_string(g.rank(z, e)));
        if (link == IosEdgeLink::direct) {
            b.arc(nw, u);
            b.arc(nz, u);
        }
        else {
            auto mw = b.fresh(owner);
            auto mz = b.fresh(owner);
            b.arc(nw, mw);
            b.arc(mw, u);
            b.arc(nz, mz);
            b.arc(mz, u);
            b.role(owner, "mid_" + std::to_string(w), mw);
            b.role(owner, "mid_" + std::to_string(z), mz);
        }
        b.role(owner, "u", u);
        b.role(owner, "n_" + std::to_string(w), nw);
        b.role(owner, "n_" + std::to_string(z), nz);
    }
    return b.finish(SourceKind::vertex_3_colouring, TargetSpec::cycle3(true), Mode::ios);
}

auto reduce_3edge_to_T3r(const SimpleGraph & g, Mode mode) -> ReductionInstance
{
    if (mode != Mode::ios && mode != Mode::iot)
        throw InvalidParameter("T3r reduction is defined for ios and iot");
    if (! g.is_cubic())
        throw InvalidParameter("3-edge-colouring source must be cubic");
    InstanceBuilder b;
    const auto star = gadget_instar();
    std::vector<Vertex> base(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        auto owner = b.entry("vertex " + std::to_string(x));
        base[x] = b.embed(owner, star.graph);
        for (const auto & [name, v] : star.roles)
            b.role(owner, name, base[x] + v);
    }
    const auto f = gadget_F();
    const auto fu = f.role("u"), fv = f.role("v");
    for (std::size_t e = 0; e < g.size(); ++e) {
        auto [x, y] = g.endpoints(e);
        auto owner = b.entry("edge " + std::to_string(e));
        std::vector<Vertex> place(f.graph.order());
        place[fu] = base[x] + star.role("leaf" + std::to_string(g.rank(x, e)));
        place[fv] = base[y] + star.role("leaf" + std::to_string(g.rank(y, e)));
        for (Vertex v = 0; v < f.graph.order(); ++v)
            if (v != fu && v != fv)
                place[v] = b.fresh(owner);
        for (const auto & a : f.graph.arcs())
            b.arc(place[a.tail], place[a.head]);
        b.role(owner, "u", place[fu]);
        b.role(owner, "v", place[fv]);
    }
    return b.finish(SourceKind::cubic_3_edge_colouring, TargetSpec::transitive(3, true), mode);
}

auto reduce_3col_to_iotC3r(const SimpleGraph & g) -> ReductionInstance
{
    if (! g.connected())
        throw InvalidParameter("3-colouring source must be connected");
    if (g.min_degree() < 1)
        throw InvalidParameter("3-colouring source needs at least one edge at every vertex");
    InstanceBuilder b;
    std::vector<Vertex> base(g.order());
    // x_j is B's v_{j+1}: the odd vertices of B are its in-degree-2 class.
    auto x_role = [&](Vertex x, std::size_t j) {
        auto n = 6 * g.degree(x);
        return static_cast<Vertex>(base[x] + (j + 1) % n);
    };
    for (Vertex x = 0; x < g.order(); ++x) {
        auto owner = b.entry("vertex " + std::to_string(x));
        auto n = 6 * g.degree(x);
        base[x] = b.embed(owner, gadget_B(n).graph);
        for (std::size_t j = 0; j < n; ++j)
            b.role(owner, "x" + std::to_string(j), x_role(x, j));
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
        auto [x, y] = g.endpoints(e);
        auto owner = b.entry("edge " + std::to_string(e));
        auto apex = b.fresh(owner);
        auto mx = b.fresh(owner);
        auto my = b.fresh(owner);
        auto from_x = x_role(x, 6 * (g.rank(x, e) - 1));
        auto from_y = x_role(y, 6 * (g.rank(y, e) - 1));
        b.arc(from_x, mx);
        b.arc(mx, apex);
        b.arc(from_y, my);
        b.arc(my, apex);
        b.role(owner, "t", apex);
        b.role(owner, "mid_" + std::to_string(x), mx);
        b.role(owner, "mid_" + std::to_string(y), my);
    }
    return b.finish(SourceKind::vertex_3_colouring, TargetSpec::cycle3(true), Mode::iot);
}

auto reduce_3edge_to_U4(const SimpleGraph & g) -> ReductionInstance
{
    if (! g.is_cubic())
        throw InvalidParameter("3-edge-colouring source must be cubic");
    InstanceBuilder b;
    for (Vertex x = 0; x < g.order(); ++x) {
        auto owner = b.entry("vertex " + std::to_string(x));
        b.role(owner, "x", b.fresh(owner));
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
        auto [x, y] = g.endpoints(e);
        auto owner = b.entry("edge " + std::to_string(e));
        Vertex path[4];
        for (auto & v : path)
            v = b.fresh(owner);
        b.arc(x, path[0]);
        b.arc(path[0], path[1]);
        b.arc(path[1], path[2]);
        b.arc(path[2], path[3]);
        b.arc(y, path[3]);
        for (int i = 0; i < 4; ++i)
            b.role(owner, "v" + std::to_string(i + 1), path[i]);
    }
    return b.finish(SourceKind::cubic_3_edge_colouring, TargetSpec::dominated_cycle(4), Mode::ios);
}

auto lift_to_Um(const ReductionInstance & inst, std::size_t m) -> ReductionInstance
{
    if (m < 4)
        throw InvalidParameter("U_m lift needs m >= 4");
    const auto & g = inst.graph;
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    auto provenance = inst.provenance;
    auto order = g.order();
    for (Vertex x = 0; x < g.order(); ++x) {
        auto want = m - 4;
        if (g.in_degree(x) >= want)
            continue;
        ProvenanceEntry e{"lift " + std::to_string(x), {}, {{"x", x}}};
        for (auto i = g.in_degree(x); i < want; ++i) {
            auto p = static_cast<Vertex>(order++);
            e.owned.push_back(p);
            arcs.push_back({p, x});
        }
        provenance.push_back(std::move(e));
    }
    return ReductionInstance{OrientedGraph(order, std::move(arcs)), inst.source_kind, TargetSpec::dominated_cycle(m),
        Mode::ios, std::move(provenance)};
}

auto reduce_iosC3r_to_iosUmr(const OrientedGraph & g, std::size_t m) -> ReductionInstance
{
    if (m < 4)
        throw InvalidParameter("U_m^r reduction needs m >= 4");
    if (g.max_in_degree() > 2 || g.max_out_degree() > 2)
        throw InvalidParameter("ios source needs in- and out-degrees at most 2");
    InstanceBuilder b;
    std::vector<std::size_t> owner(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        owner[x] = b.entry("vertex " + std::to_string(x));
        b.role(owner[x], "x", b.fresh(owner[x]));
    }
    for (const auto & a : g.arcs())
        b.arc(a.tail, a.head);
    for (Vertex x = 0; x < g.order(); ++x) {
        auto fan = g.in_degree(x) == 2 ? m - 3 : m - 2;
        for (std::size_t i = 0; i < fan; ++i)
            b.arc(b.fresh(owner[x]), x);
    }
    return b.finish(SourceKind::ios_C3r, TargetSpec::dominated_cycle(m, true), Mode::ios);
}

auto reduce_iotC3r_to_iotUmr(const OrientedGraph & g, std::size_t m) -> ReductionInstance
{
    if (m < 4)
        throw InvalidParameter("U_m^r reduction needs m >= 4");
    InstanceBuilder b;
    std::vector<std::size_t> owner(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        owner[x] = b.entry("vertex " + std::to_string(x));
        b.role(owner[x], "x", b.fresh(owner[x]));
    }
    for (const auto & a : g.arcs())
        b.arc(a.tail, a.head);
    const auto dominators = transitive_tournament(m - 3);
    for (Vertex x = 0; x < g.order(); ++x) {
        auto base = b.embed(owner[x], dominators);
        for (Vertex t = 0; t < dominators.order(); ++t) {
            b.arc(base + t, x);
            b.role(owner[x], "t" + std::to_string(t), base + t);
            for (int k = 0; k < 3; ++k)
                b.arc(base + t, b.fresh(owner[x]));
        }
    }
    return b.finish(SourceKind::iot_C3r, TargetSpec::dominated_cycle(m, true), Mode::iot);
}

auto to_string(ColouringFlavour flavour) -> std::string
{
    switch (flavour) {
        case ColouringFlavour::proper_ios: return "proper-ios";
        case ColouringFlavour::improper_ios: return "improper-ios";
        case ColouringFlavour::improper_iot: return "improper-iot";
    }
    return "?";
}

auto parse_flavour(std::string_view text) -> ColouringFlavour
{
    if (text == "proper-ios" || text == "ios-proper")
        return ColouringFlavour::proper_ios;
    if (text == "improper-ios" || text == "ios-improper")
        return ColouringFlavour::improper_ios;
    if (text == "improper-iot" || text == "iot-improper")
        return ColouringFlavour::improper_iot;
    throw InvalidParameter("unknown colouring flavour '" + std::string(text) + "'");
}

auto flavour_mode(ColouringFlavour flavour) -> Mode
{
    return flavour == ColouringFlavour::improper_iot ? Mode::iot : Mode::ios;
}

auto flavour_reflexive(ColouringFlavour flavour) -> bool
{
    return flavour != ColouringFlavour::proper_ios;
}

auto colouring_instance(const OrientedGraph & g, std::size_t k, ColouringFlavour flavour) -> ColouringInstance
{
    auto mode = flavour_mode(flavour);
    if (flavour == ColouringFlavour::proper_ios) {
        if (k < 4)
            throw InvalidParameter("proper ios colouring reduction needs k >= 4");
        return {disjoint_union(g, dominated_cycle(k)), TargetSpec::dominated_cycle(k), mode};
    }
    if (k == 3)
        return {disjoint_union(g, gadget_D(6).graph), TargetSpec::cycle3(true), mode};
    if (k < 3)
        throw InvalidParameter("improper colouring reduction needs k >= 3");
    return {disjoint_union(g, dominated_cycle(k)), TargetSpec::dominated_cycle(k, true), mode};
}

namespace {

constexpr std::size_t oracle_cap = 20;

} // namespace

auto oracle_3col(const SimpleGraph & g, std::size_t k) -> bool
{
    if (g.order() > oracle_cap)
        throw SizeCapExceeded("colouring oracle is capped at " + std::to_string(oracle_cap) + " vertices");
    std::vector<int> colour(g.order(), -1);
    std::function<bool(Vertex)> place = [&](Vertex v) -> bool {
        if (v == g.order())
            return true;
        for (int c = 0; c < static_cast<int>(k); ++c) {
            bool clash = false;
            for (auto e : g.incident(v))
                if (colour[g.other_end(e, v)] == c)
                    clash = true;
            if (clash)
                continue;
            colour[v] = c;
            if (place(v + 1))
                return true;
            colour[v] = -1;
        }
        return false;
    };
    return place(0);
}

auto oracle_3edge(const SimpleGraph & g) -> bool
{
    if (g.order() > oracle_cap)
        throw SizeCapExceeded("edge-colouring oracle is capped at " + std::to_string(oracle_cap) + " vertices");
    std::vector<int> colour(g.size(), -1);
    std::function<bool(std::size_t)> place = [&](std::size_t e) -> bool {
        if (e == g.size())
            return true;
        auto [a, b] = g.endpoints(e);
        for (int c = 0; c < 3; ++c) {
            bool clash = false;
            for (auto v : {a, b})
                for (auto f : g.incident(v))
                    if (f != e && colour[f] == c)
                        clash = true;
            if (clash)
                continue;
            colour[e] = c;
            if (place(e + 1))
                return true;
            colour[e] = -1;
        }
        return false;
    };
    return place(0);
}

} // namespace injhom
