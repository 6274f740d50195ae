#include <injhom/error.hpp>
#include <injhom/graph.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace injhom {

OrientedGraph::OrientedGraph(std::size_t order, std::vector<Arc> arcs, bool reflexive) :
    arcs_(std::move(arcs)),
    out_(order),
    in_(order),
    reflexive_(reflexive)
{
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto & a = arcs_[i];
        if (a.tail >= order || a.head >= order)
            throw InvalidParameter("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") out of range");
        if (a.tail == a.head)
            throw InvalidParameter("explicit loop at " + std::to_string(a.tail));
        if (i > 0 && arcs_[i - 1] == a)
            throw InvalidParameter("duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
    }
    for (auto & in : in_)
        std::sort(in.begin(), in.end());
    for (const auto & a : arcs_)
        if (has_arc(a.head, a.tail))
            throw InvalidParameter("2-cycle between " + std::to_string(a.tail) + " and " + std::to_string(a.head));
}

auto OrientedGraph::has_arc(Vertex tail, Vertex head) const -> bool
{
    if (tail >= order())
        return false;
    const auto & out = out_[tail];
    return std::binary_search(out.begin(), out.end(), head);
}

auto OrientedGraph::admits(Vertex tail, Vertex head) const -> bool
{
    return (tail == head && reflexive_ && tail < order()) || has_arc(tail, head);
}

auto OrientedGraph::max_in_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (const auto & in : in_)
        best = std::max(best, in.size());
    return best;
}

auto OrientedGraph::max_out_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (const auto & out : out_)
        best = std::max(best, out.size());
    return best;
}

auto OrientedGraph::max_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (Vertex v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

auto OrientedGraph::is_tournament() const -> bool
{
    return size() * 2 == order() * (order() == 0 ? 0 : order() - 1);
}

auto OrientedGraph::with_reflexive(bool reflexive) const -> OrientedGraph
{
    OrientedGraph result = *this;
    result.reflexive_ = reflexive;
    return result;
}

auto to_string(Mode mode) -> std::string
{
    switch (mode) {
        case Mode::plain: return "plain";
        case Mode::ios: return "ios";
        case Mode::iot: return "iot";
    }
    return "?";
}

auto parse_mode(std::string_view text) -> Mode
{
    if (text == "plain")
        return Mode::plain;
    if (text == "ios")
        return Mode::ios;
    if (text == "iot")
        return Mode::iot;
    throw InvalidParameter("unknown mode '" + std::string(text) + "'");
}

auto TargetSpec::transitive(std::size_t n, bool reflexive) -> TargetSpec
{
    if (n < 1)
        throw InvalidParameter("transitive tournament needs at least one vertex");
    return TargetSpec{Family::transitive, n, reflexive, std::nullopt, "T" + std::to_string(n) + (reflexive ? "r" : "")};
}

auto TargetSpec::cycle3(bool reflexive) -> TargetSpec
{
    return TargetSpec{Family::cycle3, 3, reflexive, std::nullopt, reflexive ? "C3r" : "C3"};
}

auto TargetSpec::dominated_cycle(std::size_t m, bool reflexive) -> TargetSpec
{
    if (m < 4)
        throw InvalidParameter("U_m needs m >= 4, got " + std::to_string(m));
    return TargetSpec{Family::dominated_cycle, m, reflexive, std::nullopt, "U" + std::to_string(m) + (reflexive ? "r" : "")};
}

auto TargetSpec::from_graph(OrientedGraph tournament, std::string name) -> TargetSpec
{
    if (! tournament.is_tournament())
        throw InvalidParameter("custom target is not a tournament");
    if (tournament.order() == 0)
        throw InvalidParameter("custom target is empty");
    auto order = tournament.order();
    auto reflexive = tournament.reflexive();
    return TargetSpec{Family::custom, order, reflexive, std::move(tournament), std::move(name)};
}

auto TargetSpec::parse(std::string_view text) -> TargetSpec
{
    bool reflexive = false;
    std::string_view body = text;
    if (body.size() >= 2 && body.back() == 'r') {
        reflexive = true;
        body.remove_suffix(1);
    }
    if (body == "T1" || body == "T2" || body == "T3")
        return transitive(static_cast<std::size_t>(body[1] - '0'), reflexive);
    if (body == "C3")
        return cycle3(reflexive);
    if (body.size() >= 2 && body[0] == 'U') {
        std::size_t m = 0;
        auto [ptr, ec] = std::from_chars(body.data() + 1, body.data() + body.size(), m);
        if (ec == std::errc{} && ptr == body.data() + body.size())
            return dominated_cycle(m, reflexive);
    }
    throw InvalidParameter("unknown target '" + std::string(text) + "'");
}

auto TargetSpec::label(Vertex v) const -> std::string
{
    switch (family) {
        case Family::transitive:
            return "t" + std::to_string(v);
        case Family::cycle3:
            return "c" + std::to_string(v + 1);
        case Family::dominated_cycle:
            if (v < 3)
                return "c" + std::to_string(v + 1);
            return "t" + std::to_string(v - 3);
        case Family::custom:
            break;
    }
    return std::to_string(v);
}

auto build_named(const TargetSpec & spec) -> OrientedGraph
{
    switch (spec.family) {
        case TargetSpec::Family::transitive:
            return transitive_tournament(spec.order, spec.reflexive);
        case TargetSpec::Family::cycle3:
            return cycle3(spec.reflexive);
        case TargetSpec::Family::dominated_cycle:
            return dominated_cycle(spec.order, spec.reflexive);
        case TargetSpec::Family::custom:
            if (! spec.custom)
                throw InvalidParameter("custom target without a graph");
            return spec.custom->with_reflexive(spec.reflexive);
    }
    throw InvalidParameter("unknown target family");
}

auto transitive_tournament(std::size_t n, bool reflexive) -> OrientedGraph
{
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            arcs.push_back({i, j});
    return OrientedGraph(n, std::move(arcs), reflexive);
}

auto cycle3(bool reflexive) -> OrientedGraph
{
    return OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}, reflexive);
}

auto dominated_cycle(std::size_t m, bool reflexive) -> OrientedGraph
{
    if (m < 4)
        throw InvalidParameter("U_m needs m >= 4, got " + std::to_string(m));
    std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
    for (Vertex i = 3; i < m; ++i) {
        for (Vertex c = 0; c < 3; ++c)
            arcs.push_back({i, c});
        for (Vertex j = i + 1; j < m; ++j)
            arcs.push_back({i, j});
    }
    return OrientedGraph(m, std::move(arcs), reflexive);
}

auto directed_path(std::size_t n) -> OrientedGraph
{
    std::vector<Arc> arcs;
    for (Vertex i = 0; i + 1 < n; ++i)
        arcs.push_back({i, i + 1});
    return OrientedGraph(n, std::move(arcs));
}

auto directed_cycle(std::size_t n) -> OrientedGraph
{
    if (n < 3)
        throw InvalidParameter("directed cycle needs at least 3 vertices");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        arcs.push_back({i, static_cast<Vertex>((i + 1) % n)});
    return OrientedGraph(n, std::move(arcs));
}

auto edgeless(std::size_t n) -> OrientedGraph
{
    return OrientedGraph(n, {});
}

auto hat() -> OrientedGraph
{
    return OrientedGraph(3, {{0, 1}, {2, 1}});
}

auto converse(const OrientedGraph & g) -> OrientedGraph
{
    std::vector<Arc> arcs;
    arcs.reserve(g.size());
    for (const auto & a : g.arcs())
        arcs.push_back({a.head, a.tail});
    return OrientedGraph(g.order(), std::move(arcs), g.reflexive());
}

auto disjoint_union(const OrientedGraph & g, const OrientedGraph & h) -> OrientedGraph
{
    if (g.reflexive() != h.reflexive())
        throw InvalidParameter("disjoint union of a reflexive and an irreflexive graph");
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    auto shift = static_cast<Vertex>(g.order());
    for (const auto & a : h.arcs())
        arcs.push_back({a.tail + shift, a.head + shift});
    return OrientedGraph(g.order() + h.order(), std::move(arcs), g.reflexive());
}

auto degrees(const OrientedGraph & g) -> std::vector<Degree>
{
    std::vector<Degree> result(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        result[v] = {g.in_degree(v), g.out_degree(v)};
    return result;
}

auto find_hats(const OrientedGraph & g) -> std::vector<std::pair<Vertex, Vertex>>
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    auto add_all = [&](std::span<const Vertex> group) {
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                pairs.emplace_back(std::min(group[i], group[j]), std::max(group[i], group[j]));
    };
    for (Vertex v = 0; v < g.order(); ++v) {
        add_all(g.in_neighbours(v));
        add_all(g.out_neighbours(v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

auto to_string(Shape shape) -> std::string
{
    switch (shape) {
        case Shape::isolated_vertex: return "isolated-vertex";
        case Shape::single_arc: return "single-arc";
        case Shape::directed_path: return "directed-path";
        case Shape::directed_cycle: return "directed-cycle";
        case Shape::underlying_path: return "underlying-path";
        case Shape::underlying_cycle: return "underlying-cycle";
        case Shape::other: return "other";
    }
    return "?";
}

namespace {

auto weak_components(const OrientedGraph & g) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(g.order(), false);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (seen[start])
            continue;
        std::vector<Vertex> members{start};
        seen[start] = true;
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto visit = [&](Vertex w) {
                if (! seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
            };
            for (auto w : g.out_neighbours(members[i]))
                visit(w);
            for (auto w : g.in_neighbours(members[i]))
                visit(w);
        }
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
    }
    return result;
}

} // namespace

auto component_shapes(const OrientedGraph & g) -> std::vector<Component>
{
    std::vector<Component> result;
    for (auto & members : weak_components(g)) {
        Component c;
        std::size_t arcs = 0, max_deg = 0, max_in = 0, max_out = 0;
        for (auto v : members) {
            arcs += g.out_degree(v);
            max_deg = std::max(max_deg, g.degree(v));
            max_in = std::max(max_in, g.in_degree(v));
            max_out = std::max(max_out, g.out_degree(v));
        }
        auto n = members.size();
        bool directed = max_in <= 1 && max_out <= 1;
        if (n == 1)
            c.shape = Shape::isolated_vertex;
        else if (n == 2)
            c.shape = Shape::single_arc;
        else if (max_deg <= 2 && arcs == n - 1)
            c.shape = directed ? Shape::directed_path : Shape::underlying_path;
        else if (max_deg <= 2 && arcs == n) {
            c.shape = directed ? Shape::directed_cycle : Shape::underlying_cycle;
            c.cycle_length = n;
        }
        else
            c.shape = Shape::other;
        c.vertices = std::move(members);
        result.push_back(std::move(c));
    }
    return result;
}

auto linear_orders(const OrientedGraph & g) -> std::vector<Walk>
{
    if (g.max_degree() > 2)
        throw InvalidParameter("linear order needs underlying maximum degree at most 2");

    auto neighbours = [&](Vertex v) {
        std::vector<Vertex> result(g.out_neighbours(v).begin(), g.out_neighbours(v).end());
        result.insert(result.end(), g.in_neighbours(v).begin(), g.in_neighbours(v).end());
        std::sort(result.begin(), result.end());
        return result;
    };

    std::vector<Walk> result;
    for (auto & members : weak_components(g)) {
        Walk walk;
        Vertex start = members.front();
        for (auto v : members)
            if (g.degree(v) < 2) {
                start = v;
                break;
            }
        walk.closed = g.degree(start) == 2;
        walk.vertices.push_back(start);
        Vertex previous = start, current = start;
        bool first = true;
        while (true) {
            auto nbrs = neighbours(current);
            std::optional<Vertex> next;
            for (auto w : nbrs)
                if (first || w != previous) {
                    next = w;
                    break;
                }
            if (! next || *next == start)
                break;
            walk.vertices.push_back(*next);
            previous = current;
            current = *next;
            first = false;
        }
        result.push_back(std::move(walk));
    }
    return result;
}

} // namespace injhom
