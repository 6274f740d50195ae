#include <injhom/error.hpp>
#include <injhom/poly.hpp>

#include <algorithm>

namespace injhom {

namespace {

auto yes(VertexMap map, Mode mode, std::string algorithm) -> PolyVerdict
{
    return PolyVerdict{true, Homomorphism{std::move(map), mode}, std::move(algorithm)};
}

auto no(std::string algorithm) -> PolyVerdict
{
    return PolyVerdict{false, std::nullopt, std::move(algorithm)};
}

auto with_mode(PolyVerdict verdict, Mode mode) -> PolyVerdict
{
    if (verdict.witness)
        verdict.witness->mode = mode;
    return verdict;
}

/// Follows out-arcs through a graph of maximum in- and out-degree 1, handing
/// each vertex its position along its directed path or cycle.
auto directed_positions(const OrientedGraph & g) -> std::vector<std::size_t>
{
    std::vector<std::size_t> position(g.order(), 0);
    std::vector<bool> seen(g.order(), false);
    auto walk = [&](Vertex start) {
        std::size_t i = 0;
        for (Vertex v = start; ! seen[v];) {
            seen[v] = true;
            position[v] = i++;
            if (g.out_degree(v) == 0)
                break;
            v = g.out_neighbours(v)[0];
        }
    };
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.in_degree(v) == 0)
            walk(v);
    for (Vertex v = 0; v < g.order(); ++v)
        if (! seen[v])
            walk(v);
    return position;
}

class Degree2Sweep {
public:
    Degree2Sweep(const OrientedGraph & g, const OrientedGraph & h, Mode mode) :
        g_(g),
        h_(h),
        mode_(mode),
        k_(h.order())
    {
    }

    /// Fills images for the walk's vertices; false if the component has no valid map.
    auto solve(const Walk & walk, VertexMap & images) const -> bool
    {
        const auto & w = walk.vertices;
        if (k_ == 0)
            return false;
        if (w.size() == 1) {
            images[w[0]] = 0;
            return true;
        }
        if (! walk.closed)
            return sweep(w, std::nullopt, images);
        for (Vertex a0 = 0; a0 < k_; ++a0)
            for (Vertex a1 = 0; a1 < k_; ++a1)
                if (edge_ok(w[0], w[1], a0, a1) && sweep(w, std::pair{a0, a1}, images))
                    return true;
        return false;
    }

private:
    /// Images a, b for consecutive walk vertices x, y respect whichever arc joins them.
    auto edge_ok(Vertex x, Vertex y, Vertex a, Vertex b) const -> bool
    {
        return g_.has_arc(x, y) ? h_.admits(a, b) : h_.admits(b, a);
    }

    /// Whether the two walk-neighbours prev and next of mid may share an image.
    auto must_differ(Vertex prev, Vertex mid, Vertex next) const -> bool
    {
        switch (mode_) {
            case Mode::plain: return false;
            case Mode::iot: return true;
            case Mode::ios:
                return (g_.has_arc(prev, mid) && g_.has_arc(next, mid)) || (g_.has_arc(mid, prev) && g_.has_arc(mid, next));
        }
        return true;
    }

    auto local_ok(Vertex prev, Vertex mid, Vertex next, Vertex a_prev, Vertex a_next) const -> bool
    {
        return a_prev != a_next || ! must_differ(prev, mid, next);
    }

    /// Layered DP over states (image of w[i-1], image of w[i]); start fixes the
    /// first two images of a cycle.
    auto sweep(const std::vector<Vertex> & w, std::optional<std::pair<Vertex, Vertex>> start, VertexMap & images) const -> bool
    {
        const std::size_t len = w.size();
        const std::size_t states = k_ * k_;
        constexpr std::size_t none = static_cast<std::size_t>(-1);
        // parent[i][s] for layer i >= 1, s = prev * k + cur; none if unreachable.
        std::vector<std::vector<std::size_t>> parent(len, std::vector<std::size_t>(states, none));

        const std::size_t root_marker = states;
        if (start)
            parent[1][start->first * k_ + start->second] = root_marker;
        else
            for (Vertex a = 0; a < k_; ++a)
                for (Vertex b = 0; b < k_; ++b)
                    if (edge_ok(w[0], w[1], a, b))
                        parent[1][a * k_ + b] = root_marker;

        for (std::size_t i = 1; i + 1 < len; ++i)
            for (std::size_t s = 0; s < states; ++s) {
                if (parent[i][s] == none)
                    continue;
                auto p = static_cast<Vertex>(s / k_), c = static_cast<Vertex>(s % k_);
                for (Vertex n = 0; n < k_; ++n) {
                    auto next = c * k_ + n;
                    if (parent[i + 1][next] != none)
                        continue;
                    if (edge_ok(w[i], w[i + 1], c, n) && local_ok(w[i - 1], w[i], w[i + 1], p, n))
                        parent[i + 1][next] = s;
                }
            }

        std::optional<std::size_t> final_state;
        for (std::size_t s = 0; s < states && ! final_state; ++s) {
            if (parent[len - 1][s] == none)
                continue;
            if (start) {
                auto p = static_cast<Vertex>(s / k_), c = static_cast<Vertex>(s % k_);
                auto [a0, a1] = *start;
                if (! edge_ok(w[len - 1], w[0], c, a0))
                    continue;
                if (! local_ok(w[len - 2], w[len - 1], w[0], p, a0))
                    continue;
                if (! local_ok(w[len - 1], w[0], w[1], c, a1))
                    continue;
            }
            final_state = s;
        }
        if (! final_state)
            return false;

        auto s = *final_state;
        for (std::size_t i = len - 1; i >= 1; --i) {
            images[w[i]] = static_cast<Vertex>(s % k_);
            images[w[i - 1]] = static_cast<Vertex>(s / k_);
            s = parent[i][s];
        }
        return true;
    }

    const OrientedGraph & g_;
    const OrientedGraph & h_;
    Mode mode_;
    Vertex k_;
};

} // namespace

auto decide_T1_ios(const OrientedGraph & g) -> PolyVerdict
{
    if (g.size() > 0)
        return no("decide_T1_ios");
    return yes(VertexMap(g.order(), 0), Mode::ios, "decide_T1_ios");
}

auto decide_T2_ios(const OrientedGraph & g) -> PolyVerdict
{
    if (g.max_degree() > 1)
        return no("decide_T2_ios");
    VertexMap f(g.order(), 0);
    for (const auto & a : g.arcs())
        f[a.head] = 1;
    return yes(std::move(f), Mode::ios, "decide_T2_ios");
}

auto decide_C3_ios(const OrientedGraph & g) -> PolyVerdict
{
    if (g.max_in_degree() > 1 || g.max_out_degree() > 1)
        return no("decide_C3_ios");
    for (const auto & c : component_shapes(g))
        if (c.shape == Shape::directed_cycle && c.cycle_length % 3 != 0)
            return no("decide_C3_ios");
    auto position = directed_positions(g);
    VertexMap f(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        f[v] = static_cast<Vertex>(position[v] % 3);
    return yes(std::move(f), Mode::ios, "decide_C3_ios");
}

auto decide_degree2_dp(const OrientedGraph & g, const OrientedGraph & h, Mode mode) -> PolyVerdict
{
    if (g.max_degree() > 2)
        throw InvalidParameter("degree-2 sweep needs underlying maximum degree at most 2");
    Degree2Sweep sweep(g, h, mode);
    VertexMap f(g.order(), 0);
    for (const auto & walk : linear_orders(g))
        if (! sweep.solve(walk, f))
            return no("decide_degree2_dp");
    return yes(std::move(f), mode, "decide_degree2_dp");
}

auto decide_T3_ios(const OrientedGraph & g, Mode mode) -> PolyVerdict
{
    if (g.max_degree() > 2)
        return no("decide_T3_ios");
    auto verdict = decide_degree2_dp(g, transitive_tournament(3), mode);
    verdict.algorithm = "decide_T3_ios";
    return verdict;
}

auto decide_T1r_ios(const OrientedGraph & g) -> PolyVerdict
{
    if (g.max_in_degree() > 1 || g.max_out_degree() > 1)
        return no("decide_T1r_ios");
    return yes(VertexMap(g.order(), 0), Mode::ios, "decide_T1r_ios");
}

auto build_2sat_T2r_ios(const OrientedGraph & g) -> TwoSatInstance
{
    if (g.max_in_degree() > 2 || g.max_out_degree() > 2)
        throw InvalidParameter("2-SAT encoding needs in- and out-degrees at most 2");
    TwoSatInstance inst;
    inst.variables = g.order();
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.out_degree(v) == 2)
            inst.add({{{v, false}}});
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.in_degree(v) == 2)
            inst.add({{{v, true}}});
    for (const auto & a : g.arcs())
        inst.add({{{a.tail, false}, {a.head, true}}});
    for (auto [v, w] : find_hats(g)) {
        inst.add({{{v, true}, {w, true}}});
        inst.add({{{v, false}, {w, false}}});
    }
    return inst;
}

auto decide_T2r_ios(const OrientedGraph & g) -> PolyVerdict
{
    if (g.max_in_degree() > 2 || g.max_out_degree() > 2)
        return no("decide_T2r_ios");
    auto assignment = solve_2sat(build_2sat_T2r_ios(g));
    if (! assignment)
        return no("decide_T2r_ios");
    VertexMap f(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        f[v] = (*assignment)[v] ? 1 : 0;
    return yes(std::move(f), Mode::ios, "decide_T2r_ios");
}

auto decide_T1r_iot(const OrientedGraph & g) -> PolyVerdict
{
    if (g.max_degree() > 1)
        return no("decide_T1r_iot");
    return yes(VertexMap(g.order(), 0), Mode::iot, "decide_T1r_iot");
}

auto decide_T2r_iot(const OrientedGraph & g) -> PolyVerdict
{
    if (g.max_degree() > 2)
        return no("decide_T2r_iot");
    auto verdict = decide_degree2_dp(g, transitive_tournament(2, true), Mode::iot);
    verdict.algorithm = "decide_T2r_iot";
    return verdict;
}

auto decide_poly(const OrientedGraph & g, const TargetSpec & target, Mode mode) -> std::optional<PolyVerdict>
{
    using Family = TargetSpec::Family;
    if (mode == Mode::plain) {
        if (target.reflexive)
            return yes(VertexMap(g.order(), 0), mode, "reflexive_constant");
        return std::nullopt;
    }

    if (! target.reflexive) {
        if (target.family == Family::cycle3)
            return with_mode(decide_C3_ios(g), mode);
        if (target.family == Family::transitive) {
            switch (target.order) {
                case 1: return with_mode(decide_T1_ios(g), mode);
                case 2: return with_mode(decide_T2_ios(g), mode);
                case 3: return decide_T3_ios(g, mode);
                default: break;
            }
        }
        return std::nullopt;
    }

    if (target.family == Family::transitive && target.order == 1)
        return mode == Mode::ios ? decide_T1r_ios(g) : decide_T1r_iot(g);
    if (target.family == Family::transitive && target.order == 2)
        return mode == Mode::ios ? decide_T2r_ios(g) : decide_T2r_iot(g);
    return std::nullopt;
}

} // namespace injhom
