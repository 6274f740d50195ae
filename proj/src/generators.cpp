#include <injhom/error.hpp>
#include <injhom/generators.hpp>

namespace injhom {

auto for_each_oriented_graph(std::size_t n, const std::function<void(const OrientedGraph &)> & visit) -> void
{
    if (n > 6)
        throw SizeCapExceeded("exhaustive generation is limited to 6 vertices");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<int> state(pairs.size(), 0);
    while (true) {
        std::vector<Arc> arcs;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (state[p] == 1)
                arcs.push_back({pairs[p].first, pairs[p].second});
            else if (state[p] == 2)
                arcs.push_back({pairs[p].second, pairs[p].first});
        }
        visit(OrientedGraph(n, std::move(arcs)));
        std::size_t p = 0;
        while (p < state.size() && state[p] == 2)
            state[p++] = 0;
        if (p == state.size())
            break;
        ++state[p];
    }
}

auto random_oriented_graph(std::size_t n, std::mt19937 & rng, double arc_probability) -> OrientedGraph
{
    std::bernoulli_distribution present(arc_probability), forward(0.5);
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (present(rng)) {
                if (forward(rng))
                    arcs.push_back({i, j});
                else
                    arcs.push_back({j, i});
            }
    return OrientedGraph(n, std::move(arcs));
}

auto relabel(const OrientedGraph & g, std::span<const Vertex> perm) -> OrientedGraph
{
    if (perm.size() != g.order())
        throw InvalidParameter("relabelling must cover every vertex");
    std::vector<Arc> arcs;
    for (const auto & a : g.arcs())
        arcs.push_back({perm[a.tail], perm[a.head]});
    return OrientedGraph(g.order(), std::move(arcs), g.reflexive());
}

} // namespace injhom
