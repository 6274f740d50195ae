#include <injhom/error.hpp>
#include <injhom/two_sat.hpp>

#include <algorithm>

namespace injhom {

auto TwoSatInstance::add(const Clause & clause) -> void
{
    if (clause.literals.empty() || clause.literals.size() > 2)
        throw InvalidParameter("2-SAT clauses hold one or two literals");
    for (const auto & l : clause.literals)
        if (l.var >= variables)
            throw InvalidParameter("clause references undeclared variable " + std::to_string(l.var));
    clauses.push_back(clause);
}

auto to_string(const Clause & clause) -> std::string
{
    std::string result;
    for (const auto & l : clause.literals) {
        if (! result.empty())
            result += " | ";
        result += (l.positive ? "x" : "~x") + std::to_string(l.var);
    }
    return result;
}

namespace {

// Node 2v is x_v, node 2v+1 is not x_v.
auto node(const Literal & l) -> std::size_t { return 2 * l.var + (l.positive ? 0 : 1); }

auto negated(std::size_t n) -> std::size_t { return n ^ 1; }

/// Iterative Tarjan. Components are numbered in reverse topological order.
auto strongly_connected(const std::vector<std::vector<std::size_t>> & adj) -> std::vector<std::size_t>
{
    const std::size_t n = adj.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<std::size_t> stack, call, edge_pos;
    std::vector<bool> on_stack(n, false);
    std::size_t counter = 0, components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back(root);
        edge_pos.push_back(0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (! call.empty()) {
            auto v = call.back();
            auto & pos = edge_pos.back();
            if (pos < adj[v].size()) {
                auto w = adj[v][pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back(w);
                    edge_pos.push_back(0);
                }
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            call.pop_back();
            edge_pos.pop_back();
            if (! call.empty())
                low[call.back()] = std::min(low[call.back()], low[v]);
        }
    }
    return comp;
}

} // namespace

auto solve_2sat(const TwoSatInstance & instance) -> std::optional<std::vector<bool>>
{
    std::vector<std::vector<std::size_t>> adj(2 * instance.variables);
    for (const auto & clause : instance.clauses) {
        auto a = node(clause.literals.front());
        auto b = node(clause.literals.back());
        // (a or b): not a => b, not b => a
        adj[negated(a)].push_back(b);
        adj[negated(b)].push_back(a);
    }

    auto comp = strongly_connected(adj);
    std::vector<bool> assignment(instance.variables);
    for (std::size_t v = 0; v < instance.variables; ++v) {
        if (comp[2 * v] == comp[2 * v + 1])
            return std::nullopt;
        // Tarjan numbers sinks first; a literal is true when it comes later
        // in topological order than its negation.
        assignment[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return assignment;
}

auto satisfies(const TwoSatInstance & instance, const std::vector<bool> & assignment) -> bool
{
    for (const auto & clause : instance.clauses) {
        bool any = false;
        for (const auto & l : clause.literals)
            if (assignment.at(l.var) == l.positive)
                any = true;
        if (! any)
            return false;
    }
    return true;
}

} // namespace injhom
