#pragma once

#include <injhom/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace injhom {

/// map[v] is the image of input vertex v.
using VertexMap = std::vector<Vertex>;

struct Homomorphism {
    VertexMap map;
    Mode mode = Mode::plain;
};

struct SolveResult {
    bool satisfiable = false;
    std::optional<Homomorphism> witness;
    /// Set when enumerating; capped at the limit if one was given.
    std::optional<std::uint64_t> count;
    std::uint64_t nodes_explored = 0;
};

struct SolveOptions {
    bool enumerate = false;
    std::optional<std::uint64_t> limit;
};

/// (input vertex, target vertex)
using Pins = std::vector<std::pair<Vertex, Vertex>>;

/// Whether f is a mode-injective homomorphism G -> H. Throws InvalidParameter
/// if f is not total on V(G) or has an image outside V(H).
auto check_hom(const OrientedGraph & g, const OrientedGraph & h, std::span<const Vertex> f, Mode mode) -> bool;

/// Backtracking search over per-vertex candidate sets, with arc consistency,
/// not-equal propagation between vertices that share a neighbour in the sense
/// of the mode, and Hall-set pruning on each neighbourhood. Branches on a
/// vertex of smallest domain, leaving vertices of degree at most 1 until no
/// other choice remains; ties go to the vertex whose domain has been emptied
/// most often so far in this search, then to the lowest index. Target
/// vertices are tried in increasing order. Witnesses and node counts are
/// reproducible.
///
/// Targets may have at most 64 vertices.
auto solve(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const SolveOptions & options = {}) -> SolveResult;

/// As solve, restricted to extensions of the pins. Conflicting or impossible
/// pins give an unsatisfiable result rather than an error; an out-of-range pin
/// is an InvalidParameter.
auto solve_with_pins(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const Pins & pins,
    const SolveOptions & options = {}) -> SolveResult;

/// Calls visit for every extension of the pins, in search order, until visit
/// returns false. Returns the number of maps visited.
auto for_each_hom(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const Pins & pins,
    const std::function<bool(std::span<const Vertex>)> & visit) -> std::uint64_t;

/// g o f, i.e. result[v] = g[f[v]].
auto compose(std::span<const Vertex> f, std::span<const Vertex> g) -> VertexMap;

} // namespace injhom
