#pragma once

#include <injhom/graph.hpp>

#include <cstddef>
#include <functional>
#include <random>
#include <span>

namespace injhom {

/// Every labelled oriented graph on n vertices (3^(n choose 2) of them). n <= 6.
auto for_each_oriented_graph(std::size_t n, const std::function<void(const OrientedGraph &)> & visit) -> void;

/// Each vertex pair independently gets no arc, i -> j, or j -> i; an arc is
/// present with probability arc_probability, either direction equally likely.
auto random_oriented_graph(std::size_t n, std::mt19937 & rng, double arc_probability = 0.5) -> OrientedGraph;

/// Relabels vertex v to perm[v].
auto relabel(const OrientedGraph & g, std::span<const Vertex> perm) -> OrientedGraph;

} // namespace injhom
