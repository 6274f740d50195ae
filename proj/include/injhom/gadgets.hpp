#pragma once

#include <injhom/graph.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace injhom {

/// A gadget graph with named access to the vertices the constructions refer to.
struct Gadget {
    OrientedGraph graph;
    /// In construction order.
    std::vector<std::pair<std::string, Vertex>> roles;

    /// Throws InvalidParameter for an unknown role.
    auto role(std::string_view name) const -> Vertex;
    auto has_role(std::string_view name) const -> bool;
    /// Role annotation lines, "role name=index", for edge-list comments.
    auto role_comments() const -> std::vector<std::string>;
};

/// Directed cycle v1..v_{6d} with x_t (t = 1..3d) and arcs v_{2t} -> x_t -> v_{2t-1}.
/// Layout: v_i at i-1, x_t at 6d+t-1. Roles v1.., x1... d >= 1.
auto gadget_D(std::size_t d) -> Gadget;

/// D_d plus n_1..n_d with arcs x_{3i-2} -> n_i -> x_{3i+1}, indices taken
/// modulo 3d in the range 1..3d. n_i sits at 9d+i-1. d >= 2.
auto gadget_X(std::size_t d) -> Gadget;

/// The forced directed cycle x1, n1, x4, n2, ..., x_{3d-2}, n_d of X_d.
auto x_forced_cycle(const Gadget & x) -> std::vector<Vertex>;

/// v_0..v_{n-1} with arcs v_{2i} v_{2i+1} and v_{2i} v_{2i-1} (v_0 v_{n-1}
/// closes it): even vertices have out-degree 2, odd ones in-degree 2.
/// n even and >= 4.
auto gadget_B(std::size_t n) -> Gadget;

/// The 40-vertex, 48-arc gadget whose two distinguished vertices u and v
/// receive equal images in every ios- or iot-injective map to T3r.
/// Vertices are numbered in the drawing order of the source figure.
auto gadget_F() -> Gadget;

/// K_{1,3} oriented with every leaf pointing at the centre.
/// Roles centre (0), leaf1..leaf3 (1..3).
auto gadget_instar() -> Gadget;

} // namespace injhom
