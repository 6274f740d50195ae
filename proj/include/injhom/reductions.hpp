#pragma once

#include <injhom/graph.hpp>
#include <injhom/solver.hpp>

#include <cstddef>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace injhom {

/// An undirected simple graph with, at every vertex, a fixed ordering of its
/// incident edges (the "i-th edge at x" of the constructions).
class SimpleGraph {
public:
    /// Incident edges are ordered by neighbour index. Loops and repeated edges
    /// are rejected.
    SimpleGraph(std::size_t order, std::vector<std::pair<Vertex, Vertex>> edges);

    /// The underlying simple graph of an oriented graph; edge i is arc i.
    static auto underlying(const OrientedGraph & g) -> SimpleGraph;

    auto order() const -> std::size_t { return incident_.size(); }
    auto size() const -> std::size_t { return edges_.size(); }
    auto degree(Vertex v) const -> std::size_t { return incident_[v].size(); }
    auto min_degree() const -> std::size_t;
    auto is_cubic() const -> bool;
    auto connected() const -> bool;

    auto edges() const -> const std::vector<std::pair<Vertex, Vertex>> & { return edges_; }
    auto endpoints(std::size_t e) const -> std::pair<Vertex, Vertex> { return edges_[e]; }
    /// Incident edge indices of v in rank order.
    auto incident(Vertex v) const -> const std::vector<std::size_t> & { return incident_[v]; }
    /// 1-based position of edge e among v's incident edges.
    auto rank(Vertex v, std::size_t e) const -> std::size_t;
    auto other_end(std::size_t e, Vertex v) const -> Vertex;

    /// Replaces every vertex's incident-edge ordering with a random permutation.
    auto shuffle_orderings(std::mt19937 & rng) -> void;

private:
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

auto complete_graph(std::size_t n) -> SimpleGraph;
auto complete_bipartite(std::size_t a, std::size_t b) -> SimpleGraph;
auto cycle_graph(std::size_t n) -> SimpleGraph;

enum class SourceKind { vertex_3_colouring, cubic_3_edge_colouring, ios_C3r, iot_C3r };

auto to_string(SourceKind kind) -> std::string;

/// One source object (a vertex or an edge of the source instance) and the
/// part of the transformed graph built for it.
struct ProvenanceEntry {
    /// "vertex 3", "edge 2" (edge index into the source edge list), ...
    std::string source;
    /// Vertices created for this object; every vertex of the output graph is
    /// owned by exactly one entry.
    std::vector<Vertex> owned;
    /// Named vertices relevant to this object; these may be owned elsewhere,
    /// as with the leaves an F copy is glued onto.
    std::vector<std::pair<std::string, Vertex>> roles;
};

struct ReductionInstance {
    OrientedGraph graph;
    SourceKind source_kind = SourceKind::vertex_3_colouring;
    TargetSpec target;
    Mode mode = Mode::ios;
    std::vector<ProvenanceEntry> provenance;
};

/// One line per entry: "<source>: owned=<ranges> role=index ...", ranges
/// written as a..b or single indices, comma separated.
auto write_provenance(std::ostream & out, const ReductionInstance & inst) -> void;

/// How an edge wz is wired between n_i of w's X copy and n_j of z's copy.
enum class IosEdgeLink {
    /// n_i -> a -> u_wz <- b <- n_j with fresh midpoints a, b.
    length_two_paths,
    /// n_i -> u_wz <- n_j. Never satisfiable once G has an edge: n_i already
    /// has an out-neighbour carrying its own image, which pins u_wz to the
    /// successor of both end colours at once.
    direct
};

/// 3-colouring (minimum degree >= 3) to ios-injective maps to C3r: an X_deg(x)
/// per vertex, and per edge wz a new vertex u_wz joined from n_i of w's copy
/// and n_j of z's copy, i and j being the edge's ranks at w and z.
auto reduce_3col_to_iosC3r(const SimpleGraph & g, IosEdgeLink link = IosEdgeLink::length_two_paths) -> ReductionInstance;

/// 3-edge-colouring of a cubic graph to ios- or iot-injective maps to T3r:
/// an in-star per vertex and an F copy per edge, whose u and v are glued onto
/// the matching leaves of the two in-stars.
auto reduce_3edge_to_T3r(const SimpleGraph & g, Mode mode) -> ReductionInstance;

/// 3-colouring of a connected graph without isolated vertices to
/// iot-injective maps to C3r: a B_{6 deg(x)} per vertex, relabelled so that
/// x_0, x_6, ... have in-degree 2, and per edge a new apex t_xy reached from
/// x_{6(i-1)} and y_{6(j-1)} by directed paths of length two.
auto reduce_3col_to_iotC3r(const SimpleGraph & g) -> ReductionInstance;

/// 3-edge-colouring of a cubic graph to ios-injective maps to U4: every edge
/// xy becomes the path x v1 v2 v3 v4 y with arcs x->v1->v2->v3->v4 <- y.
auto reduce_3edge_to_U4(const SimpleGraph & g) -> ReductionInstance;

/// From a U4 instance to U_m: each vertex x gains max(0, (m-4) - deg-(x))
/// new in-neighbours. m >= 4.
auto lift_to_Um(const ReductionInstance & inst, std::size_t m) -> ReductionInstance;

/// ios to C3r into ios to U_m^r: each vertex of in-degree at most 1 gains
/// m-2 new in-neighbours, each vertex of in-degree 2 gains m-3. Requires
/// in- and out-degrees at most 2.
auto reduce_iosC3r_to_iosUmr(const OrientedGraph & g, std::size_t m) -> ReductionInstance;

/// iot to C3r into iot to U_m^r: each vertex x gains a copy of T_{m-3} whose
/// vertices all point at x, and each vertex t of such a copy gains three new
/// out-neighbours t_a, t_b, t_c.
auto reduce_iotC3r_to_iotUmr(const OrientedGraph & g, std::size_t m) -> ReductionInstance;

enum class ColouringFlavour { proper_ios, improper_ios, improper_iot };

auto to_string(ColouringFlavour flavour) -> std::string;
auto parse_flavour(std::string_view text) -> ColouringFlavour;
auto flavour_mode(ColouringFlavour flavour) -> Mode;
auto flavour_reflexive(ColouringFlavour flavour) -> bool;

struct ColouringInstance {
    OrientedGraph graph;
    TargetSpec target;
    Mode mode = Mode::ios;
};

/// The padded graph G u W together with the one target every flavour
/// k-colouring of G u W is forced onto, so that deciding the fixed-target
/// problem (graph, target, mode) is the same as deciding whether graph has a
/// flavour k-colouring:
///   proper-ios,   k >= 4:  W = U_k,  target U_k;
///   improper-*,   k = 3:   W = D_6,  target C3r;
///   improper-*,   k >= 4:  W = U_k,  target U_k^r.
/// Other combinations throw InvalidParameter.
auto colouring_instance(const OrientedGraph & g, std::size_t k, ColouringFlavour flavour) -> ColouringInstance;

/// Exact vertex k-colourability by backtracking. n <= 20.
auto oracle_3col(const SimpleGraph & g, std::size_t k = 3) -> bool;
/// Exact 3-edge-colourability by backtracking. n <= 20.
auto oracle_3edge(const SimpleGraph & g) -> bool;

} // namespace injhom
