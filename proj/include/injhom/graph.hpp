#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace injhom {

using Vertex = std::uint32_t;

struct Arc {
    Vertex tail;
    Vertex head;

    auto operator<=>(const Arc &) const = default;
};

/// An oriented graph on vertices 0..n-1. Loops are never stored as arcs; a
/// reflexive graph has a loop at every vertex and nowhere else.
///
/// The constructor rejects loops, duplicate arcs and 2-cycles with
/// InvalidParameter, so every live value satisfies the oriented invariants.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(std::size_t order, std::vector<Arc> arcs, bool reflexive = false);

    auto order() const -> std::size_t { return out_.size(); }
    auto size() const -> std::size_t { return arcs_.size(); }
    auto reflexive() const -> bool { return reflexive_; }

    /// Sorted lexicographically by (tail, head).
    auto arcs() const -> std::span<const Arc> { return arcs_; }
    auto out_neighbours(Vertex v) const -> std::span<const Vertex> { return out_[v]; }
    auto in_neighbours(Vertex v) const -> std::span<const Vertex> { return in_[v]; }
    auto out_degree(Vertex v) const -> std::size_t { return out_[v].size(); }
    auto in_degree(Vertex v) const -> std::size_t { return in_[v].size(); }
    auto degree(Vertex v) const -> std::size_t { return out_[v].size() + in_[v].size(); }

    /// True for a stored arc; loops are reported only through reflexive().
    auto has_arc(Vertex tail, Vertex head) const -> bool;
    /// True if tail->head is an arc, or tail == head and the graph is reflexive.
    auto admits(Vertex tail, Vertex head) const -> bool;
    auto adjacent(Vertex a, Vertex b) const -> bool { return has_arc(a, b) || has_arc(b, a); }

    auto max_in_degree() const -> std::size_t;
    auto max_out_degree() const -> std::size_t;
    auto max_degree() const -> std::size_t;

    auto is_tournament() const -> bool;

    auto with_reflexive(bool reflexive) const -> OrientedGraph;

    friend auto operator==(const OrientedGraph & a, const OrientedGraph & b) -> bool
    {
        return a.reflexive_ == b.reflexive_ && a.order() == b.order() && a.arcs_ == b.arcs_;
    }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    bool reflexive_ = false;
};

enum class Mode { plain, ios, iot };

auto to_string(Mode mode) -> std::string;
auto parse_mode(std::string_view text) -> Mode;

/// A target tournament: one of the named families, or a custom tournament.
///
/// Labelled vertex orders:
///   transitive T_n  t0..t_{n-1}, arcs t_i -> t_j for i < j;
///   cycle C3        c1, c2, c3 at 0, 1, 2 with arcs c1c2, c2c3, c3c1;
///   U_m             c1, c2, c3 at 0..2 as in C3, then t0..t_{m-4} at 3..m-1,
///                   a transitive tournament every vertex of which dominates
///                   the cycle.
struct TargetSpec {
    enum class Family { transitive, cycle3, dominated_cycle, custom };

    Family family = Family::transitive;
    std::size_t order = 1;
    bool reflexive = false;
    std::optional<OrientedGraph> custom;
    std::string name;

    static auto transitive(std::size_t n, bool reflexive = false) -> TargetSpec;
    static auto cycle3(bool reflexive = false) -> TargetSpec;
    /// U_m; m >= 4.
    static auto dominated_cycle(std::size_t m, bool reflexive = false) -> TargetSpec;
    /// Custom target; must be a tournament. Its reflexive flag is taken from the graph.
    static auto from_graph(OrientedGraph tournament, std::string name = "custom") -> TargetSpec;

    /// Grammar: T1|T2|T3|C3|T1r|T2r|T3r|C3r|U<m>|U<m>r. Custom targets are
    /// built with from_graph by the caller.
    static auto parse(std::string_view text) -> TargetSpec;

    auto label(Vertex v) const -> std::string;
};

auto build_named(const TargetSpec & spec) -> OrientedGraph;

auto transitive_tournament(std::size_t n, bool reflexive = false) -> OrientedGraph;
auto cycle3(bool reflexive = false) -> OrientedGraph;
auto dominated_cycle(std::size_t m, bool reflexive = false) -> OrientedGraph;
auto directed_path(std::size_t n) -> OrientedGraph;
auto directed_cycle(std::size_t n) -> OrientedGraph;
auto edgeless(std::size_t n) -> OrientedGraph;
/// v0 -> v1 <- v2
auto hat() -> OrientedGraph;

auto converse(const OrientedGraph & g) -> OrientedGraph;
/// H's vertices are shifted by g.order(). Both operands must share a reflexivity flag.
auto disjoint_union(const OrientedGraph & g, const OrientedGraph & h) -> OrientedGraph;

struct Degree {
    std::size_t in = 0;
    std::size_t out = 0;

    auto operator<=>(const Degree &) const = default;
};

auto degrees(const OrientedGraph & g) -> std::vector<Degree>;

/// Unordered pairs {a, b}, a < b, that share a common in- or out-neighbour:
/// the ends of every copy of the hat or its converse.
auto find_hats(const OrientedGraph & g) -> std::vector<std::pair<Vertex, Vertex>>;

enum class Shape {
    isolated_vertex,
    single_arc,
    directed_path,
    directed_cycle,
    underlying_path,
    underlying_cycle,
    other
};

auto to_string(Shape shape) -> std::string;

struct Component {
    Shape shape = Shape::other;
    /// Sorted vertex list.
    std::vector<Vertex> vertices;
    /// Number of vertices for the two cycle shapes, 0 otherwise.
    std::size_t cycle_length = 0;
};

/// Weak components in order of their smallest vertex.
auto component_shapes(const OrientedGraph & g) -> std::vector<Component>;

/// Vertices of each component, in the order a walk along it visits them, for
/// graphs whose underlying graph has maximum degree at most 2. Paths start at
/// their lower-indexed end; cycles start at their lowest vertex and continue
/// towards its lower-indexed neighbour.
struct Walk {
    std::vector<Vertex> vertices;
    bool closed = false;
};

auto linear_orders(const OrientedGraph & g) -> std::vector<Walk>;

} // namespace injhom
