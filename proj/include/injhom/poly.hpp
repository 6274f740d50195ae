#pragma once

#include <injhom/graph.hpp>
#include <injhom/solver.hpp>
#include <injhom/two_sat.hpp>

#include <optional>
#include <string>

namespace injhom {

/// Outcome of one of the polynomial deciders. Every "yes" carries a witness.
struct PolyVerdict {
    bool satisfiable = false;
    std::optional<Homomorphism> witness;
    /// Which decider produced the verdict, e.g. "decide_C3_ios".
    std::string algorithm;
};

/// Dispatch to the polynomial decider for (target, mode). Returns nullopt for
/// the cases handled only by search: ios/iot to C3r and T3r, the U family,
/// custom targets, and plain homomorphisms to irreflexive targets.
auto decide_poly(const OrientedGraph & g, const TargetSpec & target, Mode mode) -> std::optional<PolyVerdict>;

/// Irreflexive targets; for these the ios and iot answers coincide.
auto decide_T1_ios(const OrientedGraph & g) -> PolyVerdict;
auto decide_T2_ios(const OrientedGraph & g) -> PolyVerdict;
auto decide_C3_ios(const OrientedGraph & g) -> PolyVerdict;
/// Rejects any underlying degree of 3 or more, then runs the path/cycle DP.
auto decide_T3_ios(const OrientedGraph & g, Mode mode = Mode::ios) -> PolyVerdict;

auto decide_T1r_ios(const OrientedGraph & g) -> PolyVerdict;
auto decide_T2r_ios(const OrientedGraph & g) -> PolyVerdict;
auto decide_T1r_iot(const OrientedGraph & g) -> PolyVerdict;
auto decide_T2r_iot(const OrientedGraph & g) -> PolyVerdict;

/// Exact decision for inputs whose underlying graph has maximum degree at most
/// 2, against any target h. Each path is swept left to right over states
/// (image of previous vertex, image of current vertex); each cycle is swept
/// once per choice of the images of its first two vertices, then closed.
/// Throws InvalidParameter if some vertex has underlying degree above 2.
auto decide_degree2_dp(const OrientedGraph & g, const OrientedGraph & h, Mode mode) -> PolyVerdict;

/// Clause groups, in this order:
///   (i)   deg+(v) = 2          =>  not x_v
///   (ii)  deg-(v) = 2          =>  x_v
///   (iii) arc vw               =>  not x_v or x_w
///   (iv)  v, w ends of a hat   =>  x_v or x_w,  not x_v or not x_w
/// with x_v true meaning v maps to t1. Throws InvalidParameter when some
/// in- or out-degree exceeds 2.
auto build_2sat_T2r_ios(const OrientedGraph & g) -> TwoSatInstance;

} // namespace injhom
