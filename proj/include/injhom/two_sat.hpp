#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace injhom {

struct Literal {
    std::size_t var = 0;
    bool positive = true;

    auto operator<=>(const Literal &) const = default;
};

/// A clause of one or two literals.
struct Clause {
    std::vector<Literal> literals;

    auto operator==(const Clause &) const -> bool = default;
};

struct TwoSatInstance {
    std::size_t variables = 0;
    std::vector<Clause> clauses;

    /// Throws InvalidParameter on an empty clause, a clause of more than two
    /// literals, or an undeclared variable.
    auto add(const Clause & clause) -> void;
};

auto to_string(const Clause & clause) -> std::string;

/// Implication graph plus strongly connected components, linear time.
/// Returns a satisfying assignment, or nullopt if some x and not-x share a
/// component.
auto solve_2sat(const TwoSatInstance & instance) -> std::optional<std::vector<bool>>;

auto satisfies(const TwoSatInstance & instance, const std::vector<bool> & assignment) -> bool;

} // namespace injhom
