#pragma once

#include <injhom/graph.hpp>
#include <injhom/reductions.hpp>
#include <injhom/solver.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace injhom {

constexpr std::size_t tournament_catalogue_cap = 6;

/// Pairwise non-isomorphic irreflexive tournaments on k vertices, in
/// increasing order of canonical code.
struct TournamentCatalogue {
    std::size_t k = 0;
    std::vector<OrientedGraph> members;
};

/// 1 <= k <= 6; larger k throws SizeCapExceeded. Results are cached and safe
/// to request from several threads.
auto enumerate_tournaments(std::size_t k) -> const TournamentCatalogue &;

/// Canonical form of a tournament on at most 6 vertices: the
/// lexicographically least upper-triangle bit code over all relabellings.
auto canonical_code(const OrientedGraph & tournament) -> std::uint32_t;

struct ChiResult {
    /// False when no tournament up to the catalogue cap admits a map.
    bool resolved = false;
    std::size_t k = 0;
    /// The witnessing target; reflexive for the improper flavours.
    std::optional<OrientedGraph> tournament;
    std::optional<Homomorphism> witness;
};

/// Smallest k for which some member of the k-vertex catalogue (made
/// reflexive for the improper flavours) receives a homomorphism of the
/// flavour's mode; ties go to catalogue order.
auto chi(const OrientedGraph & g, ColouringFlavour flavour) -> ChiResult;

/// Whether g has a flavour k-colouring, by trying every catalogue member.
auto has_colouring(const OrientedGraph & g, std::size_t k, ColouringFlavour flavour) -> bool;

/// Enumerates every mode-injective homomorphism g -> t and checks that each
/// is injective on the designated vertices. Vacuously true when there are none.
auto check_Um_forcing(const OrientedGraph & g, std::span<const Vertex> copy, const OrientedGraph & t, Mode mode) -> bool;

} // namespace injhom
