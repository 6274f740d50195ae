#include <injhom/chromatic.hpp>
#include <injhom/error.hpp>

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <set>

namespace injhom {

namespace {

auto pair_bits(std::size_t k) -> std::size_t { return k * (k - 1) / 2; }

/// Bit p of the code is set when the p-th pair (i, j), i < j, in row-major
/// order is oriented i -> j.
auto code_under(const std::array<std::array<bool, tournament_catalogue_cap>, tournament_catalogue_cap> & beats,
    std::span<const Vertex> perm, std::size_t k) -> std::uint32_t
{
    // perm[i] is the original vertex placed at position i.
    std::uint32_t code = 0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j, ++p)
            if (beats[perm[i]][perm[j]])
                code |= std::uint32_t{1} << p;
    return code;
}

auto from_code(std::uint32_t code, std::size_t k) -> OrientedGraph
{
    std::vector<Arc> arcs;
    std::size_t p = 0;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j, ++p)
            if (code & (std::uint32_t{1} << p))
                arcs.push_back({i, j});
            else
                arcs.push_back({j, i});
    return OrientedGraph(k, std::move(arcs));
}

} // namespace

auto canonical_code(const OrientedGraph & tournament) -> std::uint32_t
{
    const auto k = tournament.order();
    if (k > tournament_catalogue_cap)
        throw SizeCapExceeded("canonical codes are limited to " + std::to_string(tournament_catalogue_cap) + " vertices");
    if (! tournament.is_tournament())
        throw InvalidParameter("canonical_code needs a tournament");
    std::array<std::array<bool, tournament_catalogue_cap>, tournament_catalogue_cap> beats{};
    for (const auto & a : tournament.arcs())
        beats[a.tail][a.head] = true;
    std::vector<Vertex> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    auto best = std::numeric_limits<std::uint32_t>::max();
    do
        best = std::min(best, code_under(beats, perm, k));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

auto enumerate_tournaments(std::size_t k) -> const TournamentCatalogue &
{
    if (k < 1 || k > tournament_catalogue_cap)
        throw SizeCapExceeded("tournament catalogue covers 1 <= k <= " + std::to_string(tournament_catalogue_cap));

    static std::array<TournamentCatalogue, tournament_catalogue_cap + 1> cache;
    static std::array<std::once_flag, tournament_catalogue_cap + 1> once;
    std::call_once(once[k], [k] {
        std::set<std::uint32_t> codes;
        const auto bits = pair_bits(k);
        for (std::uint32_t code = 0; code < (std::uint32_t{1} << bits); ++code)
            codes.insert(canonical_code(from_code(code, k)));
        TournamentCatalogue catalogue{k, {}};
        for (auto c : codes)
            catalogue.members.push_back(from_code(c, k));
        cache[k] = std::move(catalogue);
    });
    return cache[k];
}

auto chi(const OrientedGraph & g, ColouringFlavour flavour) -> ChiResult
{
    const auto mode = flavour_mode(flavour);
    const auto reflexive = flavour_reflexive(flavour);
    for (std::size_t k = 1; k <= tournament_catalogue_cap; ++k)
        for (const auto & member : enumerate_tournaments(k).members) {
            auto target = member.with_reflexive(reflexive);
            auto result = solve(g, target, mode);
            if (result.satisfiable)
                return ChiResult{true, k, std::move(target), std::move(result.witness)};
        }
    return ChiResult{false, tournament_catalogue_cap, std::nullopt, std::nullopt};
}

auto has_colouring(const OrientedGraph & g, std::size_t k, ColouringFlavour flavour) -> bool
{
    const auto mode = flavour_mode(flavour);
    const auto reflexive = flavour_reflexive(flavour);
    for (const auto & member : enumerate_tournaments(k).members)
        if (solve(g, member.with_reflexive(reflexive), mode).satisfiable)
            return true;
    return false;
}

auto check_Um_forcing(const OrientedGraph & g, std::span<const Vertex> copy, const OrientedGraph & t, Mode mode) -> bool
{
    for (auto v : copy)
        if (v >= g.order())
            throw InvalidParameter("designated vertex outside the graph");
    bool injective = true;
    for_each_hom(g, t, mode, {}, [&](std::span<const Vertex> f) {
        std::vector<Vertex> images;
        for (auto v : copy)
            images.push_back(f[v]);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            injective = false;
        return injective;
    });
    return injective;
}

} // namespace injhom
