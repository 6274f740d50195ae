#include <injhom/error.hpp>
#include <injhom/solver.hpp>

#include <algorithm>
#include <bit>

namespace injhom {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t max_target_order = 64;
constexpr std::size_t hall_target_limit = 8;

auto bit(Vertex a) -> Mask { return Mask{1} << a; }

auto lowest(Mask m) -> Vertex { return static_cast<Vertex>(std::countr_zero(m)); }

auto distinct(std::vector<Vertex> images) -> bool
{
    std::sort(images.begin(), images.end());
    return std::adjacent_find(images.begin(), images.end()) == images.end();
}

/// Neighbourhoods whose images must be pairwise distinct under the mode.
auto injective_groups(const OrientedGraph & g, Mode mode) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> groups;
    for (Vertex x = 0; x < g.order(); ++x) {
        auto in = g.in_neighbours(x);
        auto out = g.out_neighbours(x);
        switch (mode) {
            case Mode::plain:
                break;
            case Mode::ios:
                if (in.size() >= 2)
                    groups.emplace_back(in.begin(), in.end());
                if (out.size() >= 2)
                    groups.emplace_back(out.begin(), out.end());
                break;
            case Mode::iot:
                if (in.size() + out.size() >= 2) {
                    std::vector<Vertex> both(in.begin(), in.end());
                    both.insert(both.end(), out.begin(), out.end());
                    std::sort(both.begin(), both.end());
                    groups.push_back(std::move(both));
                }
                break;
        }
    }
    return groups;
}

class Search {
public:
    Search(const OrientedGraph & g, const OrientedGraph & h, Mode mode) :
        g_(g),
        target_order_(h.order()),
        full_(target_order_ == 64 ? ~Mask{0} : (Mask{1} << target_order_) - 1),
        succ_(target_order_, 0),
        pred_(target_order_, 0),
        partners_(g.order()),
        groups_(injective_groups(g, mode)),
        groups_of_(g.order()),
        hall_(target_order_ <= hall_target_limit),
        queued_(g.order(), 0),
        failures_(g.order(), 0)
    {
        if (target_order_ > max_target_order)
            throw InvalidParameter("targets are limited to " + std::to_string(max_target_order) + " vertices");
        for (Vertex a = 0; a < target_order_; ++a)
            for (Vertex b = 0; b < target_order_; ++b)
                if (h.admits(a, b)) {
                    succ_[a] |= bit(b);
                    pred_[b] |= bit(a);
                }

        for (std::size_t i = 0; i < groups_.size(); ++i) {
            const auto & group = groups_[i];
            for (auto v : group)
                groups_of_[v].push_back(i);
            for (std::size_t p = 0; p < group.size(); ++p)
                for (std::size_t q = p + 1; q < group.size(); ++q) {
                    partners_[group[p]].push_back(group[q]);
                    partners_[group[q]].push_back(group[p]);
                }
        }
        for (auto & p : partners_) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }

        // A vertex can only go where the target has room for its neighbourhood.
        root_.assign(g.order(), full_);
        for (Vertex v = 0; v < g.order(); ++v) {
            Mask allowed = 0;
            for (Vertex a = 0; a < target_order_; ++a) {
                auto in_room = static_cast<std::size_t>(std::popcount(pred_[a]));
                auto out_room = static_cast<std::size_t>(std::popcount(succ_[a]));
                auto both_room = static_cast<std::size_t>(std::popcount(pred_[a] | succ_[a]));
                bool ok = true;
                if (g.in_degree(v) > 0 && in_room == 0)
                    ok = false;
                if (g.out_degree(v) > 0 && out_room == 0)
                    ok = false;
                if (mode == Mode::ios && (g.in_degree(v) > in_room || g.out_degree(v) > out_room))
                    ok = false;
                if (mode == Mode::iot && g.degree(v) > both_room)
                    ok = false;
                if (ok)
                    allowed |= bit(a);
            }
            root_[v] &= allowed;
        }
    }

    auto pin(Vertex v, Vertex a) -> void
    {
        if (v >= g_.order() || a >= target_order_)
            throw InvalidParameter("pin " + std::to_string(v) + "=" + std::to_string(a) + " out of range");
        root_[v] &= bit(a);
    }

    auto run(const std::function<bool(std::span<const Vertex>)> & visit) -> std::uint64_t
    {
        std::uint64_t visited = 0;
        auto counting = [&](std::span<const Vertex> f) {
            ++visited;
            return visit(f);
        };
        auto domains = root_;
        std::vector<Vertex> all(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v)
            all[v] = v;
        if (propagate(domains, all))
            recurse(domains, counting);
        return visited;
    }

    auto nodes() const -> std::uint64_t { return nodes_; }

private:
    auto successors_of(Mask d) const -> Mask
    {
        Mask result = 0;
        for (; d; d &= d - 1)
            result |= succ_[lowest(d)];
        return result;
    }

    auto predecessors_of(Mask d) const -> Mask
    {
        Mask result = 0;
        for (; d; d &= d - 1)
            result |= pred_[lowest(d)];
        return result;
    }

    auto narrow(std::vector<Mask> & domains, Vertex w, Mask keep) -> bool
    {
        Mask narrowed = domains[w] & keep;
        if (narrowed == domains[w])
            return true;
        domains[w] = narrowed;
        if (narrowed == 0) {
            ++failures_[w];
            return false;
        }
        if (! queued_[w]) {
            queued_[w] = 1;
            queue_.push_back(w);
        }
        return true;
    }

    auto check_group(std::vector<Mask> & domains, const std::vector<Vertex> & group) -> bool
    {
        Mask all = 0;
        for (auto v : group)
            all |= domains[v];
        if (static_cast<std::size_t>(std::popcount(all)) < group.size()) {
            for (auto v : group)
                ++failures_[v];
            return false;
        }
        if (! hall_ || group.size() < 3)
            return true;
        for (Mask s = all; s; s = (s - 1) & all) {
            auto room = static_cast<std::size_t>(std::popcount(s));
            if (room >= group.size())
                continue;
            std::size_t inside = 0;
            for (auto v : group)
                if ((domains[v] & ~s) == 0)
                    ++inside;
            if (inside > room) {
                for (auto v : group)
                    ++failures_[v];
                return false;
            }
            if (inside == room)
                for (auto v : group)
                    if ((domains[v] & ~s) != 0 && ! narrow(domains, v, ~s))
                        return false;
        }
        return true;
    }

    auto propagate(std::vector<Mask> & domains, std::span<const Vertex> seeds) -> bool
    {
        queue_.clear();
        for (auto v : seeds)
            if (! queued_[v]) {
                queued_[v] = 1;
                queue_.push_back(v);
            }
        bool ok = true;
        for (std::size_t head = 0; ok && head < queue_.size(); ++head) {
            auto v = queue_[head];
            queued_[v] = 0;
            Mask d = domains[v];
            if (d == 0) {
                ok = false;
                break;
            }
            auto forward = successors_of(d);
            for (auto w : g_.out_neighbours(v))
                if (! narrow(domains, w, forward)) {
                    ok = false;
                    break;
                }
            if (! ok)
                break;
            auto backward = predecessors_of(d);
            for (auto w : g_.in_neighbours(v))
                if (! narrow(domains, w, backward)) {
                    ok = false;
                    break;
                }
            if (! ok)
                break;
            if (std::has_single_bit(d))
                for (auto w : partners_[v])
                    if (! narrow(domains, w, ~d)) {
                        ok = false;
                        break;
                    }
            if (! ok)
                break;
            for (auto gi : groups_of_[v])
                if (! check_group(domains, groups_[gi])) {
                    ok = false;
                    break;
                }
        }
        for (std::size_t i = 0; i < queue_.size(); ++i)
            queued_[queue_[i]] = 0;
        queue_.clear();
        return ok;
    }

    auto recurse(std::vector<Mask> & domains, const std::function<bool(std::span<const Vertex>)> & visit) -> bool
    {
        ++nodes_;
        std::optional<Vertex> branch;
        int best = 65;
        bool best_pendant = true;
        std::uint64_t heaviest = 0;
        for (Vertex v = 0; v < domains.size(); ++v) {
            int size = std::popcount(domains[v]);
            if (size < 2)
                continue;
            bool pendant = g_.degree(v) <= 1;
            if ((best_pendant && ! pendant) ||
                (pendant == best_pendant && (size < best || (size == best && failures_[v] > heaviest)))) {
                best = size;
                best_pendant = pendant;
                heaviest = failures_[v];
                branch = v;
            }
        }
        if (! branch) {
            VertexMap f(domains.size());
            for (Vertex v = 0; v < domains.size(); ++v)
                f[v] = lowest(domains[v]);
            return visit(f);
        }

        auto v = *branch;
        for (Mask d = domains[v]; d; d &= d - 1) {
            auto child = domains;
            child[v] = bit(lowest(d));
            Vertex seed[] = {v};
            if (propagate(child, seed) && ! recurse(child, visit))
                return false;
        }
        return true;
    }

    const OrientedGraph & g_;
    std::size_t target_order_;
    Mask full_;
    std::vector<Mask> succ_;
    std::vector<Mask> pred_;
    std::vector<std::vector<Vertex>> partners_;
    std::vector<std::vector<Vertex>> groups_;
    std::vector<std::vector<std::size_t>> groups_of_;
    bool hall_;
    std::vector<Mask> root_;
    std::vector<char> queued_;
    std::vector<std::uint64_t> failures_;
    std::vector<Vertex> queue_;
    std::uint64_t nodes_ = 0;
};

} // namespace

auto check_hom(const OrientedGraph & g, const OrientedGraph & h, std::span<const Vertex> f, Mode mode) -> bool
{
    if (f.size() != g.order())
        throw InvalidParameter("map has " + std::to_string(f.size()) + " entries for " + std::to_string(g.order()) + " vertices");
    for (auto image : f)
        if (image >= h.order())
            throw InvalidParameter("image " + std::to_string(image) + " outside the target");

    for (const auto & a : g.arcs())
        if (! h.admits(f[a.tail], f[a.head]))
            return false;

    auto images = [&](std::span<const Vertex> vs) {
        std::vector<Vertex> result;
        for (auto v : vs)
            result.push_back(f[v]);
        return result;
    };

    for (Vertex x = 0; x < g.order(); ++x) {
        switch (mode) {
            case Mode::plain:
                break;
            case Mode::ios:
                if (! distinct(images(g.in_neighbours(x))) || ! distinct(images(g.out_neighbours(x))))
                    return false;
                break;
            case Mode::iot: {
                auto both = images(g.in_neighbours(x));
                auto out = images(g.out_neighbours(x));
                both.insert(both.end(), out.begin(), out.end());
                if (! distinct(std::move(both)))
                    return false;
                break;
            }
        }
    }
    return true;
}

auto for_each_hom(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const Pins & pins,
    const std::function<bool(std::span<const Vertex>)> & visit) -> std::uint64_t
{
    Search search(g, h, mode);
    for (auto [v, a] : pins)
        search.pin(v, a);
    return search.run(visit);
}

auto solve_with_pins(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const Pins & pins,
    const SolveOptions & options) -> SolveResult
{
    Search search(g, h, mode);
    for (auto [v, a] : pins)
        search.pin(v, a);

    SolveResult result;
    std::uint64_t count = 0;
    search.run([&](std::span<const Vertex> f) {
        if (! result.witness)
            result.witness = Homomorphism{VertexMap(f.begin(), f.end()), mode};
        ++count;
        if (! options.enumerate)
            return false;
        return ! (options.limit && count >= *options.limit);
    });
    result.satisfiable = count > 0;
    if (options.enumerate)
        result.count = count;
    result.nodes_explored = search.nodes();
    return result;
}

auto solve(const OrientedGraph & g, const OrientedGraph & h, Mode mode, const SolveOptions & options) -> SolveResult
{
    return solve_with_pins(g, h, mode, {}, options);
}

auto compose(std::span<const Vertex> f, std::span<const Vertex> g) -> VertexMap
{
    VertexMap result(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (f[v] >= g.size())
            throw InvalidParameter("composition with a map that is not total");
        result[v] = g[f[v]];
    }
    return result;
}

} // namespace injhom
