#include <injhom/error.hpp>
#include <injhom/gadgets.hpp>

#include <array>

namespace injhom {

auto Gadget::role(std::string_view name) const -> Vertex
{
    for (const auto & [n, v] : roles)
        if (n == name)
            return v;
    throw InvalidParameter("gadget has no role '" + std::string(name) + "'");
}

auto Gadget::has_role(std::string_view name) const -> bool
{
    for (const auto & r : roles)
        if (r.first == name)
            return true;
    return false;
}

auto Gadget::role_comments() const -> std::vector<std::string>
{
    std::vector<std::string> lines;
    for (const auto & [n, v] : roles)
        lines.push_back("role " + n + "=" + std::to_string(v));
    return lines;
}

namespace {

auto d_arcs(std::size_t d) -> std::vector<Arc>
{
    const auto cycle = static_cast<Vertex>(6 * d);
    auto v = [](std::size_t i) { return static_cast<Vertex>(i - 1); };
    auto x = [&](std::size_t t) { return static_cast<Vertex>(cycle + t - 1); };
    std::vector<Arc> arcs;
    for (std::size_t i = 1; i <= cycle; ++i)
        arcs.push_back({v(i), v(i % cycle + 1)});
    for (std::size_t t = 1; t <= 3 * d; ++t) {
        arcs.push_back({v(2 * t), x(t)});
        arcs.push_back({x(t), v(2 * t - 1)});
    }
    return arcs;
}

auto d_roles(std::size_t d) -> std::vector<std::pair<std::string, Vertex>>
{
    std::vector<std::pair<std::string, Vertex>> roles;
    for (std::size_t i = 1; i <= 6 * d; ++i)
        roles.emplace_back("v" + std::to_string(i), static_cast<Vertex>(i - 1));
    for (std::size_t t = 1; t <= 3 * d; ++t)
        roles.emplace_back("x" + std::to_string(t), static_cast<Vertex>(6 * d + t - 1));
    return roles;
}

// Arcs of the F gadget, keyed to the figure's node numbering. u = 11, v = 9.
constexpr std::array<std::pair<Vertex, Vertex>, 48> f_arcs{{
    {7, 0}, {0, 1}, {2, 1}, {3, 2}, {3, 4}, {4, 5}, {6, 5}, {7, 6},
    {7, 11}, {8, 1}, {3, 9}, {10, 5}, {0, 12}, {12, 17}, {13, 17}, {13, 15},
    {13, 14}, {15, 16}, {14, 16}, {18, 16}, {20, 21}, {22, 21}, {23, 21}, {24, 23},
    {24, 22}, {24, 25}, {25, 12}, {4, 19}, {26, 6}, {26, 27}, {27, 28}, {29, 28},
    {30, 28}, {31, 29}, {31, 30}, {31, 32}, {33, 32}, {33, 2}, {34, 33}, {35, 34},
    {35, 36}, {35, 37}, {36, 38}, {37, 38}, {39, 38}, {39, 26}, {20, 19}, {19, 18},
}};

constexpr Vertex f_order = 40;
constexpr Vertex f_u = 11;
constexpr Vertex f_v = 9;

} // namespace

auto gadget_D(std::size_t d) -> Gadget
{
    if (d < 1)
        throw InvalidParameter("D_d needs d >= 1");
    return Gadget{OrientedGraph(9 * d, d_arcs(d)), d_roles(d)};
}

auto gadget_X(std::size_t d) -> Gadget
{
    if (d < 2)
        throw InvalidParameter("X_d needs d >= 2");
    auto arcs = d_arcs(d);
    auto roles = d_roles(d);
    const auto xs = 3 * d;
    auto x = [&](std::size_t t) { return static_cast<Vertex>(6 * d + (t - 1) % xs); };
    for (std::size_t i = 1; i <= d; ++i) {
        auto n = static_cast<Vertex>(9 * d + i - 1);
        arcs.push_back({x(3 * i - 2), n});
        arcs.push_back({n, x(3 * i + 1)});
        roles.emplace_back("n" + std::to_string(i), n);
    }
    return Gadget{OrientedGraph(10 * d, std::move(arcs)), std::move(roles)};
}

auto x_forced_cycle(const Gadget & x) -> std::vector<Vertex>
{
    std::vector<Vertex> cycle;
    for (std::size_t i = 1; x.has_role("n" + std::to_string(i)); ++i) {
        cycle.push_back(x.role("x" + std::to_string(3 * i - 2)));
        cycle.push_back(x.role("n" + std::to_string(i)));
    }
    if (cycle.empty())
        throw InvalidParameter("not an X_d gadget");
    return cycle;
}

auto gadget_B(std::size_t n) -> Gadget
{
    if (n < 4 || n % 2 != 0)
        throw InvalidParameter("B_n needs an even n >= 4, got " + std::to_string(n));
    std::vector<Arc> arcs;
    std::vector<std::pair<std::string, Vertex>> roles;
    for (std::size_t i = 0; i < n; i += 2) {
        arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
        arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + n - 1) % n)});
    }
    for (std::size_t i = 0; i < n; ++i)
        roles.emplace_back("v" + std::to_string(i), static_cast<Vertex>(i));
    return Gadget{OrientedGraph(n, std::move(arcs)), std::move(roles)};
}

auto gadget_F() -> Gadget
{
    std::vector<Arc> arcs;
    for (auto [t, h] : f_arcs)
        arcs.push_back({t, h});
    return Gadget{OrientedGraph(f_order, std::move(arcs)), {{"u", f_u}, {"v", f_v}}};
}

auto gadget_instar() -> Gadget
{
    return Gadget{OrientedGraph(4, {{1, 0}, {2, 0}, {3, 0}}),
        {{"centre", 0}, {"leaf1", 1}, {"leaf2", 2}, {"leaf3", 3}}};
}

} // namespace injhom
