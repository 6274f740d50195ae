#include <injhom/edge_list.hpp>
#include <injhom/error.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace injhom {

namespace {

auto tokenize(const std::string & line) -> std::vector<std::string>
{
    std::istringstream s(line);
    std::vector<std::string> tokens;
    std::string t;
    while (s >> t)
        tokens.push_back(t);
    return tokens;
}

auto parse_count(const std::string & token, std::size_t line, const char * what) -> std::size_t
{
    if (token.empty() || ! std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + token + "'");
    try {
        return std::stoul(token);
    }
    catch (const std::out_of_range &) {
        throw ParseError(line, std::string(what) + " out of range");
    }
}

} // namespace

auto parse_edge_list(std::istream & in) -> OrientedGraph
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    bool reflexive = false;
    std::vector<Arc> arcs;
    std::set<std::pair<Vertex, Vertex>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto tokens = tokenize(line);
        if (! have_header) {
            if (tokens.size() < 2 || tokens.size() > 3)
                throw ParseError(line_no, "header must be 'n m [reflexive]'");
            n = parse_count(tokens[0], line_no, "vertex count");
            m = parse_count(tokens[1], line_no, "arc count");
            if (tokens.size() == 3) {
                if (tokens[2] != "reflexive")
                    throw ParseError(line_no, "unknown header flag '" + tokens[2] + "'");
                reflexive = true;
            }
            have_header = true;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(line_no, "arc line must be 'u v'");
        auto u = parse_count(tokens[0], line_no, "tail");
        auto v = parse_count(tokens[1], line_no, "head");
        if (u >= n || v >= n)
            throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        auto a = static_cast<Vertex>(u), b = static_cast<Vertex>(v);
        if (seen.contains({a, b}))
            throw ParseError(line_no, "duplicate arc " + tokens[0] + " " + tokens[1]);
        if (seen.contains({b, a}))
            throw ParseError(line_no, "2-cycle on " + tokens[0] + " " + tokens[1]);
        seen.insert({a, b});
        if (arcs.size() == m)
            throw ParseError(line_no, "more arcs than the header's " + std::to_string(m));
        arcs.push_back({a, b});
    }
    if (! have_header)
        throw ParseError(line_no + 1, "missing header");
    if (arcs.size() != m)
        throw ParseError(line_no + 1, "expected " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
    return OrientedGraph(n, std::move(arcs), reflexive);
}

auto parse_edge_list(const std::string & text) -> OrientedGraph
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

auto read_edge_list_file(const std::string & path) -> OrientedGraph
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

auto write_edge_list(std::ostream & out, const OrientedGraph & g, const std::vector<std::string> & comments) -> void
{
    for (const auto & c : comments)
        out << "# " << c << '\n';
    out << g.order() << ' ' << g.size();
    if (g.reflexive())
        out << " reflexive";
    out << '\n';
    for (const auto & a : g.arcs())
        out << a.tail << ' ' << a.head << '\n';
}

auto to_edge_list(const OrientedGraph & g, const std::vector<std::string> & comments) -> std::string
{
    std::ostringstream out;
    write_edge_list(out, g, comments);
    return out.str();
}

} // namespace injhom
