#include <injhom/chromatic.hpp>
#include <injhom/edge_list.hpp>
#include <injhom/error.hpp>
#include <injhom/gadgets.hpp>
#include <injhom/poly.hpp>
#include <injhom/reductions.hpp>
#include <injhom/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace injhom;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;

auto load_target(const std::string & text) -> TargetSpec
{
    if (! text.empty() && text.front() == '@') {
        auto path = text.substr(1);
        auto g = read_edge_list_file(path);
        if (! g.is_tournament())
            throw InvalidParameter("custom target " + path + " is not a tournament");
        return TargetSpec::from_graph(std::move(g), path);
    }
    return TargetSpec::parse(text);
}

auto resolve_label(const TargetSpec & spec, const std::string & text) -> Vertex
{
    for (Vertex v = 0; v < spec.order; ++v)
        if (spec.label(v) == text)
            return v;
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &pos);
    }
    catch (const std::exception &) {
        pos = 0;
    }
    if (pos != text.size() || pos == 0 || value >= spec.order)
        throw InvalidParameter("unknown target vertex '" + text + "' for " + spec.name);
    return static_cast<Vertex>(value);
}

auto parse_pin(const TargetSpec & spec, const std::string & text) -> std::pair<Vertex, Vertex>
{
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw InvalidParameter("pin '" + text + "' is not of the form u=t");
    std::size_t pos = 0;
    unsigned long u = 0;
    try {
        u = std::stoul(text.substr(0, eq), &pos);
    }
    catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != eq)
        throw InvalidParameter("pin '" + text + "' has a bad input vertex");
    return {static_cast<Vertex>(u), resolve_label(spec, text.substr(eq + 1))};
}

auto print_witness(std::ostream & out, const TargetSpec & spec, std::span<const Vertex> f) -> void
{
    for (Vertex v = 0; v < f.size(); ++v)
        out << v << " -> " << spec.label(f[v]) << '\n';
}

auto write_output(const std::optional<std::string> & path, const std::string & text) -> void
{
    if (! path) {
        std::cout << text;
        return;
    }
    std::ofstream file(*path);
    if (! file)
        throw Error("cannot write " + *path);
    file << text;
}

auto make_gadget(const std::string & name, std::optional<std::size_t> param) -> Gadget
{
    auto need = [&](const char * what) {
        if (! param)
            throw InvalidParameter(std::string("gadget ") + name + " needs " + what);
        return *param;
    };
    if (name == "D")
        return gadget_D(need("d"));
    if (name == "X")
        return gadget_X(need("d"));
    if (name == "B")
        return gadget_B(need("n"));
    if (name == "F")
        return gadget_F();
    if (name == "instar")
        return gadget_instar();
    throw InvalidParameter("unknown gadget '" + name + "' (D, X, B, F, instar)");
}

struct ReduceArgs {
    std::string kind;
    std::string input;
    std::string mode = "ios";
    std::size_t m = 4;
    std::size_t k = 3;
    std::string flavour = "proper-ios";
    bool direct = false;
    std::optional<std::string> emit;
    std::optional<std::string> provenance;
};

auto run_reduce(const ReduceArgs & a) -> int
{
    auto g = read_edge_list_file(a.input);
    if (a.kind == "colouring") {
        auto inst = colouring_instance(g, a.k, parse_flavour(a.flavour));
        write_output(a.emit, to_edge_list(inst.graph, {"colouring " + a.flavour + " k=" + std::to_string(a.k),
                                                        "target " + inst.target.name + " mode " + to_string(inst.mode)}));
        return exit_yes;
    }

    ReductionInstance inst;
    if (a.kind == "3col-ios-C3r")
        inst = reduce_3col_to_iosC3r(SimpleGraph::underlying(g), a.direct ? IosEdgeLink::direct : IosEdgeLink::length_two_paths);
    else if (a.kind == "3edge-T3r")
        inst = reduce_3edge_to_T3r(SimpleGraph::underlying(g), parse_mode(a.mode));
    else if (a.kind == "3col-iot-C3r")
        inst = reduce_3col_to_iotC3r(SimpleGraph::underlying(g));
    else if (a.kind == "3edge-Um") {
        inst = reduce_3edge_to_U4(SimpleGraph::underlying(g));
        if (a.m != 4)
            inst = lift_to_Um(inst, a.m);
    }
    else if (a.kind == "ios-C3r-Umr")
        inst = reduce_iosC3r_to_iosUmr(g, a.m);
    else if (a.kind == "iot-C3r-Umr")
        inst = reduce_iotC3r_to_iotUmr(g, a.m);
    else
        throw InvalidParameter("unknown reduction '" + a.kind + "'");

    write_output(a.emit, to_edge_list(inst.graph, {"reduction " + a.kind + " from " + a.input,
                                                    "target " + inst.target.name + " mode " + to_string(inst.mode)}));
    auto sidecar = a.provenance;
    if (! sidecar && a.emit)
        sidecar = *a.emit + ".provenance";
    if (sidecar) {
        std::ostringstream prov;
        write_provenance(prov, inst);
        write_output(sidecar, prov.str());
    }
    return exit_yes;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Locally injective homomorphisms of oriented graphs to small tournaments"};
    app.require_subcommand(1);

    std::string input, target_text, mode_text = "ios";

    auto * decide = app.add_subcommand("decide", "decide whether INPUT has a MODE-injective homomorphism to TARGET");
    decide->add_option("input", input, "edge-list file")->required();
    decide->add_option("target", target_text, "T1|T2|T3|C3|T1r|T2r|T3r|C3r|U<m>|U<m>r|@file")->required();
    decide->add_option("mode", mode_text, "plain|ios|iot")->capture_default_str();

    bool enumerate = false;
    std::optional<std::uint64_t> limit;
    std::vector<std::string> pins;
    auto * solve_cmd = app.add_subcommand("solve", "backtracking search, optionally counting every solution");
    solve_cmd->add_option("input", input, "edge-list file")->required();
    solve_cmd->add_option("target", target_text, "target tournament")->required();
    solve_cmd->add_option("mode", mode_text, "plain|ios|iot")->capture_default_str();
    solve_cmd->add_flag("--enumerate", enumerate, "count every solution");
    solve_cmd->add_option("--limit", limit, "stop counting after this many");
    solve_cmd->add_option("--pin", pins, "fix input vertex u to target vertex t, as u=t");

    std::string gadget_name;
    std::optional<std::size_t> gadget_param;
    std::optional<std::string> emit;
    auto * gadget = app.add_subcommand("gadget", "write a gadget as an edge list with its roles");
    gadget->add_option("name", gadget_name, "D, X, B, F or instar")->required();
    gadget->add_option("param", gadget_param, "d for D and X, n for B");
    gadget->add_option("--emit", emit, "output path (default stdout)");

    ReduceArgs ra;
    auto * reduce = app.add_subcommand("reduce", "build a transformed instance");
    reduce->add_option("kind", ra.kind,
              "3col-ios-C3r | 3edge-T3r | 3col-iot-C3r | 3edge-Um | ios-C3r-Umr | iot-C3r-Umr | colouring")
        ->required();
    reduce->add_option("input", ra.input, "edge-list file; read as an undirected graph for the colouring sources")
        ->required();
    reduce->add_option("--mode", ra.mode, "ios or iot, for 3edge-T3r")->capture_default_str();
    reduce->add_option("-m", ra.m, "m for the U_m targets")->capture_default_str();
    reduce->add_option("-k", ra.k, "colours, for colouring")->capture_default_str();
    reduce->add_option("--flavour", ra.flavour, "proper-ios, improper-ios or improper-iot")->capture_default_str();
    reduce->add_flag("--direct", ra.direct, "3col-ios-C3r: feed u_wz straight from n_i and n_j");
    reduce->add_option("--emit", ra.emit, "output path (default stdout)");
    reduce->add_option("--provenance", ra.provenance, "provenance path (default <emit>.provenance)");

    std::string flavour_text;
    auto * chi_cmd = app.add_subcommand("chi", "smallest number of colours of the given flavour");
    chi_cmd->add_option("input", input, "edge-list file")->required();
    chi_cmd->add_option("flavour", flavour_text, "proper-ios, improper-ios or improper-iot")->required();

    std::string suite;
    auto * verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite, "lemma-D, lemma-B, gadget-F, reductions, oracle-equivalence or all")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*decide) {
            auto g = read_edge_list_file(input);
            auto spec = load_target(target_text);
            auto mode = parse_mode(mode_text);
            auto h = build_named(spec);
            bool yes = false;
            std::string algorithm = "backtracking";
            std::optional<VertexMap> witness;
            if (auto v = decide_poly(g, spec, mode)) {
                yes = v->satisfiable;
                algorithm = v->algorithm;
                if (v->witness)
                    witness = v->witness->map;
            }
            else {
                auto r = solve(g, h, mode);
                yes = r.satisfiable;
                if (r.witness)
                    witness = r.witness->map;
            }
            std::cout << (yes ? "YES" : "NO") << '\n' << "algorithm " << algorithm << '\n';
            if (witness)
                print_witness(std::cout, spec, *witness);
            return yes ? exit_yes : exit_no;
        }
        if (*solve_cmd) {
            auto g = read_edge_list_file(input);
            auto spec = load_target(target_text);
            auto mode = parse_mode(mode_text);
            Pins fixed;
            for (const auto & p : pins)
                fixed.push_back(parse_pin(spec, p));
            auto r = solve_with_pins(g, build_named(spec), mode, fixed, {enumerate, limit});
            std::cout << (r.satisfiable ? "YES" : "NO") << '\n' << "algorithm backtracking\n";
            if (r.count)
                std::cout << "count " << *r.count << '\n';
            std::cout << "nodes " << r.nodes_explored << '\n';
            if (r.witness)
                print_witness(std::cout, spec, r.witness->map);
            return r.satisfiable ? exit_yes : exit_no;
        }
        if (*gadget) {
            auto gd = make_gadget(gadget_name, gadget_param);
            auto comments = gd.role_comments();
            comments.insert(comments.begin(), "gadget " + gadget_name + (gadget_param ? " " + std::to_string(*gadget_param) : ""));
            write_output(emit, to_edge_list(gd.graph, comments));
            return exit_yes;
        }
        if (*reduce)
            return run_reduce(ra);
        if (*chi_cmd) {
            auto g = read_edge_list_file(input);
            auto flavour = parse_flavour(flavour_text);
            auto r = chi(g, flavour);
            if (! r.resolved) {
                std::cout << "UNRESOLVED no " << to_string(flavour) << " colouring with at most "
                          << tournament_catalogue_cap << " colours\n";
                return exit_no;
            }
            std::cout << "chi " << r.k << '\n' << "tournament\n";
            write_edge_list(std::cout, *r.tournament);
            std::cout << "witness\n";
            print_witness(std::cout, TargetSpec::from_graph(*r.tournament), r.witness->map);
            return exit_yes;
        }
        if (*verify) {
            auto names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            for (const auto & name : names)
                ok = run_suite(name, std::cout).ok() && ok;
            return ok ? exit_yes : exit_no;
        }
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const InvalidParameter & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
