#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pso/generate.hpp"
#include "pso/io.hpp"
#include "pso/label_search.hpp"
#include "pso/oracle.hpp"
#include "pso/psop_chordal_bipartite.hpp"
#include "pso/psop_generic.hpp"
#include "pso/psop_split.hpp"
#include "pso/reductions.hpp"

namespace pso::cli {

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

const char* kAvailability =
    "search/class availability (without --oracle):\n"
    "  gs    any connected graph\n"
    "  lbfs  --class chordal-bipartite or --class split\n"
    "  mcs   --class split\n"
    "  bfs   --oracle only\n"
    "  mns   --oracle only";

/// Input or usage problems that map to exit code 2.
class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int env_cap(int fallback) {
    if (const char* s = std::getenv("SEARCH_ORDER_SIZE_CAP")) {
        const int v = std::atoi(s);
        if (v > 0) return v;
    }
    return fallback;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_graph(in);
}

PartialOrder load_order(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    return make_partial_order(g.vertex_count(), parse_order_pairs(in, g));
}

Ordering load_ordering(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    return parse_ordering(in, g);
}

RootedTree load_tree(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    return parse_tree(in, g);
}

VertexId need_vertex(const Graph& g, const std::string& name) {
    if (const auto v = g.find_vertex(name)) return *v;
    throw CliError("unknown vertex name: " + name);
}

SearchKind need_search(const std::string& s) {
    if (const auto k = search_kind_from_string(s)) return *k;
    throw CliError("unknown search '" + s + "' (gs, bfs, lbfs, mcs, mns)");
}

void need_solvable(const Graph& g) {
    const GraphValidation val = validate_graph(g);
    if (!val.ok()) throw CliError("graph " + val.summary());
    if (g.vertex_count() == 0) throw CliError("graph is empty");
}

json ordering_json(const Graph& g, const Ordering& o) {
    json names = json::array();
    for (int i = 0; i < o.size(); ++i) names.push_back(g.name(o.at(i)));
    return names;
}

int emit_solve(const Graph& g, const SolveResult& res, bool as_json,
               std::ostream& out, std::ostream& err) {
    if (as_json) {
        json j;
        j["status"] = res.status == SolveStatus::Found        ? "found"
                      : res.status == SolveStatus::Infeasible ? "infeasible"
                                                              : "error";
        j["ordering"] = res.ordering ? ordering_json(g, *res.ordering) : json{};
        j["witness"] = res.reason.empty() ? json{} : json(res.reason);
        j["stats"] = {{"adjacency_scans", res.stats.adjacency_scans},
                      {"order_scans", res.stats.order_scans}};
        out << j.dump() << "\n";
    } else if (res.status == SolveStatus::Found) {
        out << print_ordering(g, *res.ordering);
    } else if (res.status == SolveStatus::Infeasible) {
        out << "INFEASIBLE\n";
        err << res.reason << "\n";
    } else {
        err << "error: " << res.reason << "\n";
    }
    switch (res.status) {
        case SolveStatus::Found: return kExitFound;
        case SolveStatus::Infeasible: return kExitInfeasible;
        case SolveStatus::NotInClass: return kExitError;
    }
    return kExitError;
}

/// Dispatch table shared by solve, endvertex, ftree and ltree.
SolveResult route_solve(const Graph& g, const PartialOrder& pi, SearchKind kind,
                        const std::string& klass, std::optional<VertexId> root,
                        bool oracle, bool assume_class) {
    if (oracle) {
        if (root && !pi.predecessors()[*root].empty())
            return SolveResult::infeasible(
                "the root has an order-predecessor, so no extension can start there");
        if (const auto found = brute_force_psop(g, kind, pi, root, env_cap(10)))
            return SolveResult::found(*found);
        return SolveResult::infeasible(
            "exhaustive search: no ordering extends the constraints");
    }
    switch (kind) {
        case SearchKind::GenericSearch:
            if (root) return solve_psop_gs_rooted(g, *root, pi);
            return solve_psop_unrooted(g, pi, solve_psop_gs_rooted);
        case SearchKind::Lbfs:
            if (klass == "chordal-bipartite") {
                CbOptions opts;
                opts.assume_chordal_bipartite = assume_class;
                opts.recognition_cap = env_cap(opts.recognition_cap);
                if (root) return solve_psop_lbfs_cb_rooted(g, *root, pi, opts);
                return solve_psop_unrooted(
                    g, pi, [&opts](const Graph& gg, VertexId r, const PartialOrder& p) {
                        return solve_psop_lbfs_cb_rooted(gg, r, p, opts);
                    });
            }
            if (klass == "split") {
                if (!root) return solve_psop_lbfs_split(g, pi);
                const auto rooted = with_root_first(pi, *root);
                if (!rooted)
                    return SolveResult::infeasible(
                        "the root has an order-predecessor, so no extension can "
                        "start there");
                return solve_psop_lbfs_split(g, *rooted);
            }
            throw CliError(std::string("lbfs needs --class chordal-bipartite or "
                                       "--class split\n") +
                           kAvailability);
        case SearchKind::Mcs:
            if (klass == "split") {
                if (!root) return solve_psop_mcs_split(g, pi);
                const auto rooted = with_root_first(pi, *root);
                if (!rooted)
                    return SolveResult::infeasible(
                        "the root has an order-predecessor, so no extension can "
                        "start there");
                return solve_psop_mcs_split(g, *rooted);
            }
            throw CliError(std::string("mcs needs --class split\n") + kAvailability);
        case SearchKind::Bfs:
        case SearchKind::Mns:
            throw CliError(std::string(to_string(kind)) +
                           " has no dedicated solver; pass --oracle\n" + kAvailability);
    }
    throw CliError("unreachable search kind");
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"search orderings of graphs under partial-order constraints"};
    app.require_subcommand(1);

    std::string graph_path, order_path, ordering_path, tree_path;
    std::string search = "gs", klass = "any", root_name, target_name, from_ordering;
    bool oracle = false, assume_class = false, as_json = false, four_point = false;
    int nv = 8, pair_count = -1, cb_cap = 16;
    std::uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "find a search ordering extending an order");
    solve->add_option("--graph", graph_path, "graph file")->required();
    solve->add_option("--order", order_path, "partial order file (default: empty order)");
    solve->add_option("--search", search, "gs | bfs | lbfs | mcs | mns")->required();
    solve->add_option("--class", klass, "any | chordal-bipartite | split");
    solve->add_option("--root", root_name, "force the ordering to start here");
    solve->add_flag("--oracle", oracle, "exhaustive reference solver (small graphs)");
    solve->add_flag("--assume-class", assume_class,
                    "skip the exponential class check and trust the caller");
    solve->add_flag("--json", as_json, "machine-readable envelope on stdout");

    auto* verify = app.add_subcommand("verify", "check an ordering against a search and order");
    verify->add_option("--graph", graph_path, "graph file")->required();
    verify->add_option("--search", search, "gs | bfs | lbfs | mcs | mns")->required();
    verify->add_option("--ordering", ordering_path, "ordering file to check")->required();
    verify->add_option("--order", order_path, "partial order the ordering must extend");
    verify->add_flag("--four-point", four_point,
                     "also run the lbfs pattern characterization");
    verify->add_flag("--json", as_json, "machine-readable envelope on stdout");

    auto* generate = app.add_subcommand("generate", "deterministic test instances");
    generate->require_subcommand(1);
    auto* gen_split = generate->add_subcommand("split", "connected split graph");
    gen_split->add_option("--n", nv, "vertex count")->required();
    gen_split->add_option("--seed", seed, "rng seed");
    auto* gen_cb = generate->add_subcommand("cb", "connected chordal bipartite graph");
    gen_cb->add_option("--n", nv, "vertex count")->required();
    gen_cb->add_option("--seed", seed, "rng seed");
    gen_cb->add_option("--cap", cb_cap, "class-check size cap");
    auto* gen_order = generate->add_subcommand("order", "acyclic constraint pairs");
    gen_order->add_option("--graph", graph_path, "graph file")->required();
    gen_order->add_option("--pairs", pair_count, "pair count (default: vertex count)");
    gen_order->add_option("--from-ordering", from_ordering,
                          "draw pairs consistent with this ordering file");
    gen_order->add_option("--seed", seed, "rng seed");

    auto* endvertex = app.add_subcommand("endvertex",
                                         "can the target come last in a search?");
    endvertex->add_option("--graph", graph_path, "graph file")->required();
    endvertex->add_option("--target", target_name, "vertex that must come last")->required();
    endvertex->add_option("--search", search, "gs | bfs | lbfs | mcs | mns")->required();
    endvertex->add_option("--class", klass, "any | chordal-bipartite | split");
    endvertex->add_flag("--oracle", oracle, "exhaustive reference solver");
    endvertex->add_flag("--assume-class", assume_class, "trust the class claim");
    endvertex->add_flag("--json", as_json, "machine-readable envelope on stdout");

    auto* ftree = app.add_subcommand("ftree",
                                     "realize a tree as the first-neighbor tree of a search");
    ftree->add_option("--graph", graph_path, "graph file")->required();
    ftree->add_option("--tree", tree_path, "spanning tree file")->required();
    ftree->add_option("--search", search, "gs | bfs | lbfs | mcs | mns")->required();
    ftree->add_option("--class", klass, "any | chordal-bipartite | split");
    ftree->add_flag("--oracle", oracle, "exhaustive reference solver");
    ftree->add_flag("--assume-class", assume_class, "trust the class claim");
    ftree->add_flag("--json", as_json, "machine-readable envelope on stdout");

    auto* ltree = app.add_subcommand("ltree",
                                     "realize a tree as the last-neighbor tree of a layered search");
    ltree->add_option("--graph", graph_path, "graph file")->required();
    ltree->add_option("--tree", tree_path, "spanning tree file")->required();
    ltree->add_option("--search", search, "bfs | lbfs")->required();
    ltree->add_option("--class", klass, "any | chordal-bipartite | split");
    ltree->add_flag("--oracle", oracle, "exhaustive reference solver");
    ltree->add_flag("--assume-class", assume_class, "trust the class claim");
    ltree->add_flag("--json", as_json, "machine-readable envelope on stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solve || *endvertex || *ftree || *ltree) {
            const Graph g = load_graph(graph_path);
            need_solvable(g);
            const SearchKind kind = need_search(search);

            PartialOrder pi = order_path.empty()
                                  ? make_partial_order(g.vertex_count(), {})
                                  : load_order(order_path, g);
            std::optional<VertexId> root;
            if (*solve) {
                if (!root_name.empty()) root = need_vertex(g, root_name);
            } else if (*endvertex) {
                pi = end_vertex_order(g, need_vertex(g, target_name));
            } else {
                const RootedTree t = load_tree(tree_path, g);
                if (*ltree && kind != SearchKind::Bfs && kind != SearchKind::Lbfs)
                    throw CliError(
                        "last-neighbor trees only arise from layered searches "
                        "(bfs, lbfs)");
                auto forced = *ftree ? f_tree_to_psop(g, t)
                                     : l_tree_to_psop_bipartite(g, t);
                if (const auto* cyc = std::get_if<CycleError>(&forced)) {
                    std::string path;
                    for (const VertexId v : cyc->cycle)
                        path += (path.empty() ? "" : " -> ") + g.name(v);
                    return emit_solve(
                        g,
                        SolveResult::infeasible("the tree forces a cyclic order: " + path),
                        as_json, out, err);
                }
                // Only the tree root is order-minimal, so unrooted solving
                // starts there automatically.
                pi = std::get<PartialOrder>(std::move(forced));
            }
            return emit_solve(g, route_solve(g, pi, kind, klass, root, oracle, assume_class),
                              as_json, out, err);
        }

        if (*verify) {
            const Graph g = load_graph(graph_path);
            const SearchKind kind = need_search(search);
            if (four_point && kind != SearchKind::Lbfs)
                throw CliError("--four-point only applies to lbfs");
            const Ordering sigma = load_ordering(ordering_path, g);
            std::string why;
            if (!is_search_ordering(g, kind, sigma))
                why = "not a " + std::string(to_string(kind)) + " ordering";
            if (why.empty() && four_point && !check_lbfs_4point(g, sigma))
                why = "fails the lbfs pattern characterization";
            if (why.empty() && !order_path.empty() &&
                !load_order(order_path, g).is_linear_extension(sigma))
                why = "does not extend the given order";
            if (as_json) {
                json j;
                j["status"] = why.empty() ? "pass" : "fail";
                j["ordering"] = ordering_json(g, sigma);
                j["witness"] = why.empty() ? json{} : json(why);
                j["stats"] = json::object();
                out << j.dump() << "\n";
            } else if (why.empty()) {
                out << "OK\n";
            } else {
                out << "FAIL\n";
                err << why << "\n";
            }
            return why.empty() ? kExitFound : kExitInfeasible;
        }

        if (*gen_split) {
            out << print_graph(random_split_graph(nv, seed));
            return kExitFound;
        }
        if (*gen_cb) {
            out << print_graph(random_chordal_bipartite_graph(nv, seed, env_cap(cb_cap)));
            return kExitFound;
        }
        if (*gen_order) {
            const Graph g = load_graph(graph_path);
            const int count = pair_count >= 0 ? pair_count : g.vertex_count();
            const auto pairs =
                from_ordering.empty()
                    ? random_order_pairs(g.vertex_count(), count, seed)
                    : pairs_from_ordering(load_ordering(from_ordering, g), count, seed);
            out << print_order_pairs(g, pairs);
            return kExitFound;
        }
        throw CliError("no subcommand selected");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace pso::cli
