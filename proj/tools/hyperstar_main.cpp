// Command-line front end: build and export hyper-star graphs, analyze their
// metrics and automorphism groups, and run the certification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 bad parameters,
// 3 cap exceeded, 4 I/O failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperstar/aut_search.hpp"
#include "hyperstar/cayley.hpp"
#include "hyperstar/errors.hpp"
#include "hyperstar/graph.hpp"
#include "hyperstar/report.hpp"
#include "hyperstar/verify.hpp"

namespace {

using hyperstar::CheckSet;
using hyperstar::HyperStarGraph;
using hyperstar::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadParameters = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitIoFailure = 4;

constexpr std::uint64_t kDefaultOrderCap = 10'000;
// Vertex counts above this need the explicit opt-in flag (the k = 5 case).
constexpr int kUngatedVertexCap = 200;

std::uint64_t resolve_order_cap(std::optional<std::uint64_t> flag_value) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("HYPERSTAR_CAP_ORDER")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("HYPERSTAR_CAP_ORDER is not a number: " +
                                        std::string(env));
        }
    }
    return kDefaultOrderCap;
}

CheckSet parse_checks(const std::vector<std::string>& names) {
    if (names.empty()) return CheckSet::all;
    auto set = static_cast<CheckSet>(0);
    for (const auto& name : names) {
        if (name == "metrics") set = set | CheckSet::metrics;
        else if (name == "cycles") set = set | CheckSet::cycles;
        else if (name == "transitivity") set = set | CheckSet::transitivity;
        else if (name == "aut") set = set | CheckSet::aut;
        else if (name == "cayley") set = set | CheckSet::cayley;
        else if (name == "all") set = CheckSet::all;
        else throw std::invalid_argument("unknown check: " + name);
    }
    return set;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open " + out_path + " for writing");
    file << text;
    if (!file) throw std::ios_base::failure("failed writing " + out_path);
}

HyperStarGraph build_graph(int k, std::optional<int> n_opt, bool folded) {
    if (!n_opt && k < 2)
        throw std::invalid_argument("regular parameters need k >= 2 (got k = " +
                                    std::to_string(k) + "); pass --n for other builds");
    const int n = n_opt.value_or(2 * k);
    return HyperStarGraph::build(n, k, folded);
}

Json cycles_block(const HyperStarGraph& g) {
    Json out;
    if (!g.folded()) {
        std::uint64_t paths = 0;
        bool unique = true;
        for (const auto& [b, c] : g.edges()) {
            for (const auto& [x, y] :
                 std::vector<std::pair<int, int>>{{b, c}, {c, b}}) {
                for (int a : g.neighbors(x)) {
                    if (a == y) continue;
                    for (int d : g.neighbors(y)) {
                        if (d == x || d == a || a > d) continue;
                        ++paths;
                        if (g.cycles_through_path(std::vector<int>{a, x, y, d}, 6) != 1)
                            unique = false;
                    }
                }
            }
        }
        out["three_paths_checked"] = paths;
        out["six_cycle_unique_per_3path"] = unique;
        return out;
    }
    bool unique4 = true;
    std::uint64_t complement_counts_min = ~std::uint64_t{0}, complement_counts_max = 0;
    for (const auto& [u, w] : g.edges()) {
        const std::uint64_t c = g.cycles_through_path(std::vector<int>{u, w}, 4);
        if (g.is_complement_edge(u, w)) {
            complement_counts_min = std::min(complement_counts_min, c);
            complement_counts_max = std::max(complement_counts_max, c);
        } else if (c != 1) {
            unique4 = false;
        }
    }
    out["four_cycle_unique_per_plain_edge"] = unique4;
    out["four_cycles_per_complement_edge_min"] = complement_counts_min;
    out["four_cycles_per_complement_edge_max"] = complement_counts_max;
    return out;
}

int run_analyze(int k, std::optional<int> n_opt, bool folded, CheckSet checks,
                std::uint64_t order_cap, bool enable_k5, const std::string& format,
                const std::string& out_path) {
    const HyperStarGraph g = build_graph(k, n_opt, folded);

    Json report;
    report["schema"] = 1;
    report["graph"] = hyperstar::graph_params_json(g);
    if (has(checks, CheckSet::metrics)) report["metrics"] = hyperstar::metrics_report(g);
    if (has(checks, CheckSet::cycles)) report["cycles"] = cycles_block(g);

    const bool needs_aut = has(checks, CheckSet::aut) ||
                           has(checks, CheckSet::transitivity) ||
                           has(checks, CheckSet::cayley);
    if (needs_aut && g.vertex_count() > kUngatedVertexCap && !enable_k5)
        throw hyperstar::CapExceeded(
            "group analyses on " + std::to_string(g.vertex_count()) +
            " vertices are gated; pass --enable-k5 to run them");
    if (has(checks, CheckSet::aut) || has(checks, CheckSet::transitivity)) {
        const hyperstar::PermGroup aut = hyperstar::automorphism_group(g);
        report["aut"] =
            hyperstar::aut_report(g, aut, /*with_rigidity=*/has(checks, CheckSet::aut));
        report["aut_group"] = hyperstar::group_report(aut);
    }
    if (has(checks, CheckSet::cayley))
        report["cayley"] = hyperstar::cayley_report(g, hyperstar::is_cayley(g, order_cap));

    if (format == "json") {
        write_output(report.dump(2) + "\n", out_path);
    } else if (format == "text") {
        std::string text;
        text += "graph: " + std::string(g.folded() ? "FHS(" : "HS(") +
                std::to_string(g.n()) + "," + std::to_string(g.k()) + ")\n";
        for (const auto& [section, body] : report.items()) {
            if (section == "schema" || section == "graph") continue;
            text += section + ":\n";
            for (const auto& [key, value] : body.items())
                text += "  " + key + ": " + value.dump() + "\n";
        }
        write_output(text, out_path);
    } else {
        throw std::invalid_argument("analyze supports --format json|text");
    }
    return kExitOk;
}

int run_verify(std::optional<int> k_single, const std::string& k_range, CheckSet checks,
               std::uint64_t order_cap, bool enable_k5, const std::string& format,
               const std::string& out_path) {
    hyperstar::VerifyOptions options;
    options.checks = checks;
    options.group_order_cap = order_cap;
    options.enable_k5 = enable_k5;
    if (k_single) {
        options.k_min = options.k_max = *k_single;
    } else if (!k_range.empty()) {
        const auto dots = k_range.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("expected --k-range A..B, got " + k_range);
        options.k_min = std::stoi(k_range.substr(0, dots));
        options.k_max = std::stoi(k_range.substr(dots + 2));
    }
    if (enable_k5) options.k_max = std::max(options.k_max, 5);

    const auto results = hyperstar::run_verification(options);
    bool all_pass = true;
    std::string text;
    Json checks_json = Json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        text += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.name;
        if (!r.detail.empty()) text += " (" + r.detail + ")";
        text += "\n";
        checks_json.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    text += std::string(all_pass ? "PASS" : "FAIL") + ": " +
            std::to_string(results.size()) + " checks\n";

    if (format == "json") {
        Json report;
        report["schema"] = 1;
        report["pass"] = all_pass;
        report["checks"] = std::move(checks_json);
        write_output(report.dump(2) + "\n", out_path);
    } else if (format == "text") {
        write_output(text, out_path);
    } else {
        throw std::invalid_argument("verify supports --format json|text");
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_export(int k, std::optional<int> n_opt, bool folded, const std::string& format,
               const std::string& out_path) {
    const HyperStarGraph g = build_graph(k, n_opt, folded);
    if (format == "dot")
        write_output(g.to_dot(), out_path);
    else if (format == "edgelist")
        write_output(g.to_edge_list(), out_path);
    else
        throw std::invalid_argument("export supports --format dot|edgelist");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyper-star graphs: construction, automorphism groups, certification"};
    app.require_subcommand(1);

    int k = 0;
    std::optional<int> n_opt;
    bool folded = false;
    bool enable_k5 = false;
    std::vector<std::string> check_names;
    std::optional<std::uint64_t> order_cap_flag;
    std::string format_analyze = "json";
    std::string format_verify = "text";
    std::string format_export = "dot";
    std::string out_path;
    std::optional<int> k_single;
    std::string k_range;

    auto* analyze = app.add_subcommand("analyze", "metrics and group analyses of one graph");
    analyze->add_option("--k", k, "subset weight; alone it builds HS(2k,k)")->required();
    analyze->add_option("--n", n_opt, "ground-set size for non-regular builds");
    analyze->add_flag("--folded", folded, "build FHS(2k,k)");
    analyze->add_option("--checks", check_names,
                        "subset of metrics,cycles,transitivity,aut,cayley,all")
        ->delimiter(',');
    analyze->add_option("--max-group-order", order_cap_flag,
                        "cap for element-set searches (default 10000)");
    analyze->add_flag("--enable-k5", enable_k5, "allow group analyses past 200 vertices");
    analyze->add_option("--format", format_analyze, "json|text");
    analyze->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the certification checks");
    verify->add_option("--k", k_single, "single k");
    verify->add_option("--k-range", k_range, "range A..B (default 2..4)");
    verify->add_option("--checks", check_names,
                       "subset of metrics,cycles,transitivity,aut,cayley,all")
        ->delimiter(',');
    verify->add_option("--max-group-order", order_cap_flag,
                       "cap for element-set searches (default 10000)");
    verify->add_flag("--enable-k5", enable_k5, "include the k = 5 order check");
    verify->add_option("--format", format_verify, "text|json");
    verify->add_option("--out", out_path, "output path (default stdout)");

    auto* exporter = app.add_subcommand("export", "write the graph as DOT or an edge list");
    exporter->add_option("--k", k, "subset weight; alone it builds HS(2k,k)")->required();
    exporter->add_option("--n", n_opt, "ground-set size for non-regular builds");
    exporter->add_flag("--folded", folded, "build FHS(2k,k)");
    exporter->add_option("--format", format_export, "dot|edgelist");
    exporter->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParameters;
    }

    try {
        const std::uint64_t order_cap = resolve_order_cap(order_cap_flag);
        const CheckSet checks = parse_checks(check_names);
        if (analyze->parsed())
            return run_analyze(k, n_opt, folded, checks, order_cap, enable_k5,
                               format_analyze, out_path);
        if (verify->parsed())
            return run_verify(k_single, k_range, checks, order_cap, enable_k5,
                              format_verify, out_path);
        return run_export(k, n_opt, folded, format_export, out_path);
    } catch (const hyperstar::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadParameters;
    }
}
