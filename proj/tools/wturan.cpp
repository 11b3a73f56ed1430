// wturan - weighted Turan extremal numbers, extremal graphs, and checkers.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wturan/detect.hpp"
#include "wturan/errors.hpp"
#include "wturan/extremal.hpp"
#include "wturan/io.hpp"
#include "wturan/oracle.hpp"
#include "wturan/report.hpp"
#include "wturan/stability.hpp"

namespace {

using namespace wturan;

struct RunConfig {
    enum class Command { Extremal, Oracle, Stability, Upgrade };
    Command command = Command::Extremal;
    std::string weights_path;
    std::string graph_spec;
    std::string pattern_spec;
    std::string objective = "sum";
    int l = 0;
    int n = 0;
    bool json = false;
    bool require_general = false; // erdos-stone alias
    bool heuristic_only = false;
    long long seed = 0; // reserved; all commands are deterministic
    int threads = 1;
};

constexpr int kExitVerificationFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitCliquePresent = 4;

void print_json(const nlohmann::ordered_json& payload) { std::cout << payload.dump() << "\n"; }

std::string blocks_text(const std::vector<std::vector<int>>& blocks) {
    std::string out;
    for (const auto& block : blocks) {
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i] + 1);
        }
        out += "} ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string edges_text(const SimpleGraph& g) {
    std::string out;
    for (auto [u, v] : g.edges())
        out += "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") ";
    if (!out.empty()) out.pop_back();
    return out;
}

int oracle_cap_override() {
    if (const char* env = std::getenv("WT_MAX_N")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw ParseError("WT_MAX_N must be an integer");
        }
    }
    return 0;
}

int cmd_extremal(const RunConfig& cfg) {
    const WeightVector w = load_weights(cfg.weights_path);
    const ForbiddenPattern pattern = parse_pattern(cfg.pattern_spec);
    if (cfg.require_general && pattern.is_clique())
        throw ParseError("erdos-stone needs a non-complete pattern; use `extremal` for K_l");

    ExtremalResult result =
        cfg.objective == "product"
            ? ex_product(w, pattern, ProductSolveOptions{cfg.heuristic_only})
            : ex_sum(w, pattern);

    if (cfg.json) {
        print_json(extremal_report(result));
    } else {
        std::cout << "value: " << format_rational(result.objective_value) << "\n"
                  << "kind: " << (result.kind == ObjectiveKind::Sum ? "sum" : "product")
                  << "\n"
                  << "leading_term_only: " << (result.leading_term_only ? "true" : "false")
                  << "\n"
                  << "blocks: " << blocks_text(result.partition.blocks()) << "\n"
                  << "edges: " << edges_text(result.graph.graph) << "\n";
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    WeightVector w;
    if (!cfg.weights_path.empty()) {
        w = load_weights(cfg.weights_path);
        if (cfg.n > 0 && cfg.n != w.size())
            throw ParseError("--n says " + std::to_string(cfg.n) + " but the weight file has " +
                             std::to_string(w.size()) + " entries");
    } else if (cfg.n > 0) {
        w = WeightVector::unit(cfg.n);
    } else {
        throw ParseError("oracle needs --weights or --n");
    }

    OracleOptions options;
    options.threads = cfg.threads;
    options.max_n_override = oracle_cap_override();
    const ForbiddenPattern pattern = parse_pattern(cfg.pattern_spec);
    const CertifyReport report = certify(w, pattern, options);

    if (cfg.json) {
        print_json(certify_report(report));
    } else {
        const char* relation = report.leading_term ? ">=" : "==";
        std::cout << "pattern: " << pattern.name() << "\n"
                  << "sum: oracle " << format_rational(report.sum_oracle.best_value) << " "
                  << relation << " formula " << format_rational(report.sum_formula) << " -> "
                  << (report.sum_pass ? "PASS" : "FAIL") << "\n"
                  << "product: oracle " << format_rational(report.product_oracle.best_value)
                  << " " << relation << " formula " << format_rational(report.product_formula)
                  << " -> " << (report.product_pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass() ? 0 : kExitVerificationFailed;
}

int cmd_stability(const RunConfig& cfg) {
    const SimpleGraph graph = load_graph(cfg.graph_spec);
    const WeightVector w = cfg.weights_path.empty()
                               ? WeightVector::unit(graph.vertex_count())
                               : load_weights(cfg.weights_path);
    const StabilityReport report = verify_stability(WeightedGraph(graph, w), cfg.l);

    if (cfg.json) {
        print_json(stability_report(report));
    } else {
        std::cout << "blocks: " << blocks_text(report.peel.blocks) << "\n" << "pivots:";
        for (int v : report.peel.pivots) std::cout << " " << v + 1;
        std::cout << "\n"
                  << "removed_weight: " << format_rational(report.peel.removed_weight) << "\n"
                  << "deficit: " << format_rational(report.peel.deficit) << "\n"
                  << "pass: " << (report.pass ? "true" : "false") << "\n";
    }
    return report.pass ? 0 : kExitVerificationFailed;
}

int cmd_upgrade(const RunConfig& cfg) {
    const SimpleGraph graph = load_graph(cfg.graph_spec);
    const WeightVector w = cfg.weights_path.empty()
                               ? WeightVector::unit(graph.vertex_count())
                               : load_weights(cfg.weights_path);
    const WeightedGraph before(graph, w);
    const WeightedGraph after = upgrade_to_multipartite(before, cfg.l);

    if (cfg.json) {
        print_json(upgrade_report(before, after));
    } else {
        std::cout << format_graph(after.graph);
        for (int v = 0; v < graph.vertex_count(); ++v)
            std::cout << "# degree " << v + 1 << ": " << before.graph.degree(v) << " -> "
                      << after.graph.degree(v) << "\n";
    }
    return 0;
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_flag("--json", cfg.json, "emit machine-readable JSON");
    sub->add_option("--seed", cfg.seed, "random seed (kept in the config for reproducibility)");
    sub->add_option("--threads", cfg.threads, "worker threads for the exhaustive search")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Turan extremal numbers and extremal graph tools"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* extremal = app.add_subcommand(
        "extremal", "optimal partition and extremal graph for a forbidden pattern");
    extremal->add_option("--weights", cfg.weights_path, "weight file, one weight per line")
        ->required();
    extremal->add_option("--forbid", cfg.pattern_spec, "K<l>, C<n>, P<n>, petersen, file:<path>")
        ->required();
    extremal->add_option("--objective", cfg.objective, "sum (default) or product")
        ->check(CLI::IsMember({"sum", "product"}));
    extremal->add_flag("--heuristic-only", cfg.heuristic_only,
                       "product objective: return the greedy seed without exact search");
    add_common_flags(extremal, cfg);
    extremal->callback([&] { cfg.command = RunConfig::Command::Extremal; });

    auto* erdos = app.add_subcommand(
        "erdos-stone", "chromatic leading term for a non-complete forbidden pattern");
    erdos->add_option("--weights", cfg.weights_path, "weight file")->required();
    erdos->add_option("--forbid", cfg.pattern_spec, "C<n>, P<n>, petersen, file:<path>")
        ->required();
    erdos->add_option("--objective", cfg.objective, "sum (default) or product")
        ->check(CLI::IsMember({"sum", "product"}));
    erdos->add_flag("--heuristic-only", cfg.heuristic_only,
                    "product objective: return the greedy seed without exact search");
    add_common_flags(erdos, cfg);
    erdos->callback([&] {
        cfg.command = RunConfig::Command::Extremal;
        cfg.require_general = true;
    });

    auto* oracle = app.add_subcommand(
        "oracle", "exhaustive ground truth vs the partition formulas (both objectives)");
    oracle->add_option("--weights", cfg.weights_path, "weight file (unit weights with --n)");
    oracle->add_option("--n", cfg.n, "vertex count; with no weight file, unit weights");
    oracle->add_option("--forbid", cfg.pattern_spec, "forbidden pattern")->required();
    add_common_flags(oracle, cfg);
    oracle->callback([&] { cfg.command = RunConfig::Command::Oracle; });

    auto* stability = app.add_subcommand(
        "stability", "greedy peel of a K_{l+1}-free graph and the removed-weight bound");
    stability->add_option("--graph", cfg.graph_spec, "graph file or named graph")->required();
    stability->add_option("--weights", cfg.weights_path, "weight file (default: unit)");
    stability->add_option("--l", cfg.l, "the graph must be K_{l+1}-free")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common_flags(stability, cfg);
    stability->callback([&] { cfg.command = RunConfig::Command::Stability; });

    auto* upgrade = app.add_subcommand(
        "upgrade", "complete multipartite rebuild of a K_l-free graph, no degree lost");
    upgrade->add_option("--graph", cfg.graph_spec, "graph file or named graph")->required();
    upgrade->add_option("--weights", cfg.weights_path, "weight file (default: unit)");
    upgrade->add_option("--l", cfg.l, "forbidden clique size (>= 3)")->required();
    add_common_flags(upgrade, cfg);
    upgrade->callback([&] { cfg.command = RunConfig::Command::Upgrade; });

    CLI11_PARSE(app, argc, argv);

    try {
        switch (cfg.command) {
        case RunConfig::Command::Extremal: return cmd_extremal(cfg);
        case RunConfig::Command::Oracle: return cmd_oracle(cfg);
        case RunConfig::Command::Stability: return cmd_stability(cfg);
        case RunConfig::Command::Upgrade: return cmd_upgrade(cfg);
        }
    } catch (const CliquePresentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCliquePresent;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const PatternTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const Error& e) { // parse errors, empty weights, bipartite patterns
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
