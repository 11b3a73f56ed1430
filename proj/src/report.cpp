#include "wturan/report.hpp"

namespace wturan {

namespace {

using nlohmann::ordered_json;

ordered_json blocks_json(const std::vector<std::vector<int>>& blocks) {
    ordered_json out = ordered_json::array();
    for (const auto& block : blocks) {
        ordered_json b = ordered_json::array();
        for (int v : block) b.push_back(v + 1);
        out.push_back(std::move(b));
    }
    return out;
}

ordered_json edges_json(const SimpleGraph& g) {
    ordered_json out = ordered_json::array();
    for (auto [u, v] : g.edges()) out.push_back(ordered_json::array({u + 1, v + 1}));
    return out;
}

} // namespace

nlohmann::ordered_json extremal_report(const ExtremalResult& result) {
    ordered_json out;
    out["value"] = format_rational(result.objective_value);
    out["blocks"] = blocks_json(result.partition.blocks());
    out["edges"] = edges_json(result.graph.graph);
    out["kind"] = result.kind == ObjectiveKind::Sum ? "sum" : "product";
    out["leading_term_only"] = result.leading_term_only;
    return out;
}

nlohmann::ordered_json certify_report(const CertifyReport& report) {
    ordered_json out;
    out["pattern"] = report.sum_oracle.pattern.name();
    out["leading_term"] = report.leading_term;
    out["sum"] = {{"oracle", format_rational(report.sum_oracle.best_value)},
                  {"formula", format_rational(report.sum_formula)},
                  {"pass", report.sum_pass}};
    out["product"] = {{"oracle", format_rational(report.product_oracle.best_value)},
                      {"formula", format_rational(report.product_formula)},
                      {"pass", report.product_pass}};
    out["pass"] = report.pass();
    return out;
}

nlohmann::ordered_json stability_report(const StabilityReport& report) {
    ordered_json out;
    out["l"] = report.l;
    out["blocks"] = blocks_json(report.peel.blocks);
    ordered_json pivots = ordered_json::array();
    for (int v : report.peel.pivots) pivots.push_back(v + 1);
    out["pivots"] = std::move(pivots);
    ordered_json removed = ordered_json::array();
    for (auto [u, v] : report.peel.removed_edges)
        removed.push_back(ordered_json::array({u + 1, v + 1}));
    out["removed_edges"] = std::move(removed);
    out["removed_weight"] = format_rational(report.peel.removed_weight);
    out["deficit"] = format_rational(report.peel.deficit);
    ordered_json weights = ordered_json::array();
    for (const Rational& w : report.peel.relabeled.weights) weights.push_back(format_rational(w));
    out["relabeled_weights"] = std::move(weights);
    out["extremal_value"] = format_rational(report.extremal_value);
    out["graph_weight"] = format_rational(report.graph_weight);
    out["pass"] = report.pass;
    return out;
}

nlohmann::ordered_json upgrade_report(const WeightedGraph& before, const WeightedGraph& after) {
    ordered_json out;
    out["edges"] = edges_json(after.graph);
    ordered_json degrees = ordered_json::array();
    for (int v = 0; v < before.graph.vertex_count(); ++v)
        degrees.push_back(ordered_json::array({before.graph.degree(v), after.graph.degree(v)}));
    out["degrees"] = std::move(degrees);
    return out;
}

} // namespace wturan
