#include "wturan/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "wturan/errors.hpp"

namespace wturan {

namespace {

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::optional<int> suffix_number(const std::string& name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    int value = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        value = value * 10 + (name[i] - '0');
        if (value > 1000) return std::nullopt;
    }
    return value;
}

SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph::from_edges(n, edges);
}

SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph::from_edges(n, edges);
}

SimpleGraph petersen_graph() {
    // outer 5-cycle, inner pentagram, spokes
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return SimpleGraph::from_edges(10, edges);
}

} // namespace

SimpleGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) +
                                         ": duplicate vertex-count line");
            if (!(fields >> n) || n < 1 || n > SimpleGraph::kMaxVertices)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertex count must be in [1, 64]");
        } else if (tag == "e") {
            if (n < 0) throw ParseError("line " + std::to_string(lineno) +
                                        ": edge before the vertex-count line");
            int u = 0, v = 0;
            if (!(fields >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": malformed edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertex index out of range [1, " + std::to_string(n) + "]");
            if (u == v)
                throw ParseError("line " + std::to_string(lineno) + ": self-loop");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" +
                             tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing vertex-count line ('n <count>')");
    return SimpleGraph::from_edges(n, edges);
}

std::string format_graph(const SimpleGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::optional<SimpleGraph> named_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    if (auto k = suffix_number(name, 'K'); k && *k >= 3 && *k <= 8)
        return SimpleGraph::complete(*k);
    if (auto c = suffix_number(name, 'C'); c && *c >= 3 && *c <= 12)
        return cycle_graph(*c);
    if (auto p = suffix_number(name, 'P'); p && *p >= 2 && *p <= 12)
        return path_graph(*p);
    return std::nullopt;
}

SimpleGraph load_graph(const std::string& path_or_name) {
    if (std::filesystem::exists(path_or_name)) {
        std::ifstream in(path_or_name);
        if (!in) throw ParseError("cannot open graph file '" + path_or_name + "'");
        try {
            return parse_graph(in);
        } catch (const ParseError& e) {
            throw ParseError(path_or_name + ": " + e.what());
        }
    }
    if (auto g = named_graph(path_or_name)) return *g;
    throw ParseError("no such graph file or named graph: '" + path_or_name + "'");
}

WeightVector parse_weights(std::istream& in) {
    std::vector<Rational> weights;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        Rational w;
        try {
            w = parse_rational(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (w < 0)
            throw ParseError("line " + std::to_string(lineno) + ": weights must be >= 0");
        weights.push_back(std::move(w));
    }
    return WeightVector(std::move(weights));
}

WeightVector load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weight file '" + path + "'");
    try {
        return parse_weights(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ForbiddenPattern parse_pattern(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open pattern file '" + path + "'");
        try {
            return ForbiddenPattern::general(parse_graph(in));
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    if (auto l = suffix_number(spec, 'K'))
        return ForbiddenPattern::clique(*l); // cliques take the exact formula path
    if (auto g = named_graph(spec)) return ForbiddenPattern::general(*g);
    throw ParseError("unknown forbidden pattern '" + spec +
                     "' (expected K<l>, C<n>, P<n>, petersen, or file:<path>)");
}

} // namespace wturan
