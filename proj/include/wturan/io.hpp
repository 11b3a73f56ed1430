#ifndef WTURAN_IO_HPP
#define WTURAN_IO_HPP

#include <istream>
#include <optional>
#include <string>

#include "wturan/graph.hpp"
#include "wturan/pattern.hpp"
#include "wturan/weights.hpp"

namespace wturan {

/// Graph text format: first `n <count>`, then `e <u> <v>` lines with 1-based
/// indices. Blank lines and lines starting with '#' are ignored.
SimpleGraph parse_graph(std::istream& in);
std::string format_graph(const SimpleGraph& g);

/// Named small graphs: K3..K8, C3..C12, P2..P12, petersen.
std::optional<SimpleGraph> named_graph(const std::string& name);

/// Reads a graph from a file path, or builds a named graph when no such file
/// exists and the argument matches a known name.
SimpleGraph load_graph(const std::string& path_or_name);

/// Weight file: one weight per line (integer, p/q, or terminating decimal);
/// blank lines and '#' comments ignored.
WeightVector parse_weights(std::istream& in);
WeightVector load_weights(const std::string& path);

/// Pattern spec: K<l> (clique), a named graph, or file:<path>.
ForbiddenPattern parse_pattern(const std::string& spec);

} // namespace wturan

#endif
