#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hypersym/hypergraph.hpp"

namespace hypersym {

// Text format, one directive per line:
//
//   # comment (also after a directive)
//   vertices: 6            (labels 1..6)   or   vertices: a b c
//   edge: 1 2
//
// Exactly one vertices line, before any edge line. Errors: ParseError (with
// line number), UnknownLabel, DuplicateEdge, DuplicateLabel.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph parse_hypergraph_file(const std::filesystem::path& path);

std::string format_hypergraph(const Hypergraph& g);

}  // namespace hypersym
