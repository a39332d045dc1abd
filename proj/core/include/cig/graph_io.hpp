#pragma once

#include <iosfwd>
#include <string>

#include "cig/forest.hpp"

namespace cig {

// Text format: first significant line "n m", then m lines "u v" (0-indexed).
// Lines starting with '#' are comments. write_graph emits the canonical form;
// reading its output and writing again is byte-identical.
Forest read_graph(std::istream& in);
void write_graph(std::ostream& out, const Forest& f);

Forest read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Forest& f);

}  // namespace cig
