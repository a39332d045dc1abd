#include "cig/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "cig/errors.hpp"

namespace cig {

namespace {

bool next_significant_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Forest read_graph(std::istream& in) {
  std::string line;
  if (!next_significant_line(in, line)) fail(Errc::ParseError, "missing header line");
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m)) fail(Errc::ParseError, "bad header line: " + line);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_significant_line(in, line)) {
      fail(Errc::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    std::istringstream es(line);
    int a = 0, b = 0;
    if (!(es >> a >> b)) fail(Errc::ParseError, "bad edge line: " + line);
    edges.emplace_back(a, b);
  }
  return build_forest(n, std::move(edges));
}

void write_graph(std::ostream& out, const Forest& f) {
  out << f.order << ' ' << f.edges.size() << '\n';
  for (auto& [a, b] : f.edges) out << a << ' ' << b << '\n';
}

Forest read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Forest& f) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot open " + path);
  write_graph(out, f);
}

}  // namespace cig
