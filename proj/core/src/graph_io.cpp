#include "spl/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace spl {

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  require(next_content_line(in, line), Errc::parse_error, "empty edge list");
  std::istringstream head(line);
  long long n = -1, m = -1;
  head >> n >> m;
  require(n >= 0 && m >= 0, Errc::parse_error, "expected header 'n m'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    require(next_content_line(in, line), Errc::parse_error,
            "edge list truncated");
    std::istringstream ls(line);
    long long u, v;
    require(static_cast<bool>(ls >> u >> v), Errc::parse_error,
            "bad edge line: " + line);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.edge_list();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph read_adjacency_matrix(std::istream& in) {
  std::string line;
  require(next_content_line(in, line), Errc::parse_error, "empty matrix");
  std::istringstream head(line);
  long long n = -1;
  head >> n;
  require(n >= 0, Errc::parse_error, "expected header 'n'");
  std::vector<std::string> rows;
  for (long long i = 0; i < n; ++i) {
    require(next_content_line(in, line), Errc::parse_error,
            "matrix truncated");
    std::string row;
    for (char c : line)
      if (c == '0' || c == '1') row.push_back(c);
    require(static_cast<long long>(row.size()) == n, Errc::parse_error,
            "matrix row of wrong width");
    rows.push_back(row);
  }
  std::vector<std::pair<int, int>> edges;
  for (long long u = 0; u < n; ++u) {
    require(rows[u][u] == '0', Errc::parse_error, "nonzero diagonal");
    for (long long v = u + 1; v < n; ++v) {
      require(rows[u][v] == rows[v][u], Errc::parse_error,
              "matrix not symmetric");
      if (rows[u][v] == '1') edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_adjacency_matrix(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (int u = 0; u < g.order(); ++u) {
    std::string row(g.order(), '0');
    for (int v = 0; v < g.order(); ++v)
      if (g.has_edge(u, v)) row[v] = '1';
    out << row << '\n';
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::parse_error, "cannot open " + path);
  std::string line;
  require(next_content_line(in, line), Errc::parse_error, "empty file");
  std::istringstream probe(line);
  long long a, b;
  bool two = static_cast<bool>(probe >> a >> b);
  in.clear();
  in.seekg(0);
  return two ? read_edge_list(in) : read_adjacency_matrix(in);
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  for (size_t v = 0; v < labels.size(); ++v)
    out << v << ' ' << labels[v] << '\n';
}

}  // namespace spl
