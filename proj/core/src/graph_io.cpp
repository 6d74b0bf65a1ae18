#include "errold/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "errold/errors.hpp"

namespace errold {
namespace {

std::optional<int> parse_id(std::string_view token) {
  if (token.empty() || token.front() == '+' || token.front() == '-') return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

// "<a> <b>" with exactly one space.
std::optional<std::pair<std::string_view, std::string_view>> split_pair(std::string_view line) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  return std::pair{line.substr(0, space), line.substr(space + 1)};
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("file-not-found: " + path);
  return in;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  int max_id = -1;
  bool seen_content = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto parts = split_pair(line);
    if (!parts) throw ParseError(line_no, "expected \"<u> <v>\"");
    if (!seen_content && parts->first == "n") {
      const auto count = parse_id(parts->second);
      if (!count) throw ParseError(line_no, "bad vertex count");
      declared = *count;
      seen_content = true;
      continue;
    }
    seen_content = true;
    const auto u = parse_id(parts->first);
    const auto v = parse_id(parts->second);
    if (!u || !v) throw ParseError(line_no, "expected two decimal vertex ids");
    if (*u == *v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(*u));
    edges.emplace_back(*u, *v);
    max_id = std::max({max_id, *u, *v});
  }
  const int n = declared.value_or(max_id + 1);
  if (max_id >= n) {
    throw ValidationError("vertex " + std::to_string(max_id) + " exceeds declared count " + std::to_string(n));
  }
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

VertexSet parse_detector_set(std::istream& in, int n) {
  VertexSet s(n);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream tokens{std::string(line)};
    std::string token;
    while (tokens >> token) {
      const auto id = parse_id(token);
      if (!id) throw ParseError(line_no, "bad vertex id '" + token + "'");
      if (*id >= n) {
        throw ValidationError("line " + std::to_string(line_no) + ": vertex " + token + " outside 0.." +
                              std::to_string(n - 1));
      }
      if (s.contains(*id)) throw ValidationError("line " + std::to_string(line_no) + ": repeated vertex " + token);
      s.insert(*id);
    }
  }
  return s;
}

VertexSet parse_detector_set(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  return parse_detector_set(in, n);
}

VertexSet read_detector_set_file(const std::string& path, int n) {
  auto in = open_or_throw(path);
  return parse_detector_set(in, n);
}

void write_detector_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (int v : s) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << '\n';
}

}  // namespace errold
