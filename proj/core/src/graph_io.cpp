#include "scorpion/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "scorpion/errors.hpp"

namespace scorpion {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Yields significant lines (non-blank, non-comment) with their 1-based
// line numbers.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::size_t i = 0;
      while (i < line.size() && is_blank(line[i])) ++i;
      if (i == line.size() || line[i] == '#') continue;
      out = std::move(line);
      return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j)
      throw parse_error(line_no, "expected integer, got '" + line.substr(i, j - i) + "'");
    values.push_back(value);
    i = j;
  }
  return values;
}

struct RawGraph {
  int n = 0;
  std::vector<Edge> edges;
};

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

RawGraph read_edge_list(std::istream& in, bool directed, bool strict_duplicates) {
  LineReader reader(in);
  std::string line;

  if (!reader.next(line)) throw parse_error(0, "missing header line");
  const int header_line = reader.line_no();
  auto header = parse_ints(line, header_line);
  if (header.size() != 2)
    throw parse_error(header_line, "header must be two integers: n m");
  auto [n_ll, m_ll] = std::pair(header[0], header[1]);
  if (n_ll < 0 || n_ll > 1'000'000'000)
    throw parse_error(header_line, "vertex count out of range");
  if (m_ll < 0)
    throw parse_error(header_line, "edge count must be nonnegative");
  const int n = static_cast<int>(n_ll);

  RawGraph raw;
  raw.n = n;
  raw.edges.reserve(static_cast<std::size_t>(m_ll));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m_ll) * 2);

  for (long long e = 0; e < m_ll; ++e) {
    if (!reader.next(line))
      throw parse_error(0, "expected " + std::to_string(m_ll) + " edges, found " +
                               std::to_string(e));
    const int line_no = reader.line_no();
    auto fields = parse_ints(line, line_no);
    if (fields.size() != 2)
      throw parse_error(line_no, "edge line must be two integers: u v");
    auto [u_ll, v_ll] = std::pair(fields[0], fields[1]);
    if (u_ll < 0 || u_ll >= n || v_ll < 0 || v_ll >= n)
      throw parse_error(line_no, "endpoint out of range for " + std::to_string(n) +
                                     " vertices");
    const int u = static_cast<int>(u_ll);
    const int v = static_cast<int>(v_ll);
    if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));

    if (directed) {
      if (seen.contains(edge_key(v, u)))
        throw parse_error(line_no, "antiparallel pair between " + std::to_string(u) +
                                       " and " + std::to_string(v));
      if (!seen.insert(edge_key(u, v)).second) {
        if (strict_duplicates)
          throw parse_error(line_no, "duplicate edge " + std::to_string(u) + " " +
                                         std::to_string(v));
        continue;
      }
    } else {
      const int lo = std::min(u, v), hi = std::max(u, v);
      if (!seen.insert(edge_key(lo, hi)).second) {
        if (strict_duplicates)
          throw parse_error(line_no, "duplicate edge " + std::to_string(u) + " " +
                                         std::to_string(v));
        continue;
      }
    }
    raw.edges.emplace_back(u, v);
  }

  if (reader.next(line))
    throw parse_error(reader.line_no(), "unexpected content after edge list");
  return raw;
}

template <typename G>
std::string serialize_impl(const G& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace

UndirectedGraph parse_undirected(std::istream& in, bool strict_duplicates) {
  auto raw = read_edge_list(in, false, strict_duplicates);
  return UndirectedGraph::from_edges(raw.n, raw.edges);
}

UndirectedGraph parse_undirected(const std::string& text, bool strict_duplicates) {
  std::istringstream in(text);
  return parse_undirected(in, strict_duplicates);
}

DirectedGraph parse_directed(std::istream& in, bool strict_duplicates) {
  auto raw = read_edge_list(in, true, strict_duplicates);
  return DirectedGraph::from_edges(raw.n, raw.edges);
}

DirectedGraph parse_directed(const std::string& text, bool strict_duplicates) {
  std::istringstream in(text);
  return parse_directed(in, strict_duplicates);
}

std::string serialize(const UndirectedGraph& g) { return serialize_impl(g); }

std::string serialize(const DirectedGraph& g) { return serialize_impl(g); }

}  // namespace scorpion
