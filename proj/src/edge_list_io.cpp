#include "ccmpc/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "ccmpc/errors.hpp"

namespace ccmpc {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view TrimLeft(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  return s;
}

// Reads one unsigned id token; leaves `s` after the token.
bool TakeId(std::string_view& s, ExternalId& out) {
  s = TrimLeft(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || (ptr != s.data() + s.size() && !IsSpace(*ptr))) {
    return false;
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<ExternalId, ExternalId>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = TrimLeft(line);
    if (s.empty() || s.front() == '#') continue;
    ExternalId u = 0, v = 0;
    if (!TakeId(s, u) || !TakeId(s, v) || !TrimLeft(s).empty()) {
      throw ParseError(line_no, "expected two non-negative integer ids, got '" +
                                    line + "'");
    }
    raw.emplace_back(u, v);
  }

  LoadedGraph out;
  auto& ext = out.ids.external;
  ext.reserve(raw.size() * 2);
  for (auto [u, v] : raw) {
    ext.push_back(u);
    ext.push_back(v);
  }
  std::sort(ext.begin(), ext.end());
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  ext.shrink_to_fit();

  auto dense = [&](ExternalId x) {
    return static_cast<VertexId>(std::lower_bound(ext.begin(), ext.end(), x) -
                                 ext.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(dense(u), dense(v));
  raw.clear();
  raw.shrink_to_fit();
  out.graph = Graph::FromEdges(ext.size(), edges);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const IdTable& ids) {
  for (EdgeRecord e : g.edges()) {
    out << ids.external[e.u] << ' ' << ids.external[e.v] << '\n';
  }
}

void write_assignment_tsv(std::ostream& out, const ComponentAssignment& a,
                          const IdTable& ids) {
  if (a.size() != ids.size()) {
    throw std::invalid_argument("assignment and id table sizes differ");
  }
  // Dense order is external order.
  for (std::size_t v = 0; v < a.size(); ++v) {
    out << ids.external[v] << '\t' << ids.external[a.rep[v]] << '\n';
  }
}

std::unordered_map<ExternalId, ExternalId> read_assignment_tsv(
    std::istream& in) {
  std::unordered_map<ExternalId, ExternalId> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    if (TrimLeft(s).empty()) continue;
    ExternalId v = 0, rep = 0;
    if (!TakeId(s, v) || !TakeId(s, rep) || !TrimLeft(s).empty()) {
      throw ParseError(line_no, "expected 'id<TAB>representative'");
    }
    if (!out.emplace(v, rep).second) {
      throw ParseError(line_no, "duplicate vertex " + std::to_string(v));
    }
  }
  return out;
}

}  // namespace ccmpc
