#include "ett/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ett {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<i64, i64>& p) const {
    u64 h = static_cast<u64>(p.first) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<u64>(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6);
    return static_cast<std::size_t>(h);
  }
};

i64 parse_int(const std::string& tok, i64 line_no) {
  i64 value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": malformed integer token '" + tok + "'");
  }
  return value;
}

// Appends {u, v} normalized, counting self-loop and duplicate drops.
struct EdgeAccumulator {
  EdgeList out;
  std::unordered_set<std::pair<i64, i64>, PairHash> seen;
  ParseStats stats;

  void add(i64 u, i64 v) {
    out.n = std::max(out.n, std::max(u, v) + 1);
    if (u == v) {
      ++stats.self_loops_removed;
      return;
    }
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second) {
      ++stats.duplicates_removed;
      return;
    }
    out.edges.emplace_back(e.first, e.second);
  }
};

}  // namespace

EdgeList parse_edge_list(std::istream& in, ParseStats* stats) {
  EdgeAccumulator acc;
  std::string line;
  i64 line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;  // whitespace-only line
    if (!(ls >> b)) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected two integer tokens");
    }
    i64 u = parse_int(a, line_no);
    i64 v = parse_int(b, line_no);
    if (u < 0 || v < 0) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": negative node id");
    }
    acc.add(u, v);
  }
  if (stats) *stats = acc.stats;
  return std::move(acc.out);
}

EdgeList parse_dimacs_gr(std::istream& in, ParseStats* stats) {
  EdgeAccumulator acc;
  bool have_problem_line = false;
  i64 declared_n = 0;
  std::string line;
  i64 line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      std::string problem, ns, ms;
      if (!(ls >> problem >> ns >> ms)) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": malformed problem line");
      }
      declared_n = parse_int(ns, line_no);
      have_problem_line = true;
      acc.out.n = std::max(acc.out.n, declared_n);
    } else if (kind == "a" || kind == "e") {
      if (!have_problem_line) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": arc line before problem line");
      }
      std::string us, vs;
      if (!(ls >> us >> vs)) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected two node ids");
      }
      i64 u = parse_int(us, line_no);
      i64 v = parse_int(vs, line_no);
      if (u < 1 || u > declared_n || v < 1 || v > declared_n) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": node id outside [1, n]");
      }
      acc.add(u - 1, v - 1);
    }
    // Other line kinds are ignored.
  }
  if (!have_problem_line) {
    throw std::runtime_error("missing DIMACS problem line");
  }
  if (stats) *stats = acc.stats;
  return std::move(acc.out);
}

void write_edge_list(std::ostream& out, const EdgeList& g) {
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

AdjacencyIndex build_adjacency(const EdgeList& g) {
  AdjacencyIndex adj;
  adj.n = g.n;
  adj.m = g.m();
  std::vector<i64> degree(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++degree[u];
    ++degree[v];
  }
  adj.offsets.assign(g.n + 1, 0);
  for (i64 v = 0; v < g.n; ++v) adj.offsets[v + 1] = adj.offsets[v] + degree[v];
  adj.neighbors.assign(2 * adj.m, 0);
  adj.edge_ids.assign(2 * adj.m, 0);
  std::vector<i64> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (i64 e = 0; e < adj.m; ++e) {
    auto [u, v] = g.edges[e];
    adj.neighbors[cursor[u]] = v;
    adj.edge_ids[cursor[u]++] = e;
    adj.neighbors[cursor[v]] = u;
    adj.edge_ids[cursor[v]++] = e;
  }
  // Sort each vertex slice by neighbor id, keeping edge ids aligned.
  parallel_for(g.n, [&](i64 v) {
    i64 lo = adj.offsets[v], hi = adj.offsets[v + 1];
    std::vector<std::pair<i64, i64>> slice;
    slice.reserve(hi - lo);
    for (i64 i = lo; i < hi; ++i)
      slice.emplace_back(adj.neighbors[i], adj.edge_ids[i]);
    std::sort(slice.begin(), slice.end());
    for (i64 i = lo; i < hi; ++i) {
      adj.neighbors[i] = slice[i - lo].first;
      adj.edge_ids[i] = slice[i - lo].second;
    }
  });
  return adj;
}

void validate_tree(const RootedTree& t) {
  if (t.n <= 0 || static_cast<i64>(t.parent.size()) != t.n) {
    throw std::invalid_argument("parent array size mismatch");
  }
  if (t.root < 0 || t.root >= t.n || t.parent[t.root] != kNone) {
    throw std::invalid_argument("root has no kNone parent entry");
  }
  i64 roots = 0;
  for (i64 v = 0; v < t.n; ++v) {
    if (t.parent[v] == kNone) {
      ++roots;
    } else if (t.parent[v] < 0 || t.parent[v] >= t.n) {
      throw std::invalid_argument("parent id out of range");
    }
  }
  if (roots != 1) throw std::invalid_argument("tree must have exactly one root");
  // Parent chains must reach the root within n steps.
  std::vector<char> ok(t.n, 0);
  ok[t.root] = 1;
  for (i64 v = 0; v < t.n; ++v) {
    i64 u = v, steps = 0;
    while (!ok[u]) {
      u = t.parent[u];
      if (++steps > t.n) throw std::invalid_argument("cycle in parent array");
    }
    u = v;
    while (!ok[u]) {
      ok[u] = 1;
      u = t.parent[u];
    }
  }
}

EdgeList tree_edges(const RootedTree& t) {
  EdgeList g;
  g.n = t.n;
  g.edges.reserve(t.n > 0 ? t.n - 1 : 0);
  for (i64 v = 0; v < t.n; ++v) {
    if (t.parent[v] == kNone) continue;
    g.edges.emplace_back(std::min(v, t.parent[v]), std::max(v, t.parent[v]));
  }
  return g;
}

ComponentResult largest_component(const EdgeList& g) {
  ComponentResult res;
  res.old_to_new.assign(g.n, kNone);
  if (g.n == 0) return res;

  // Union-find with the smaller id as representative, so the tie rule
  // (smallest minimum original id) falls out of the representative order.
  std::vector<i64> uf(g.n);
  for (i64 v = 0; v < g.n; ++v) uf[v] = v;
  auto find = [&](i64 v) {
    i64 r = v;
    while (uf[r] != r) r = uf[r];
    while (uf[v] != r) {
      i64 next = uf[v];
      uf[v] = r;
      v = next;
    }
    return r;
  };
  for (const auto& [u, v] : g.edges) {
    i64 ru = find(u), rv = find(v);
    if (ru != rv) uf[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::vector<i64> size(g.n, 0);
  for (i64 v = 0; v < g.n; ++v) ++size[find(v)];
  i64 best = 0;
  for (i64 v = 1; v < g.n; ++v) {
    if (size[v] > size[best]) best = v;  // equal sizes keep the smaller rep
  }
  i64 next_id = 0;
  for (i64 v = 0; v < g.n; ++v) {
    if (find(v) == best) res.old_to_new[v] = next_id++;
  }
  res.graph.n = next_id;
  for (const auto& [u, v] : g.edges) {
    if (res.old_to_new[u] != kNone) {
      res.graph.edges.emplace_back(res.old_to_new[u], res.old_to_new[v]);
    }
  }
  return res;
}

RootedTree read_parent_tree(std::istream& in) {
  i64 n = 0;
  if (!(in >> n) || n <= 0) {
    throw std::runtime_error("parent-array file: bad node count");
  }
  RootedTree t;
  t.n = n;
  t.parent.resize(n);
  t.root = kNone;
  for (i64 v = 0; v < n; ++v) {
    if (!(in >> t.parent[v])) {
      throw std::runtime_error("parent-array file: truncated");
    }
    if (t.parent[v] == kNone) t.root = v;
  }
  validate_tree(t);
  return t;
}

void write_parent_tree(std::ostream& out, const RootedTree& t) {
  out << t.n << '\n';
  for (i64 v = 0; v < t.n; ++v) out << t.parent[v] << (v + 1 == t.n ? '\n' : ' ');
}

}  // namespace ett
