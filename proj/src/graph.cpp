#include "hk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hk {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) {
    if (n <= 26)
      labels[v] = std::string(1, static_cast<char>('a' + v));
    else
      labels[v] = "v" + std::to_string(v);
  }
  return labels;
}

// Path order of the underlying undirected graph, or empty if it is not a
// simple path on all vertices.
std::vector<int> compute_canonical_order(int n,
                                         const std::vector<uint64_t>& undirected) {
  if (n == 0) return {};
  if (n == 1) return {0};
  int deg1 = 0;
  int start = -1;
  for (int v = 0; v < n; ++v) {
    int d = __builtin_popcountll(undirected[v]);
    if (d == 1) {
      ++deg1;
      if (start < 0) start = v;  // smaller endpoint wins the tie-break
    } else if (d != 2) {
      return {};
    }
  }
  if (deg1 != 2) return {};
  std::vector<int> order;
  order.reserve(n);
  uint64_t seen = 0;
  int cur = start;
  while (true) {
    order.push_back(cur);
    seen |= uint64_t{1} << cur;
    uint64_t next = undirected[cur] & ~seen;
    if (next == 0) break;
    cur = __builtin_ctzll(next);
  }
  if (static_cast<int>(order.size()) != n) return {};  // disconnected
  return order;
}

}  // namespace

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<std::string> labels)
    : n_(n) {
  if (n < 0 || n > 64) raise(Errc::input, "vertex count must be in [0, 64]");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      raise(Errc::input, "edge endpoint out of range");
    if (u == v) raise(Errc::input, "self-loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  out_.assign(n_, 0);
  in_.assign(n_, 0);
  for (auto [u, v] : edges_) {
    out_[u] |= uint64_t{1} << v;
    in_[v] |= uint64_t{1} << u;
  }
  no_unoriented_ = true;
  for (auto [u, v] : edges_)
    if (u < v && ((out_[v] >> u) & 1)) no_unoriented_ = false;

  if (labels.empty()) {
    labels_ = default_labels(n_);
  } else {
    if (static_cast<int>(labels.size()) != n_)
      raise(Errc::input, "label count does not match vertex count");
    labels_ = std::move(labels);
  }
  single_char_labels_ = true;
  for (const auto& l : labels_)
    if (l.size() != 1) single_char_labels_ = false;

  std::vector<uint64_t> undirected(n_, 0);
  for (int v = 0; v < n_; ++v) undirected[v] = out_[v] | in_[v];
  canonical_order_ = compute_canonical_order(n_, undirected);
}

int DirectedGraph::vertex_by_label(const std::string& name) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == name) return v;
  return -1;
}

DirectedGraph DirectedGraph::induced(VertexSet keep,
                                     std::vector<int>* old_ids) const {
  std::vector<int> vertices = (keep & VertexSet::all(n_)).to_vector();
  std::vector<int> new_id(n_, -1);
  for (size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> sub_edges;
  for (auto [u, v] : edges_)
    if (new_id[u] >= 0 && new_id[v] >= 0)
      sub_edges.emplace_back(new_id[u], new_id[v]);
  std::vector<std::string> sub_labels;
  for (int v : vertices) sub_labels.push_back(labels_[v]);
  if (old_ids) *old_ids = vertices;
  return DirectedGraph(static_cast<int>(vertices.size()), std::move(sub_edges),
                       std::move(sub_labels));
}

std::string DirectedGraph::description() const {
  std::string out = "n" + std::to_string(n_);
  if (!edges_.empty()) {
    out += ";";
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (i) out += ",";
      out += labels_[edges_[i].first] + ">" + labels_[edges_[i].second];
    }
  }
  return out;
}

bool is_type_an(const DirectedGraph& g) {
  return !g.canonical_order().empty();
}

bool is_linearly_ordered(const DirectedGraph& g) {
  const auto& order = g.canonical_order();
  if (order.empty()) return false;
  if (order.size() == 1) return true;
  bool forward = true, backward = true;
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    int u = order[i], v = order[i + 1];
    if (!(g.has_edge(u, v) && !g.has_edge(v, u))) forward = false;
    if (!(g.has_edge(v, u) && !g.has_edge(u, v))) backward = false;
  }
  return forward || backward;
}

VertexSet sources_and_sinks(const DirectedGraph& g) {
  VertexSet s;
  for (int v = 0; v < g.size(); ++v)
    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) s.insert(v);
  return s;
}

bool has_oriented_cycle(const DirectedGraph& g, VertexSet sub) {
  // Kahn peeling restricted to the induced subgraph.
  uint64_t alive = (sub & VertexSet::all(g.size())).bits();
  bool removed = true;
  while (removed) {
    removed = false;
    uint64_t m = alive;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      if ((g.in_neighbors(v).bits() & alive) == 0) {
        alive &= ~(uint64_t{1} << v);
        removed = true;
      }
    }
  }
  return alive != 0;
}

VertexSet source_graph(const DirectedGraph& g, VertexId a) {
  if (a < 0 || a >= g.size()) raise(Errc::input, "vertex out of range");
  uint64_t reach = uint64_t{1} << a;
  bool grew = true;
  while (grew) {
    grew = false;
    uint64_t m = reach;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      uint64_t add = g.in_neighbors(v).bits() & ~reach;
      if (add) {
        reach |= add;
        grew = true;
      }
    }
  }
  return VertexSet(reach);
}

namespace {

// Everything reachable from `start` by a nonempty directed walk.
uint64_t forward_closure(const DirectedGraph& g, uint64_t start) {
  uint64_t reach = 0;
  uint64_t frontier = start;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      int v = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= g.out_neighbors(v).bits();
    }
    frontier = next & ~reach;
    reach |= next;
  }
  return reach;
}

uint64_t backward_closure(const DirectedGraph& g, uint64_t start) {
  uint64_t reach = 0;
  uint64_t frontier = start;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      int v = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= g.in_neighbors(v).bits();
    }
    frontier = next & ~reach;
    reach |= next;
  }
  return reach;
}

}  // namespace

bool is_path_complete(const DirectedGraph& g, VertexSet sub) {
  uint64_t s = (sub & VertexSet::all(g.size())).bits();
  // A violating walk enters some outside vertex w after leaving `sub` and
  // later re-enters `sub`, i.e. w is forward-reachable from sub and sub is
  // forward-reachable from w.
  uint64_t from_sub = forward_closure(g, s);
  uint64_t into_sub = backward_closure(g, s);
  return (from_sub & into_sub & ~s) == 0;
}

GluingDecomposition gluing_decomposition(const DirectedGraph& g) {
  const auto& order = g.canonical_order();
  if (order.empty()) raise(Errc::not_type_a, "graph is not of type A_n");
  if (!g.no_unoriented_edges())
    raise(Errc::not_type_a, "gluing decomposition needs oriented edges only");
  GluingDecomposition d;
  int n = g.size();
  if (n == 1) {
    d.pieces = {VertexSet::of({order[0]})};
    d.piece_sizes = {1};
    return d;
  }
  std::vector<bool> dir(n - 1);  // true: order[i] -> order[i+1]
  for (int i = 0; i + 1 < n; ++i) dir[i] = g.has_edge(order[i], order[i + 1]);
  int piece_start = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (i == n - 1 || dir[i] != dir[i - 1]) {
      VertexSet piece;
      for (int j = piece_start; j <= i; ++j) piece.insert(order[j]);
      d.pieces.push_back(piece);
      d.piece_sizes.push_back(i - piece_start + 1);
      if (i < n - 1) d.glue_vertices.push_back(order[i]);
      piece_start = i;
    }
  }
  return d;
}

DirectedGraph reverse_edges(const DirectedGraph& g, VertexSet sub) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (sub.contains(u) && sub.contains(v))
      edges.emplace_back(v, u);
    else
      edges.emplace_back(u, v);
  }
  return DirectedGraph(g.size(), std::move(edges), g.labels());
}

ZGraph build_zn(int n) {
  if (n < 4) raise(Errc::too_small, "Z_n needs n >= 4");
  ZGraph z;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels = {"a", "b"};
  for (int v = 2; v < n; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(v, 1);
    labels.push_back("v" + std::to_string(v + 1));
    z.middles.push_back(v);
  }
  z.graph = DirectedGraph(n, std::move(edges), std::move(labels));
  return z;
}

DirectedGraph build_glued(int forest_n,
                          const std::vector<std::pair<int, int>>& forest_edges,
                          const std::vector<VertexRole>& orientation,
                          const std::vector<BlockSpec>& blocks) {
  if (forest_n < 1 || static_cast<int>(orientation.size()) != forest_n)
    raise(Errc::input, "orientation must assign a role to every forest vertex");
  if (blocks.size() != forest_edges.size())
    raise(Errc::input, "one block per forest edge required");

  // Forest check: simple, undirected, acyclic.
  std::vector<int> parent(forest_n);
  for (int v = 0; v < forest_n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : forest_edges) {
    if (u < 0 || u >= forest_n || v < 0 || v >= forest_n || u == v)
      raise(Errc::not_forest, "bad forest edge");
    auto key = std::minmax(u, v);
    if (std::find(seen.begin(), seen.end(),
                  std::make_pair(key.first, key.second)) != seen.end())
      raise(Errc::not_forest, "duplicate forest edge");
    seen.emplace_back(key.first, key.second);
    int ru = find(u), rv = find(v);
    if (ru == rv) raise(Errc::not_forest, "forest has an undirected cycle");
    parent[ru] = rv;
  }

  for (auto [u, v] : forest_edges)
    if (orientation[u] == orientation[v])
      raise(Errc::bad_orientation,
            "every forest edge must join a source to a sink");

  int next = forest_n;
  std::vector<std::pair<int, int>> edges;
  for (size_t e = 0; e < forest_edges.size(); ++e) {
    auto [u, v] = forest_edges[e];
    int src = orientation[u] == VertexRole::source ? u : v;
    int snk = orientation[u] == VertexRole::source ? v : u;
    const BlockSpec& b = blocks[e];
    switch (b.kind) {
      case BlockKind::chain: {
        if (b.size < 2) raise(Errc::input, "chain block needs >= 2 vertices");
        int prev = src;
        for (int i = 0; i < b.size - 2; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        edges.emplace_back(prev, snk);
        break;
      }
      case BlockKind::zn: {
        if (b.size < 4) raise(Errc::too_small, "Z_n block needs n >= 4");
        for (int i = 0; i < b.size - 2; ++i) {
          edges.emplace_back(src, next);
          edges.emplace_back(next, snk);
          ++next;
        }
        break;
      }
      case BlockKind::kiselman:
        raise(Errc::unsupported_block, "Kiselman blocks are not supported");
    }
  }
  return DirectedGraph(next, std::move(edges));
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

DirectedGraph parse_dot(const std::string& text) {
  size_t open = text.find('{');
  size_t close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    raise(Errc::input, "malformed digraph block");
  std::string body = text.substr(open + 1, close - open - 1);

  std::vector<std::string> names;
  auto intern = [&](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    names.push_back(name);
    return static_cast<int>(names.size() - 1);
  };

  std::vector<std::pair<int, int>> edges;
  for (size_t pos = 0; pos < body.size();) {
    size_t end = body.find_first_of(";\n", pos);
    if (end == std::string::npos) end = body.size();
    std::string stmt = trim(body.substr(pos, end - pos));
    pos = end + 1;
    if (stmt.empty()) continue;
    // stmt is `a` or `a -> b -> c`
    std::vector<std::string> parts;
    size_t p = 0;
    while (true) {
      size_t arrow = stmt.find("->", p);
      if (arrow == std::string::npos) {
        parts.push_back(trim(stmt.substr(p)));
        break;
      }
      parts.push_back(trim(stmt.substr(p, arrow - p)));
      p = arrow + 2;
    }
    for (const auto& part : parts)
      if (part.empty()) raise(Errc::input, "empty vertex name in digraph");
    int prev = intern(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) {
      int cur = intern(parts[i]);
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  int n = static_cast<int>(names.size());
  return DirectedGraph(n, std::move(edges), std::move(names));
}

}  // namespace

DirectedGraph parse_graph(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("digraph", 0) == 0) return parse_dot(t);

  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "n") {
      if (!(ls >> n) || n < 0) raise(Errc::input, "bad vertex count line");
    } else if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) raise(Errc::input, "bad edge line: " + line);
      edges.emplace_back(u, v);
    } else {
      raise(Errc::input, "unknown graph line: " + line);
    }
  }
  if (n < 0) raise(Errc::input, "missing `n <count>` header");
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::input, "cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const DirectedGraph& g) {
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace hk
