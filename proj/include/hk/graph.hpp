#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hk/error.hpp"

namespace hk {

using VertexId = int;

/// Subset of the vertices of one graph, as a bitmask. Graphs are capped at
/// 64 vertices; exact enumeration runs out of steam long before that.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(uint64_t bits) : bits_(bits) {}
  static VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  bool contains(int v) const { return (bits_ >> v) & 1; }
  void insert(int v) { bits_ |= uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(uint64_t{1} << v); }
  int count() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  uint64_t bits() const { return bits_; }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  friend bool operator==(VertexSet a, VertexSet b) = default;

  std::vector<int> to_vector() const;

 private:
  uint64_t bits_ = 0;
};

/// Simple directed graph with dense 0-based vertices and optional labels.
/// Immutable after construction; all algorithms work on indices.
///
/// Unoriented edges (both arcs between a pair) are representable but flag
/// the graph via no_unoriented_edges() = false; representation-effectiveness
/// operations reject such graphs unless explicitly run in the zero-weight
/// testing mode.
class DirectedGraph {
 public:
  DirectedGraph() = default;  // the empty graph
  DirectedGraph(int n, std::vector<std::pair<int, int>> edges,
                std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const {
    return u != v && ((out_[u] >> v) & 1);
  }
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }
  VertexSet out_neighbors(int v) const { return VertexSet(out_[v]); }
  VertexSet in_neighbors(int v) const { return VertexSet(in_[v]); }
  int out_degree(int v) const { return __builtin_popcountll(out_[v]); }
  int in_degree(int v) const { return __builtin_popcountll(in_[v]); }
  bool no_unoriented_edges() const { return no_unoriented_; }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool single_char_labels() const { return single_char_labels_; }
  int vertex_by_label(const std::string& name) const;  // -1 if absent

  /// Vertex order along the path when the underlying undirected graph is a
  /// simple path (type A_n); empty otherwise. Of the two possible orders,
  /// the one whose first endpoint has the smaller index is cached.
  const std::vector<int>& canonical_order() const { return canonical_order_; }

  /// Full subgraph on `keep`, reindexed densely. old_ids (optional) receives
  /// the original index of each new vertex, ascending.
  DirectedGraph induced(VertexSet keep, std::vector<int>* old_ids = nullptr) const;

  std::string description() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, deduped
  std::vector<uint64_t> out_, in_;
  std::vector<std::string> labels_;
  bool no_unoriented_ = true;
  bool single_char_labels_ = true;
  std::vector<int> canonical_order_;
};

bool is_type_an(const DirectedGraph& g);
bool is_linearly_ordered(const DirectedGraph& g);

/// Vertices with in-degree 0 or out-degree 0 (isolated vertices are both).
VertexSet sources_and_sinks(const DirectedGraph& g);

/// True iff the full subgraph on `sub` contains a directed cycle.
bool has_oriented_cycle(const DirectedGraph& g, VertexSet sub);

/// All vertices with a directed (possibly trivial) path to `a`.
VertexSet source_graph(const DirectedGraph& g, VertexId a);

/// True iff no directed walk between two `sub` vertices leaves `sub`.
bool is_path_complete(const DirectedGraph& g, VertexSet sub);

/// Decomposition of a type-A_n graph into its maximal connected linearly
/// ordered full subgraphs, left to right along the canonical order.
/// Consecutive pieces overlap in exactly one source-or-sink glue vertex.
struct GluingDecomposition {
  std::vector<VertexSet> pieces;
  std::vector<int> piece_sizes;        // vertex counts, in order
  std::vector<VertexId> glue_vertices; // between consecutive pieces
};
GluingDecomposition gluing_decomposition(const DirectedGraph& g);

/// Reverses every edge with both endpoints in `sub`; other edges unchanged.
DirectedGraph reverse_edges(const DirectedGraph& g, VertexSet sub);

/// The "double fan" graph: a global source a, a global sink b, and middles
/// v_3..v_n with edges a->v_i->b. Vertex 0 is a, vertex 1 is b, middle v_i
/// is index i-1 (so its traditional subscript is index+1).
struct ZGraph {
  DirectedGraph graph;
  VertexId source = 0;
  VertexId sink = 1;
  std::vector<VertexId> middles;
  int middle_subscript(VertexId v) const { return v + 1; }
};
ZGraph build_zn(int n);  // n >= 4 total vertices

enum class BlockKind { chain, zn, kiselman };
struct BlockSpec {
  BlockKind kind;
  int size;  // total vertices including both glue endpoints
};
enum class VertexRole { source, sink };

/// Three-step construction: orient a forest so every vertex is a source or
/// a sink, then replace each edge by a block, matching source to source and
/// sink to sink. Forest vertices keep ids 0..forest_n-1; block interiors are
/// appended in edge order. Kiselman blocks are recognized but rejected.
DirectedGraph build_glued(int forest_n,
                          const std::vector<std::pair<int, int>>& forest_edges,
                          const std::vector<VertexRole>& orientation,
                          const std::vector<BlockSpec>& blocks);

/// Line-oriented text format: `n <count>` header, `e <u> <v>` per edge,
/// `#` comments. Also accepts the DOT subset `digraph { a -> b; }` with
/// names mapped to dense indices in first-appearance order.
DirectedGraph parse_graph(const std::string& text);
DirectedGraph load_graph(const std::string& path);
std::string format_graph(const DirectedGraph& g);

}  // namespace hk
