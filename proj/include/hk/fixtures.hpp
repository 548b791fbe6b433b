#pragma once

#include <string>
#include <vector>

#include "hk/graph.hpp"

namespace hk {

/// Built-in graph families; generated on demand, never checked in.
DirectedGraph chain_graph(int n);                    // v0 -> v1 -> ... -> v_{n-1}
DirectedGraph alternating_graph(int n);              // v0 a source, directions alternate
DirectedGraph an_orientation(int n, unsigned mask);  // bit i set: v_i -> v_{i+1}
DirectedGraph triangle_graph();                      // oriented 3-cycle
DirectedGraph unoriented_pair();                     // two vertices, edges both ways
DirectedGraph isolated_graph(int n);                 // no edges

struct NamedGraph {
  std::string name;
  DirectedGraph graph;
};

/// Acyclic graphs on at most five vertices exercised by the idempotent and
/// oracle criteria.
std::vector<NamedGraph> acyclic_fixtures();

/// The <= 4-vertex fixtures for oracle/engine agreement.
std::vector<NamedGraph> oracle_fixtures();

struct ReversalFixture {
  std::string name;
  DirectedGraph graph;
  VertexSet piece2;
  VertexId glue;
};

/// Glued 3-5 vertex graphs for the edge-reversal inequality, covering both
/// the strict and the equality branch.
std::vector<ReversalFixture> reversal_fixtures();

/// Builder expressions for the CLI: chain:N, alt:N, zn:N, orient:N:MASK,
/// triangle, abc, unoriented2, isolated:N.
DirectedGraph build_graph_expr(const std::string& expr);

}  // namespace hk
