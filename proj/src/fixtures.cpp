#include "hk/fixtures.hpp"

#include <cstdlib>

namespace hk {

DirectedGraph chain_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph alternating_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0)
      edges.emplace_back(i, i + 1);
    else
      edges.emplace_back(i + 1, i);
  }
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph an_orientation(int n, unsigned mask) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    if ((mask >> i) & 1)
      edges.emplace_back(i, i + 1);
    else
      edges.emplace_back(i + 1, i);
  }
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph triangle_graph() {
  return DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}});
}

DirectedGraph unoriented_pair() {
  return DirectedGraph(2, {{0, 1}, {1, 0}});
}

DirectedGraph isolated_graph(int n) { return DirectedGraph(n, {}); }

std::vector<NamedGraph> acyclic_fixtures() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 5; ++n)
    out.push_back({"chain" + std::to_string(n), chain_graph(n)});
  for (int n = 2; n <= 5; ++n)
    out.push_back({"alt" + std::to_string(n), alternating_graph(n)});
  out.push_back({"orient4m5", an_orientation(4, 5)});
  out.push_back({"orient5m9", an_orientation(5, 9)});
  out.push_back({"isolated3", isolated_graph(3)});
  out.push_back({"zn4", build_zn(4).graph});
  out.push_back({"zn5", build_zn(5).graph});
  // a non-path DAG: diamond 0->1, 0->2, 1->3, 2->3 plus a tail
  out.push_back({"diamond", DirectedGraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})});
  out.push_back(
      {"diamond5", DirectedGraph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}})});
  return out;
}

std::vector<NamedGraph> oracle_fixtures() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 4; ++n)
    out.push_back({"chain" + std::to_string(n), chain_graph(n)});
  for (int n = 3; n <= 4; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask)
      out.push_back({"orient" + std::to_string(n) + "m" + std::to_string(mask),
                     an_orientation(n, mask)});
  out.push_back({"isolated2", isolated_graph(2)});
  out.push_back({"zn4", build_zn(4).graph});
  out.push_back({"diamond", DirectedGraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})});
  out.push_back({"unoriented2", unoriented_pair()});
  return out;
}

std::vector<ReversalFixture> reversal_fixtures() {
  std::vector<ReversalFixture> out;
  // b->a<-c: reversing {a,c} gives b->a->c; a not isolated, strict growth.
  out.push_back({"sink3", DirectedGraph(3, {{1, 0}, {2, 0}}),
                 VertexSet::of({0, 2}), 0});
  // a<-b, a<-c<-d glued at sink a, reversing the long piece.
  out.push_back({"sink4", DirectedGraph(4, {{1, 0}, {2, 0}, {3, 2}}),
                 VertexSet::of({0, 2, 3}), 0});
  // five vertices: chains of length 2 into a shared sink.
  out.push_back({"sink5", DirectedGraph(5, {{1, 0}, {2, 1}, {3, 0}, {4, 3}}),
                 VertexSet::of({0, 3, 4}), 0});
  // source in the middle: b<-a->c, reversing {a,c}.
  out.push_back({"source3", DirectedGraph(3, {{0, 1}, {0, 2}}),
                 VertexSet::of({0, 2}), 0});
  // piece2 = {a} alone: reversal is the identity, so equality must hold.
  out.push_back({"identity3", DirectedGraph(3, {{1, 0}, {2, 0}}),
                 VertexSet::of({0}), 0});
  // glue isolated inside piece2 = {a, d} (d disconnected): equality again.
  out.push_back({"isolated4", DirectedGraph(4, {{1, 0}, {2, 0}}),
                 VertexSet::of({0, 3}), 0});
  return out;
}

DirectedGraph build_graph_expr(const std::string& expr) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t colon = s.find(':', pos);
      if (colon == std::string::npos) {
        parts.push_back(s.substr(pos));
        break;
      }
      parts.push_back(s.substr(pos, colon - pos));
      pos = colon + 1;
    }
    return parts;
  };
  std::vector<std::string> parts = split(expr);
  const std::string& kind = parts[0];
  auto num = [&](size_t i) {
    if (i >= parts.size()) raise(Errc::input, "builder needs a number: " + expr);
    return std::atoi(parts[i].c_str());
  };
  if (kind == "chain") return chain_graph(num(1));
  if (kind == "alt") return alternating_graph(num(1));
  if (kind == "zn") return build_zn(num(1)).graph;
  if (kind == "orient") return an_orientation(num(1), num(2));
  if (kind == "triangle") return triangle_graph();
  if (kind == "abc") return chain_graph(3);
  if (kind == "unoriented2") return unoriented_pair();
  if (kind == "isolated") return isolated_graph(num(1));
  raise(Errc::input, "unknown builder expression: " + expr);
}

}  // namespace hk
