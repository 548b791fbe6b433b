#include "hk/presentation.hpp"

#include <algorithm>

namespace hk {

std::vector<Relation> relations_of(const DirectedGraph& g) {
  std::vector<Relation> rels;
  for (int x = 0; x < g.size(); ++x)
    rels.push_back({{x, x}, {x}, RelationKind::idempotent});
  for (int x = 0; x < g.size(); ++x) {
    for (int y = x + 1; y < g.size(); ++y) {
      bool xy = g.has_edge(x, y), yx = g.has_edge(y, x);
      if (!xy && !yx) {
        rels.push_back({{y, x}, {x, y}, RelationKind::commute});
      } else if (xy && yx) {
        rels.push_back({{y, x, y}, {x, y, x}, RelationKind::braid});
      } else {
        int s = xy ? x : y, t = xy ? y : x;  // edge s -> t
        rels.push_back({{s, t, s}, {s, t}, RelationKind::arrow});
        rels.push_back({{t, s, t}, {s, t}, RelationKind::arrow});
      }
    }
  }
  return rels;
}

namespace {

void apply_at(const Word& w, size_t pos, const Word& from, const Word& to,
              std::vector<Word>& out) {
  if (pos + from.size() > w.size()) return;
  for (size_t i = 0; i < from.size(); ++i)
    if (w[pos + i] != from[i]) return;
  Word next(w.begin(), w.begin() + pos);
  next.insert(next.end(), to.begin(), to.end());
  next.insert(next.end(), w.begin() + pos + from.size(), w.end());
  out.push_back(std::move(next));
}

}  // namespace

std::vector<Word> single_step_neighbors(const Word& w,
                                        const std::vector<Relation>& rels) {
  std::vector<Word> out;
  for (const Relation& r : rels) {
    for (size_t pos = 0; pos <= w.size(); ++pos) {
      apply_at(w, pos, r.lhs, r.rhs, out);
      apply_at(w, pos, r.rhs, r.lhs, out);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word mf_reduce(const DirectedGraph& g, const Word& w, VertexSet targets) {
  VertexSet allowed = sources_and_sinks(g);
  if (!targets.subset_of(allowed))
    raise(Errc::not_source_or_sink,
          "multiplicity-free reduction targets must be sources or sinks");

  // keep[v]: the single occurrence index to retain for target v.
  std::vector<int> keep(g.size(), -1);
  for (int v : targets.to_vector()) {
    bool is_source = g.in_degree(v) == 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != v) continue;
      if (keep[v] < 0 || !is_source) keep[v] = static_cast<int>(i);
      if (keep[v] >= 0 && is_source) break;
    }
  }
  Word out;
  for (size_t i = 0; i < w.size(); ++i) {
    int x = w[i];
    if (targets.contains(x) && keep[x] != static_cast<int>(i)) continue;
    out.push_back(x);
  }
  return out;
}

bool is_multiplicity_free_word(const Word& w) {
  VertexSet seen;
  for (int x : w) {
    if (seen.contains(x)) return false;
    seen.insert(x);
  }
  return true;
}

}  // namespace hk
