#include "hk/representation.hpp"

#include <algorithm>
#include <unordered_map>

namespace hk {

WeightFunction WeightFunction::constant(const DirectedGraph& g, long value) {
  WeightFunction f;
  for (auto [u, v] : g.edges()) f.set(u, v, BigInt(value));
  return f;
}

WeightFunction WeightFunction::zn_weights(const ZGraph& z) {
  WeightFunction f;
  for (int v : z.middles) {
    f.set(z.source, v, 1);
    BigInt w = 1;
    w <<= z.middle_subscript(v);  // 2^i for middle v_i
    f.set(v, z.sink, w);
  }
  return f;
}

const BigInt& WeightFunction::weight(int u, int v) const {
  auto it = w_.find({u, v});
  if (it == w_.end())
    raise(Errc::input, "no weight assigned to requested edge");
  return it->second;
}

void WeightFunction::validate(const DirectedGraph& g) const {
  for (auto [u, v] : g.edges()) {
    auto it = w_.find({u, v});
    if (it == w_.end()) raise(Errc::input, "weight function misses an edge");
    if (!allow_zero_ && it->second == 0)
      raise(Errc::input, "weight values must be nonzero");
  }
  if (w_.size() != g.edges().size())
    raise(Errc::input, "weight function defined outside E(graph)");
}

WeightFunction WeightFunction::restricted(const DirectedGraph& sub,
                                          const std::vector<int>& old_ids) const {
  WeightFunction f;
  f.allow_zero_ = allow_zero_;
  for (auto [u, v] : sub.edges()) f.set(u, v, weight(old_ids[u], old_ids[v]));
  return f;
}

IntMatrix atomic_endomorphism(const DirectedGraph& g, const WeightFunction& f,
                              VertexId x) {
  IntMatrix m = IntMatrix::identity(g.size());
  m.at(x, x) = 0;  // sources get an explicit zero column
  for (int z : g.in_neighbors(x).to_vector()) m.at(z, x) = f.weight(z, x);
  return m;
}

namespace {

// Precomputed atomics for repeated images under one weight function.
struct Rep {
  std::vector<IntMatrix> atomics;
  int n;

  Rep(const DirectedGraph& g, const WeightFunction& f) : n(g.size()) {
    f.validate(g);
    for (int x = 0; x < n; ++x) atomics.push_back(atomic_endomorphism(g, f, x));
  }

  IntMatrix of(const Word& w) const {
    IntMatrix m = IntMatrix::identity(n);
    for (int x : w) m = m * atomics[x];
    return m;
  }
};

}  // namespace

IntMatrix represent(const DirectedGraph& g, const WeightFunction& f,
                    const Word& w) {
  return Rep(g, f).of(w);
}

bool check_well_defined(const DirectedGraph& g, const WeightFunction& f) {
  Rep rep(g, f);
  for (const Relation& r : relations_of(g))
    if (!(rep.of(r.lhs) == rep.of(r.rhs))) return false;
  return true;
}

EffectivenessResult check_effective(const DirectedGraph& g,
                                    const WeightFunction& f,
                                    const ElementTable& t) {
  if (!g.no_unoriented_edges() && !f.allow_zero())
    raise(Errc::input,
          "graph has unoriented edges; effectiveness checks accept such "
          "graphs only in the zero-weight testing mode");
  Rep rep(g, f);
  std::unordered_map<std::string, ElementId> seen;
  for (ElementId e = 0; e < static_cast<ElementId>(t.size()); ++e) {
    std::string key = rep.of(t.normal_forms[e]).key();
    auto [it, inserted] = seen.try_emplace(std::move(key), e);
    if (!inserted) return {false, std::make_pair(it->second, e)};
  }
  return {true, std::nullopt};
}

bool check_source_graph_lemma(const DirectedGraph& g, const WeightFunction& f,
                              const std::vector<Word>& sample_words,
                              VertexId a) {
  Rep rep(g, f);
  VertexSet s = source_graph(g, a);
  for (const Word& w : sample_words) {
    Word projected = canonical_projection(w, s);
    if (rep.of(w).column(a) != rep.of(projected).column(a)) return false;
  }
  return true;
}

bool check_path_complete_minor(const DirectedGraph& g, const WeightFunction& f,
                               VertexSet sub,
                               const std::vector<Word>& sample_words,
                               bool strict) {
  if (strict && !is_path_complete(g, sub))
    raise(Errc::not_path_complete, "subgraph is not path complete");
  std::vector<int> old_ids;
  DirectedGraph gsub = g.induced(sub, &old_ids);
  WeightFunction fsub = f.restricted(gsub, old_ids);
  std::vector<int> new_id(g.size(), -1);
  for (size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);

  Rep rep(g, f);
  Rep rep_sub(gsub, fsub);
  for (const Word& w : sample_words) {
    Word projected;
    for (int x : w)
      if (new_id[x] >= 0) projected.push_back(new_id[x]);
    if (!(rep.of(w).minor(sub) == rep_sub.of(projected))) return false;
  }
  return true;
}

CyclePowerResult check_cycle_powers(const DirectedGraph& g,
                                    const WeightFunction& f, const Word& w,
                                    int kmax) {
  VertexSet c = content(w);
  // The content must induce a single oriented cycle.
  std::vector<int> vs = c.to_vector();
  if (vs.empty()) raise(Errc::not_full_content, "empty content");
  for (int v : vs) {
    if ((g.out_neighbors(v) & c).count() != 1 ||
        (g.in_neighbors(v) & c).count() != 1)
      raise(Errc::not_full_content,
            "content does not induce an oriented cycle");
  }
  int steps = 0;
  for (int cur = vs[0]; steps == 0 || cur != vs[0];) {
    cur = (g.out_neighbors(cur) & c).to_vector()[0];
    if (++steps > static_cast<int>(vs.size())) break;
  }
  if (steps != static_cast<int>(vs.size()))
    raise(Errc::not_full_content, "content induces more than one cycle");

  Rep rep(g, f);
  IntMatrix m = rep.of(w);
  IntMatrix power = m;
  int v1 = vs[0];
  CyclePowerResult res;
  res.ok = true;
  std::unordered_map<std::string, int> seen;
  for (int k = 1; k <= kmax; ++k) {
    if (!seen.try_emplace(power.key(), k).second) res.ok = false;
    // Column of v1 must be a single nonzero entry with growing 2-adic value.
    int nonzero = -1;
    for (int r = 0; r < g.size(); ++r) {
      if (power.at(r, v1) != 0) {
        if (nonzero >= 0) {
          res.ok = false;
          break;
        }
        nonzero = r;
      }
    }
    if (nonzero < 0) {
      res.ok = false;
      break;
    }
    BigInt value = abs(power.at(nonzero, v1));
    unsigned long val2 = mpz_scan1(value.get_mpz_t(), 0);
    if (!res.exponents.empty() && val2 <= res.exponents.back()) res.ok = false;
    res.exponents.push_back(val2);
    power = power * m;
  }
  return res;
}

namespace {

void push_increasing(Word& w, uint64_t subset, const std::vector<int>& middles) {
  for (size_t i = 0; i < middles.size(); ++i)
    if ((subset >> i) & 1) w.push_back(middles[i]);
}

}  // namespace

ZnCheckResult zn_representation_check(int n, const WeightFunction* override_f,
                                      size_t cap) {
  ZGraph z = build_zn(n);
  WeightFunction f = override_f ? *override_f : WeightFunction::zn_weights(z);
  RewriteSystem rs = rewrite_system_for(z.graph);
  ElementTable t = enumerate_elements(rs, z.graph, cap);

  ZnCheckResult res;
  res.element_count = t.size();
  res.effective = check_effective(z.graph, f, t).effective;

  // Canonical word shapes; every element must be hit by exactly one.
  size_t m = z.middles.size();
  uint64_t subsets = uint64_t{1} << m;
  std::vector<int> hits(t.size(), 0);
  auto claim = [&](const Word& w, int type) {
    ElementId e = t.element_of(rs, w);
    ++hits[e];
    ++res.type_counts[type];
  };

  for (uint64_t s = 0; s < subsets; ++s) {
    Word w;
    push_increasing(w, s, z.middles);
    claim(w, 0);
  }
  for (uint64_t s1 = 0; s1 < subsets; ++s1) {
    for (uint64_t s2 = 0; s2 < subsets; ++s2) {
      if (s1 & s2) continue;
      for (int anchor = 0; anchor < 2; ++anchor) {
        Word w;
        push_increasing(w, s1, z.middles);
        w.push_back(anchor == 0 ? z.source : z.sink);
        push_increasing(w, s2, z.middles);
        claim(w, anchor == 0 ? 1 : 2);
      }
    }
  }
  for (uint64_t s1 = 0; s1 < subsets; ++s1) {
    for (uint64_t s2 = 0; s2 < subsets; ++s2) {
      if (s1 & s2) continue;
      for (uint64_t s3 = 0; s3 < subsets; ++s3) {
        if (s2 & s3) continue;
        Word w;
        push_increasing(w, s1, z.middles);
        w.push_back(z.source);
        push_increasing(w, s2, z.middles);
        w.push_back(z.sink);
        push_increasing(w, s3, z.middles);
        claim(w, 3);
        if (s2 != 0) {
          Word u;
          push_increasing(u, s1, z.middles);
          u.push_back(z.sink);
          push_increasing(u, s2, z.middles);
          u.push_back(z.source);
          push_increasing(u, s3, z.middles);
          claim(u, 4);
        }
      }
    }
  }

  res.taxonomy_exact =
      std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  return res;
}

GluingEffectiveness gluing_effectiveness(const DirectedGraph& g,
                                         const WeightFunction& f,
                                         VertexSet piece1, VertexSet piece2,
                                         VertexId glue, size_t cap) {
  VertexSet all = VertexSet::all(g.size());
  if (!((piece1 | piece2) == all) ||
      !((piece1 & piece2) == VertexSet::of({glue})) ||
      !sources_and_sinks(g).contains(glue))
    raise(Errc::bad_gluing,
          "pieces must cover the graph and meet in one source-or-sink vertex");
  for (auto [u, v] : g.edges()) {
    bool in1 = piece1.contains(u) && piece1.contains(v);
    bool in2 = piece2.contains(u) && piece2.contains(v);
    if (!in1 && !in2)
      raise(Errc::bad_gluing, "edge crosses the gluing decomposition");
  }

  GluingEffectiveness out;
  out.glued = check_effective(g, f, enumerate_elements(rewrite_system_for(g), g, cap))
                  .effective;
  for (int side = 0; side < 2; ++side) {
    std::vector<int> old_ids;
    DirectedGraph sub = g.induced(side == 0 ? piece1 : piece2, &old_ids);
    WeightFunction fsub = f.restricted(sub, old_ids);
    RewriteSystem rs = rewrite_system_for(sub);
    bool eff = check_effective(sub, fsub, enumerate_elements(rs, sub, cap)).effective;
    (side == 0 ? out.piece1 : out.piece2) = eff;
  }
  return out;
}

}  // namespace hk
