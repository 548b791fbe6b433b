#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hk/enumeration.hpp"
#include "hk/graph.hpp"
#include "hk/matrix.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

/// Edge weights into the integers. Values are nonzero by definition; the
/// allow_zero escape hatch exists solely for the unoriented-edge
/// non-effectiveness test.
class WeightFunction {
 public:
  WeightFunction() = default;
  static WeightFunction constant(const DirectedGraph& g, long value);
  /// f(a -> v_i) = 1 and f(v_i -> b) = 2^i, indices in Z_n's own numbering.
  static WeightFunction zn_weights(const ZGraph& z);

  void set(int u, int v, BigInt w) { w_[{u, v}] = std::move(w); }
  const BigInt& weight(int u, int v) const;
  bool allow_zero() const { return allow_zero_; }
  void set_allow_zero(bool b) { allow_zero_ = b; }

  /// Defined on exactly E(g), all values nonzero unless allow_zero.
  void validate(const DirectedGraph& g) const;

  /// Restriction to an induced subgraph produced by DirectedGraph::induced.
  WeightFunction restricted(const DirectedGraph& sub,
                            const std::vector<int>& old_ids) const;

  const std::map<std::pair<int, int>, BigInt>& entries() const { return w_; }

 private:
  std::map<std::pair<int, int>, BigInt> w_;
  bool allow_zero_ = false;
};

/// The atomic endomorphism of vertex x: fixes every other basis vector and
/// sends x to the weighted sum of its in-neighbors (zero for a source).
IntMatrix atomic_endomorphism(const DirectedGraph& g, const WeightFunction& f,
                              VertexId x);

/// Image of a word: atomics composed in word order, so
/// represent(uv) = represent(u) * represent(v) and represent(ε) = identity.
IntMatrix represent(const DirectedGraph& g, const WeightFunction& f,
                    const Word& w);

/// Direct matrix check that every defining relation is respected.
bool check_well_defined(const DirectedGraph& g, const WeightFunction& f);

struct EffectivenessResult {
  bool effective = false;
  /// First colliding pair in shortlex element order, when not effective.
  std::optional<std::pair<ElementId, ElementId>> collision;
};

/// Maps every enumerated element through represent and counts distinct
/// matrices. Rejects graphs with unoriented edges unless f.allow_zero()
/// (the sanctioned negative-test mode).
EffectivenessResult check_effective(const DirectedGraph& g,
                                    const WeightFunction& f,
                                    const ElementTable& t);

/// The action at `a` only sees the source graph: column a of R_f(w) must
/// equal column a of R_f applied to w's projection onto source_graph(g, a).
bool check_source_graph_lemma(const DirectedGraph& g, const WeightFunction& f,
                              const std::vector<Word>& sample_words, VertexId a);

/// For a path complete subgraph, the minor of R_f(w) on the subgraph equals
/// the subgraph's own representation of the projected word. With strict set,
/// raises not_path_complete instead of testing a doomed subgraph.
bool check_path_complete_minor(const DirectedGraph& g, const WeightFunction& f,
                               VertexSet sub,
                               const std::vector<Word>& sample_words,
                               bool strict = true);

struct CyclePowerResult {
  bool ok = false;
  std::vector<unsigned long> exponents;  // 2-adic valuations along v1's orbit
};

/// On a word whose content is exactly an oriented cycle, the powers
/// R_f(w^k) stay pairwise distinct: the scalar on the orbit of the cycle's
/// first vertex gains 2-adic valuation with every power.
CyclePowerResult check_cycle_powers(const DirectedGraph& g,
                                    const WeightFunction& f, const Word& w,
                                    int kmax);

/// Element taxonomy of the Z_n monoid: every element owns exactly one
/// canonical word shape (middles only; w1 a w2; w1 b w2; w1 a w2 b w3;
/// w1 b w2 a w3 with w2 nonempty — all blocks increasing and adjacent
/// blocks disjoint).
struct ZnCheckResult {
  bool effective = false;
  bool taxonomy_exact = false;
  size_t element_count = 0;
  std::array<size_t, 5> type_counts{};
};

ZnCheckResult zn_representation_check(int n, const WeightFunction* override_f = nullptr,
                                      size_t cap = 200000);

struct GluingEffectiveness {
  bool glued = false;
  bool piece1 = false;
  bool piece2 = false;
  bool iff_holds() const { return glued == (piece1 && piece2); }
};

/// Both directions of the gluing theorem, by explicit effectiveness runs on
/// the glued graph and on both pieces (weights restricted piecewise).
GluingEffectiveness gluing_effectiveness(const DirectedGraph& g,
                                         const WeightFunction& f,
                                         VertexSet piece1, VertexSet piece2,
                                         VertexId glue, size_t cap = 200000);

}  // namespace hk
