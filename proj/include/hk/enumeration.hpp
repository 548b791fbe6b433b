#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hk/graph.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

using ElementId = int;

/// Concrete realization of a finite monoid: normal forms in shortlex order
/// plus the right Cayley action by generators. Immutable once built.
struct ElementTable {
  std::vector<Word> normal_forms;  // shortlex ascending; index = ElementId
  std::unordered_map<Word, ElementId, WordHash> index;
  int num_generators = 0;
  std::vector<ElementId> cayley;  // [e * num_generators + g] = e * [g]

  size_t size() const { return normal_forms.size(); }
  ElementId right_multiply(ElementId e, int g) const {
    return cayley[static_cast<size_t>(e) * num_generators + g];
  }
  /// Product through the Cayley table (folds the right factor letterwise).
  ElementId product(ElementId x, ElementId y) const {
    for (int g : normal_forms[y]) x = right_multiply(x, g);
    return x;
  }
  ElementId element_of(const RewriteSystem& rs, const Word& w) const;
  VertexSet content_of(ElementId e) const { return content(normal_forms[e]); }
};

/// Breadth-first closure of {ε} under right multiplication by generators,
/// with every product reduced to its normal form. Enumerates all of the
/// monoid when it has at most `cap` elements; raises cap_exceeded otherwise
/// (the likely-infinite case).
ElementTable enumerate_elements(const RewriteSystem& rs, const DirectedGraph& g,
                                size_t cap);

/// All e with e*e = e. Also checks the content bijection onto acyclic full
/// vertex subsets and raises if it ever fails (it is a theorem).
std::vector<ElementId> idempotents(const ElementTable& t, const DirectedGraph& g);

/// Acyclic-content words only: true iff [w]^k is constant from
/// k = |content(w)| on and equals the unique idempotent with that content
/// (the zero of the content subgraph's monoid).
bool zero_power_check(const ElementTable& t, const DirectedGraph& g,
                      const RewriteSystem& rs, const Word& w);

/// Stable text export: element count, one normal form per line in shortlex
/// order, then the Cayley rows.
std::string export_table(const DirectedGraph& g, const ElementTable& t);

/// Bounded congruence closure over all words of length <= max_len + slack:
/// an implementation-independent oracle for word equality. The certificate
/// demands (a) the class count over words of length <= max_len is unchanged
/// when the padding grows by one, and (b) every counted class is closed
/// under right multiplication by each generator into a counted class,
/// consistently across class members. Without the certificate the counts
/// are not trusted (certified = false means: increase the lengths).
struct OracleResult {
  bool certified = false;
  int64_t class_count = 0;
  int max_len = 0;
  int slack = 0;

  /// Class id (dense, stable) of a word of length <= max_len.
  int class_of(const Word& w) const;

  /// Raises unstable when the certificate failed (the fix: longer lengths).
  void require_certified() const;

  // internal layout: union-find roots over the padded universe
  int alphabet = 0;
  std::vector<int64_t> level_offset;
  std::vector<int32_t> root;
  std::unordered_map<int64_t, int> class_ids;
  int64_t encode(const Word& w) const;
  int64_t find(int64_t x) const;
};

OracleResult oracle_classes(const DirectedGraph& g, int max_len, int slack);

}  // namespace hk
