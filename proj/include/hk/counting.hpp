#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hk/enumeration.hpp"
#include "hk/graph.hpp"
#include "hk/matrix.hpp"

namespace hk {

/// C_n = binom(2n, n) / (n + 1), computed by the convolution recurrence
/// (exact big integers, no division).
BigInt catalan(int n);

/// F_{2n+1} with F_1 = F_2 = 1 (so n = 0 gives 1, n = 1 gives 2).
BigInt fibonacci_odd(int n);

/// One closed-form-versus-enumeration comparison.
struct CountReport {
  std::string graph;
  BigInt formula_value{0};
  BigInt enumerated_value{0};
  bool match = false;
  std::vector<std::string> breakdown;

  std::string machine_line() const;
};

/// Piece "length" convention used by every formula here: l_i is the VERTEX
/// count of the i-th maximal linearly ordered piece. A single piece on l
/// vertices then has C_{l+1} elements (order-preserving order-decreasing
/// transformations on l+1 points) and C_l maximal-content elements, and the
/// desk-scale enumeration cross-checks below pin the convention.
std::vector<int> piece_lengths(const DirectedGraph& g);

/// |m(Γ)| = ∏ C_{l_i} versus the number of enumerated elements whose
/// content is all of V(Γ).
CountReport maximal_content_count(const DirectedGraph& g, const ElementTable& t);

/// The Q-subset sum for |HK_Γ| over the gluing decomposition, versus the
/// enumerated cardinality. The breakdown lists every Q with its product.
CountReport cardinality_formula(const DirectedGraph& g, const ElementTable& t);

/// Alternating-orientation path on n vertices: cardinality versus F_{2n+1}.
CountReport alternating_cardinality_check(int n, size_t cap = 200000);

/// Number of multiplicity-free elements versus F_{2n+1} (orientation
/// independent).
CountReport multiplicity_free_count(const DirectedGraph& g,
                                    const RewriteSystem& rs,
                                    const ElementTable& t);

/// Idempotent count versus the number of acyclic full vertex subsets.
CountReport idempotent_count(const DirectedGraph& g, const ElementTable& t);

int64_t acyclic_full_subset_count(const DirectedGraph& g);

/// Idempotent bijection for graphs whose own monoid is infinite: every
/// acyclic full subgraph must contribute exactly one maximal-content
/// idempotent (the zero of its submonoid), so the verified count equals the
/// acyclic subset count.
CountReport idempotent_count_via_subgraphs(const DirectedGraph& g,
                                           size_t cap = 200000);

/// Reversing one glued piece cannot shrink the monoid: enumerates both
/// |HK_Γ| and |HK of Γ with piece2 reversed| and asserts the inequality,
/// with equality exactly when the glue vertex is isolated in a piece.
/// formula_value carries the reversed cardinality, enumerated_value the
/// original; match reflects the full theorem statement.
CountReport reversal_inequality_check(const DirectedGraph& g, VertexSet piece2,
                                      VertexId glue, size_t cap = 200000);

}  // namespace hk
