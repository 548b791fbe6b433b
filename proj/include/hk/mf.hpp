#pragma once

#include <vector>

#include "hk/enumeration.hpp"
#include "hk/graph.hpp"
#include "hk/rewrite.hpp"

namespace hk {

/// A multiplicity-free word in [w] (each vertex at most once), found by
/// searching the injective words over content(w); raises
/// not_multiplicity_free when the class contains none.
Word mf_witness(const RewriteSystem& rs, const Word& w);

/// Whether [w] contains a multiplicity-free word. Only offered for type-A_n
/// graphs (where the recursion below certifies the answer independently).
bool is_multiplicity_free_element(const DirectedGraph& g,
                                  const RewriteSystem& rs, const Word& w);

/// The canonical multiplicity-free representative: scan the canonical order
/// v_1..v_n and append v_{i+1} on the right when v_i sits to its left in the
/// witness (or is absent), on the left otherwise. The result is the unique
/// word used by the bijection onto the alternating-orientation monoid; it
/// depends only on [w], not on the witness.
Word mf_normal_form(const DirectedGraph& g, const RewriteSystem& rs,
                    const Word& w);

/// Ids of all multiplicity-free elements of the enumerated monoid.
std::vector<ElementId> multiplicity_free_elements(const RewriteSystem& rs,
                                                  const ElementTable& t);

/// Ids of elements owning a word with at most one occurrence of `a`
/// (every such element factors as x a y or x y with x, y avoiding `a`).
std::vector<ElementId> elements_mf_wrt(const DirectedGraph& g,
                                       const RewriteSystem& rs,
                                       const ElementTable& t, VertexId a);

}  // namespace hk
