#pragma once

#include <vector>

#include "hk/graph.hpp"
#include "hk/word.hpp"

namespace hk {

/// Defining relations of a Hecke-Kiselman monoid:
///   idempotent  x x = x            for every vertex x
///   commute     y x = x y          for non-adjacent pairs (stored y>x side first)
///   arrow       x y x = x y  and  y x y = x y   for each directed edge x->y
///   braid       y x y = x y x      for unoriented pairs
enum class RelationKind { idempotent, commute, arrow, braid };

struct Relation {
  Word lhs, rhs;
  RelationKind kind;
};

std::vector<Relation> relations_of(const DirectedGraph& g);

/// All words reachable from `w` by one application of one relation, in
/// either direction, at any position. Sorted, deduped.
std::vector<Word> single_step_neighbors(const Word& w,
                                        const std::vector<Relation>& rels);

/// Removes superfluous occurrences of each target vertex: a source keeps its
/// leftmost occurrence, a sink its rightmost, an isolated vertex (both) its
/// leftmost. Every target must be a source or sink of g; the result is a
/// subword representing the same monoid element.
Word mf_reduce(const DirectedGraph& g, const Word& w, VertexSet targets);

bool is_multiplicity_free_word(const Word& w);

}  // namespace hk
