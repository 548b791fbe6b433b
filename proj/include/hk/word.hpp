#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hk/graph.hpp"

namespace hk {

/// A word over the vertex alphabet of some graph; the empty vector is the
/// empty word. Value type with structural equality; element equality is the
/// rewrite module's business.
using Word = std::vector<int>;

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

VertexSet content(const Word& w);

Word concat(const Word& a, const Word& b);

/// Shortlex: length first, then lexicographic by rank (rank[v] = priority
/// position of vertex v, lower = smaller).
bool shortlex_less(const Word& a, const Word& b, const std::vector<int>& rank);

/// Deletes every letter outside `keep`; a monoid homomorphism onto the
/// submonoid of the full subgraph.
Word canonical_projection(const Word& w, VertexSet keep);

/// Word text format: whitespace-separated vertex labels or bare indices,
/// or a compact run of single-character labels/digits; the empty word is
/// spelled `-`.
Word parse_word(const DirectedGraph& g, const std::string& text);
std::string format_word(const DirectedGraph& g, const Word& w);

}  // namespace hk
