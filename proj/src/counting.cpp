#include "hk/counting.hpp"

#include <algorithm>

#include "hk/fixtures.hpp"
#include "hk/mf.hpp"

namespace hk {

BigInt catalan(int n) {
  if (n < 0) raise(Errc::input, "catalan index must be nonnegative");
  static std::vector<BigInt> cache{1};
  for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
    BigInt next = 0;
    for (int i = 0; i < k; ++i) next += cache[i] * cache[k - 1 - i];
    cache.push_back(next);
  }
  return cache[n];
}

BigInt fibonacci_odd(int n) {
  if (n < 0) raise(Errc::input, "fibonacci index must be nonnegative");
  BigInt a = 1, b = 1;  // F_1, F_2
  for (int i = 0; i < 2 * n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;  // F_{2n+1}
}

std::string CountReport::machine_line() const {
  return "graph=" + graph + " formula=" + formula_value.get_str() +
         " enumerated=" + enumerated_value.get_str() +
         " match=" + (match ? "true" : "false");
}

std::vector<int> piece_lengths(const DirectedGraph& g) {
  return gluing_decomposition(g).piece_sizes;
}

CountReport maximal_content_count(const DirectedGraph& g,
                                  const ElementTable& t) {
  CountReport r;
  r.graph = g.description();
  r.formula_value = 1;
  for (int l : piece_lengths(g)) r.formula_value *= catalan(l);
  VertexSet full = VertexSet::all(g.size());
  int64_t count = 0;
  for (size_t e = 0; e < t.size(); ++e)
    if (t.content_of(static_cast<ElementId>(e)) == full) ++count;
  r.enumerated_value = static_cast<long>(count);
  r.match = r.formula_value == r.enumerated_value;
  return r;
}

namespace {

// Block count of one middle piece given whether its boundary glue vertices
// are required in (1) or out (0) of the content.
BigInt middle_block(int l, bool left_in, bool right_in) {
  if (!left_in && !right_in) return catalan(l - 1);
  if (left_in && right_in)
    return catalan(l + 1) - 2 * catalan(l) + catalan(l - 1);
  return catalan(l) - catalan(l - 1);
}

BigInt end_block(int l, bool glue_in) {
  return glue_in ? catalan(l + 1) - catalan(l) : catalan(l);
}

}  // namespace

CountReport cardinality_formula(const DirectedGraph& g, const ElementTable& t) {
  CountReport r;
  r.graph = g.description();
  std::vector<int> lengths = piece_lengths(g);
  int k = static_cast<int>(lengths.size());

  if (k == 1) {
    r.formula_value = catalan(lengths[0] + 1);
    r.breakdown.push_back("single piece: C_" + std::to_string(lengths[0] + 1));
  } else {
    // Sum over content patterns at the k-1 glue vertices.
    BigInt total = 0;
    for (uint64_t q = 0; q < (uint64_t{1} << (k - 1)); ++q) {
      auto glue_in = [&](int i) {  // glue between piece i-1 and piece i
        return (q >> (i - 1)) & 1;
      };
      BigInt prod = end_block(lengths[0], glue_in(1));
      for (int i = 1; i + 1 < k; ++i)
        prod *= middle_block(lengths[i], glue_in(i), glue_in(i + 1));
      prod *= end_block(lengths[k - 1], glue_in(k - 1));
      total += prod;

      std::string line = "Q={";
      bool first = true;
      for (int i = 1; i < k; ++i)
        if (glue_in(i)) {
          if (!first) line += ",";
          line += std::to_string(i + 1);  // pieces are 1-based, Q indexes 2..k
          first = false;
        }
      line += "} product=" + prod.get_str();
      // The symmetric last-piece block is the adjudicated reading; note the
      // printed alternative when the two differ.
      if (glue_in(k - 1) && lengths[0] != lengths[k - 1]) {
        BigInt alt = catalan(lengths[k - 1] + 1) - catalan(lengths[0]);
        line += " (literal-c_k-reading last factor " + alt.get_str() + ")";
      }
      r.breakdown.push_back(line);
    }
    r.formula_value = total;
  }

  r.enumerated_value = static_cast<long>(t.size());
  r.match = r.formula_value == r.enumerated_value;
  return r;
}

CountReport alternating_cardinality_check(int n, size_t cap) {
  DirectedGraph g = alternating_graph(n);
  RewriteSystem rs = rewrite_system_for(g);
  ElementTable t = enumerate_elements(rs, g, cap);
  CountReport r;
  r.graph = "alternating n=" + std::to_string(n);
  r.formula_value = fibonacci_odd(n);
  r.enumerated_value = static_cast<long>(t.size());
  r.match = r.formula_value == r.enumerated_value;
  return r;
}

CountReport multiplicity_free_count(const DirectedGraph& g,
                                    const RewriteSystem& rs,
                                    const ElementTable& t) {
  if (!is_type_an(g))
    raise(Errc::not_type_a, "multiplicity-free count is for type A_n graphs");
  CountReport r;
  r.graph = g.description();
  r.formula_value = fibonacci_odd(g.size());
  r.enumerated_value =
      static_cast<long>(multiplicity_free_elements(rs, t).size());
  r.match = r.formula_value == r.enumerated_value;
  return r;
}

int64_t acyclic_full_subset_count(const DirectedGraph& g) {
  int64_t count = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << g.size()); ++mask)
    if (!has_oriented_cycle(g, VertexSet(mask))) ++count;
  return count;
}

CountReport idempotent_count(const DirectedGraph& g, const ElementTable& t) {
  CountReport r;
  r.graph = g.description();
  r.formula_value = static_cast<long>(acyclic_full_subset_count(g));
  r.enumerated_value = static_cast<long>(idempotents(t, g).size());
  r.match = r.formula_value == r.enumerated_value;
  return r;
}

CountReport idempotent_count_via_subgraphs(const DirectedGraph& g, size_t cap) {
  CountReport r;
  r.graph = g.description();
  r.formula_value = static_cast<long>(acyclic_full_subset_count(g));
  long verified = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << g.size()); ++mask) {
    VertexSet sub(mask);
    if (has_oriented_cycle(g, sub)) continue;
    DirectedGraph gs = g.induced(sub);
    RewriteSystem rs = rewrite_system_for(gs);
    ElementTable t = enumerate_elements(rs, gs, cap);
    VertexSet full = VertexSet::all(gs.size());
    int zeros = 0;
    for (ElementId e = 0; e < static_cast<ElementId>(t.size()); ++e)
      if (t.product(e, e) == e && t.content_of(e) == full) ++zeros;
    if (zeros == 1) ++verified;
  }
  r.enumerated_value = verified;
  r.match = r.formula_value == r.enumerated_value;
  return r;
}

CountReport reversal_inequality_check(const DirectedGraph& g, VertexSet piece2,
                                      VertexId glue, size_t cap) {
  VertexSet all = VertexSet::all(g.size());
  VertexSet piece1 = VertexSet(all.bits() & ~piece2.bits());
  piece1.insert(glue);
  if (!piece2.contains(glue) || !sources_and_sinks(g).contains(glue))
    raise(Errc::bad_gluing, "glue vertex must lie in piece2 and be a source or sink");
  for (auto [u, v] : g.edges()) {
    bool in1 = piece1.contains(u) && piece1.contains(v);
    bool in2 = piece2.contains(u) && piece2.contains(v);
    if (!in1 && !in2)
      raise(Errc::bad_gluing, "edge crosses the gluing decomposition");
  }

  DirectedGraph reversed = reverse_edges(g, piece2);
  ElementTable t1 = enumerate_elements(rewrite_system_for(g), g, cap);
  ElementTable t2 =
      enumerate_elements(rewrite_system_for(reversed), reversed, cap);

  bool isolated_in_piece =
      (g.out_neighbors(glue) | g.in_neighbors(glue)).bits() == 0 ||
      ((g.out_neighbors(glue) | g.in_neighbors(glue)).bits() &
       piece1.bits() & ~(uint64_t{1} << glue)) == 0 ||
      ((g.out_neighbors(glue) | g.in_neighbors(glue)).bits() &
       piece2.bits() & ~(uint64_t{1} << glue)) == 0;

  CountReport r;
  r.graph = g.description() + ";reverse=" + [&] {
    std::string s;
    for (int v : piece2.to_vector()) {
      if (!s.empty()) s += ",";
      s += g.label(v);
    }
    return s;
  }();
  r.enumerated_value = static_cast<long>(t1.size());
  r.formula_value = static_cast<long>(t2.size());
  bool le = t1.size() <= t2.size();
  bool equal = t1.size() == t2.size();
  r.match = le && (equal == isolated_in_piece);
  r.breakdown.push_back(std::string("glue isolated in a piece: ") +
                        (isolated_in_piece ? "yes" : "no"));
  return r;
}

}  // namespace hk
