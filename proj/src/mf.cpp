#include "hk/mf.hpp"

#include <algorithm>

namespace hk {

namespace {

// Visits all injective words over `letters` (all lengths, all orders).
template <typename F>
void for_each_injective(std::vector<int>& letters, Word& prefix, F&& visit) {
  visit(prefix);
  for (size_t i = 0; i < letters.size(); ++i) {
    int x = letters[i];
    letters.erase(letters.begin() + i);
    prefix.push_back(x);
    for_each_injective(letters, prefix, visit);
    prefix.pop_back();
    letters.insert(letters.begin() + i, x);
  }
}

}  // namespace

Word mf_witness(const RewriteSystem& rs, const Word& w) {
  Word target = rs.normal_form(w);
  if (is_multiplicity_free_word(target)) return target;
  // A witness must use exactly content(w): content is a class invariant.
  std::vector<int> letters = content(w).to_vector();
  do {
    Word candidate(letters.begin(), letters.end());
    if (rs.normal_form(candidate) == target) return candidate;
  } while (std::next_permutation(letters.begin(), letters.end()));
  raise(Errc::not_multiplicity_free,
        "element contains no multiplicity-free word");
}

bool is_multiplicity_free_element(const DirectedGraph& g,
                                  const RewriteSystem& rs, const Word& w) {
  if (!is_type_an(g))
    raise(Errc::not_type_a, "multiplicity-free test is for type A_n graphs");
  try {
    mf_witness(rs, w);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_multiplicity_free) return false;
    throw;
  }
}

Word mf_normal_form(const DirectedGraph& g, const RewriteSystem& rs,
                    const Word& w) {
  const std::vector<int>& order = g.canonical_order();
  if (order.empty())
    raise(Errc::not_type_a, "canonical representative needs a type A_n graph");
  Word witness = mf_witness(rs, w);

  std::vector<int> pos(g.size(), -1);
  for (size_t i = 0; i < witness.size(); ++i) pos[witness[i]] = static_cast<int>(i);

  Word out;
  if (pos[order[0]] >= 0) out.push_back(order[0]);
  for (size_t i = 1; i < order.size(); ++i) {
    int prev = order[i - 1], next = order[i];
    if (pos[next] < 0) continue;
    if (pos[prev] < 0 || pos[prev] < pos[next])
      out.push_back(next);
    else
      out.insert(out.begin(), next);
  }
  return out;
}

std::vector<ElementId> multiplicity_free_elements(const RewriteSystem& rs,
                                                  const ElementTable& t) {
  std::vector<ElementId> out;
  std::vector<bool> seen(t.size(), false);
  std::vector<int> letters(t.num_generators);
  for (int v = 0; v < t.num_generators; ++v) letters[v] = v;
  Word prefix;
  for_each_injective(letters, prefix, [&](const Word& u) {
    auto it = t.index.find(rs.normal_form(u));
    if (it != t.index.end() && !seen[it->second]) {
      seen[it->second] = true;
      out.push_back(it->second);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> elements_mf_wrt(const DirectedGraph& g,
                                       const RewriteSystem& rs,
                                       const ElementTable& t, VertexId a) {
  VertexSet rest = VertexSet::all(g.size());
  rest.erase(a);
  std::vector<int> old_ids;
  DirectedGraph sub = g.induced(rest, &old_ids);
  RewriteSystem sub_rs = rewrite_system_for(sub);
  ElementTable sub_t = enumerate_elements(sub_rs, sub, t.size() + 1);

  // Lift the subgraph's normal forms back to words over g's vertices.
  std::vector<Word> parts;
  for (const Word& u : sub_t.normal_forms) {
    Word lifted;
    for (int x : u) lifted.push_back(old_ids[x]);
    parts.push_back(std::move(lifted));
  }

  std::vector<bool> seen(t.size(), false);
  std::vector<ElementId> out;
  for (const Word& x : parts) {
    for (const Word& y : parts) {
      for (int with_a = 0; with_a < 2; ++with_a) {
        Word u = x;
        if (with_a) u.push_back(a);
        u.insert(u.end(), y.begin(), y.end());
        ElementId e = t.element_of(rs, u);
        if (!seen[e]) {
          seen[e] = true;
          out.push_back(e);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hk
