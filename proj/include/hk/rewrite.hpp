#pragma once

#include <vector>

#include "hk/presentation.hpp"
#include "hk/word.hpp"

namespace hk {

struct Rule {
  Word lhs, rhs;  // lhs > rhs in shortlex
};

struct CompletionLimits {
  int max_rules = 20000;
  int max_rule_len = 24;
};

/// A string rewriting system over a fixed shortlex order. When complete()
/// is true every critical pair resolves, so normal_form() computes the
/// unique irreducible representative of each monoid element.
class RewriteSystem {
 public:
  RewriteSystem() = default;  // empty alphabet, trivially complete

  const std::vector<Rule>& rules() const { return rules_; }
  bool complete() const { return complete_; }
  int alphabet_size() const { return static_cast<int>(rank_.size()); }
  const std::vector<int>& priority() const { return priority_; }
  const std::vector<int>& rank() const { return rank_; }

  bool less(const Word& a, const Word& b) const {
    return shortlex_less(a, b, rank_);
  }

  /// Rewrites to an irreducible word with the current rules. Deterministic:
  /// always the leftmost redex, rules tried in stored order.
  Word reduce(Word w) const;

  /// The canonical representative of [w]; requires a complete system.
  Word normal_form(const Word& w) const;

 private:
  friend RewriteSystem complete_presentation(const std::vector<Relation>&,
                                             const std::vector<int>&,
                                             const CompletionLimits&);
  std::vector<Rule> rules_;
  std::vector<int> priority_;  // priority[i] = i-th smallest vertex
  std::vector<int> rank_;      // rank[v] = position of v in priority
  size_t max_lhs_ = 1;
  bool complete_ = false;
};

/// Knuth-Bendix completion of the given relations under shortlex with the
/// given vertex priority. Returns a system with complete() = false when a
/// limit is hit; the partial system still rewrites soundly (callers fall
/// back to the congruence-closure oracle).
RewriteSystem complete_presentation(const std::vector<Relation>& rels,
                                    const std::vector<int>& priority,
                                    const CompletionLimits& limits = {});

/// Canonical order of the graph when it is of type A_n, index order
/// otherwise. Completion effectiveness can depend on this, so the CLI lets
/// callers override it.
std::vector<int> default_priority(const DirectedGraph& g);

/// Convenience: relations_of + default_priority + completion.
RewriteSystem rewrite_system_for(const DirectedGraph& g,
                                 const CompletionLimits& limits = {});

}  // namespace hk
