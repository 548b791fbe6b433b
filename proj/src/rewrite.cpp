#include "hk/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hk {

namespace {

// Leftmost-redex rewriting over an indexed rule list. Rules whose lhs share
// a first letter are bucketed so reduce() stays cheap inside completion.
struct Rewriter {
  const std::vector<Rule>& rules;
  const std::vector<bool>& active;
  std::vector<std::vector<int>> by_first;
  size_t max_lhs = 1;

  Rewriter(const std::vector<Rule>& r, const std::vector<bool>& a, int alphabet)
      : rules(r), active(a), by_first(alphabet) {}

  void index_rule(int i) {
    const Word& l = rules[i].lhs;
    by_first[l[0]].push_back(i);
    max_lhs = std::max(max_lhs, l.size());
  }

  bool match_at(const Word& w, size_t pos, const Word& lhs) const {
    if (pos + lhs.size() > w.size()) return false;
    for (size_t i = 0; i < lhs.size(); ++i)
      if (w[pos + i] != lhs[i]) return false;
    return true;
  }

  Word reduce(Word w) const {
    size_t pos = 0;
    while (pos < w.size()) {
      bool rewrote = false;
      for (int i : by_first[w[pos]]) {
        if (!active[i]) continue;
        const Rule& r = rules[i];
        if (match_at(w, pos, r.lhs)) {
          Word next(w.begin(), w.begin() + pos);
          next.insert(next.end(), r.rhs.begin(), r.rhs.end());
          next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
          w = std::move(next);
          // Any new redex must overlap the replaced region.
          pos = pos > max_lhs ? pos - max_lhs + 1 : 0;
          rewrote = true;
          break;
        }
      }
      if (!rewrote) ++pos;
    }
    return w;
  }
};

struct Completer {
  std::vector<int> rank;
  CompletionLimits limits;
  std::vector<Rule> rules;
  std::vector<bool> active;
  Rewriter rewriter;
  std::deque<std::pair<Word, Word>> equations;
  std::deque<int> fresh;
  bool failed = false;

  Completer(const std::vector<int>& rank_, const CompletionLimits& lim, int alphabet)
      : rank(rank_), limits(lim), rewriter(rules, active, alphabet) {}

  bool less(const Word& a, const Word& b) const {
    return shortlex_less(a, b, rank);
  }

  void add_rule_from(Word u, Word v) {
    u = rewriter.reduce(std::move(u));
    v = rewriter.reduce(std::move(v));
    if (u == v) return;
    if (less(u, v)) std::swap(u, v);
    if (static_cast<int>(u.size()) > limits.max_rule_len ||
        static_cast<int>(rules.size()) >= limits.max_rules) {
      failed = true;
      return;
    }
    int id = static_cast<int>(rules.size());
    rules.push_back({std::move(u), std::move(v)});
    active.push_back(true);
    rewriter.index_rule(id);
    fresh.push_back(id);

    // Inter-reduction: rules whose lhs the new rule rewrites get re-derived;
    // surviving rhs's are renormalized in place.
    const Word& nl = rules[id].lhs;
    for (int i = 0; i < id; ++i) {
      if (!active[i]) continue;
      bool hit = false;
      for (size_t p = 0; p + nl.size() <= rules[i].lhs.size() && !hit; ++p)
        hit = rewriter.match_at(rules[i].lhs, p, nl);
      if (hit) {
        active[i] = false;
        equations.emplace_back(rules[i].lhs, rules[i].rhs);
      } else {
        rules[i].rhs = rewriter.reduce(rules[i].rhs);
      }
    }
  }

  // Critical pairs of lhs_i against lhs_j: proper suffix/prefix overlaps and
  // occurrences of lhs_j inside lhs_i.
  void overlaps(int i, int j) {
    const Word& li = rules[i].lhs;
    const Word& lj = rules[j].lhs;
    size_t n1 = li.size(), n2 = lj.size();
    for (size_t t = 1; t < std::min(n1, n2); ++t) {
      bool ok = true;
      for (size_t p = 0; p < t && ok; ++p) ok = li[n1 - t + p] == lj[p];
      if (!ok) continue;
      Word a = rules[i].rhs;
      a.insert(a.end(), lj.begin() + t, lj.end());
      Word b(li.begin(), li.end() - t);
      b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
      equations.emplace_back(std::move(a), std::move(b));
    }
    for (size_t p = 0; p + n2 <= n1; ++p) {
      if (i == j && p == 0 && n1 == n2) continue;
      bool ok = true;
      for (size_t q = 0; q < n2 && ok; ++q) ok = li[p + q] == lj[q];
      if (!ok) continue;
      Word b(li.begin(), li.begin() + p);
      b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
      b.insert(b.end(), li.begin() + p + n2, li.end());
      equations.emplace_back(rules[i].rhs, std::move(b));
    }
  }

  bool run() {
    while (!failed) {
      if (!equations.empty()) {
        auto [u, v] = std::move(equations.front());
        equations.pop_front();
        add_rule_from(std::move(u), std::move(v));
      } else if (!fresh.empty()) {
        int k = fresh.front();
        fresh.pop_front();
        if (!active[k]) continue;
        int count = static_cast<int>(rules.size());
        for (int m = 0; m < count && !failed; ++m) {
          if (!active[m] || !active[k]) continue;
          overlaps(k, m);
          if (m != k) overlaps(m, k);
        }
      } else {
        return true;
      }
    }
    return false;
  }
};

}  // namespace

Word RewriteSystem::reduce(Word w) const {
  size_t pos = 0;
  while (pos < w.size()) {
    bool rewrote = false;
    for (const Rule& r : rules_) {
      if (pos + r.lhs.size() > w.size()) continue;
      if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) {
        Word next(w.begin(), w.begin() + pos);
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
        w = std::move(next);
        pos = pos > max_lhs_ ? pos - max_lhs_ + 1 : 0;
        rewrote = true;
        break;
      }
    }
    if (!rewrote) ++pos;
  }
  return w;
}

Word RewriteSystem::normal_form(const Word& w) const {
  if (!complete_)
    raise(Errc::not_complete, "rewrite system is not complete");
  return reduce(w);
}

RewriteSystem complete_presentation(const std::vector<Relation>& rels,
                                    const std::vector<int>& priority,
                                    const CompletionLimits& limits) {
  int alphabet = static_cast<int>(priority.size());
  std::vector<int> rank(alphabet, -1);
  for (int i = 0; i < alphabet; ++i) {
    int v = priority[i];
    if (v < 0 || v >= alphabet || rank[v] >= 0)
      raise(Errc::input, "priority must be a permutation of the vertices");
    rank[v] = i;
  }

  Completer c(rank, limits, std::max(alphabet, 1));
  for (const Relation& r : rels) c.equations.emplace_back(r.lhs, r.rhs);
  bool done = c.run();

  RewriteSystem rs;
  rs.priority_ = priority;
  rs.rank_ = rank;
  rs.complete_ = done;
  for (size_t i = 0; i < c.rules.size(); ++i)
    if (c.active[i]) rs.rules_.push_back(c.rules[i]);
  std::sort(rs.rules_.begin(), rs.rules_.end(),
            [&](const Rule& a, const Rule& b) {
              return shortlex_less(a.lhs, b.lhs, rank);
            });
  for (const Rule& r : rs.rules_)
    rs.max_lhs_ = std::max(rs.max_lhs_, r.lhs.size());
  return rs;
}

std::vector<int> default_priority(const DirectedGraph& g) {
  if (is_type_an(g)) return g.canonical_order();
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

RewriteSystem rewrite_system_for(const DirectedGraph& g,
                                 const CompletionLimits& limits) {
  return complete_presentation(relations_of(g), default_priority(g), limits);
}

}  // namespace hk
