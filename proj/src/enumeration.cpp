#include "hk/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace hk {

ElementId ElementTable::element_of(const RewriteSystem& rs, const Word& w) const {
  auto it = index.find(rs.normal_form(w));
  if (it == index.end())
    raise(Errc::input, "word does not belong to the enumerated monoid");
  return it->second;
}

ElementTable enumerate_elements(const RewriteSystem& rs, const DirectedGraph& g,
                                size_t cap) {
  if (!rs.complete())
    raise(Errc::not_complete, "enumeration needs a complete rewrite system");
  int n = g.size();

  std::vector<Word> words{Word{}};
  std::unordered_map<Word, ElementId, WordHash> seen{{Word{}, 0}};
  std::vector<ElementId> mult;  // discovery-order Cayley rows
  for (size_t e = 0; e < words.size(); ++e) {
    for (int gen = 0; gen < n; ++gen) {
      Word w = words[e];
      w.push_back(gen);
      Word nf = rs.normal_form(w);
      auto [it, inserted] = seen.try_emplace(std::move(nf), words.size());
      if (inserted) {
        words.push_back(it->first);
        if (words.size() > cap)
          raise(Errc::cap_exceeded,
                "element cap " + std::to_string(cap) +
                    " exceeded; the monoid is likely infinite or too large");
      }
      mult.push_back(it->second);
    }
  }

  // Re-index in shortlex order for a stable table.
  size_t count = words.size();
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return shortlex_less(words[a], words[b], rs.rank());
  });
  std::vector<int> new_id(count);
  for (size_t i = 0; i < count; ++i) new_id[order[i]] = static_cast<int>(i);

  ElementTable t;
  t.num_generators = n;
  t.normal_forms.resize(count);
  t.cayley.assign(count * n, 0);
  for (size_t old = 0; old < count; ++old) {
    t.normal_forms[new_id[old]] = words[old];
    for (int gen = 0; gen < n; ++gen)
      t.cayley[static_cast<size_t>(new_id[old]) * n + gen] =
          new_id[mult[old * n + gen]];
  }
  for (size_t i = 0; i < count; ++i)
    t.index.emplace(t.normal_forms[i], static_cast<int>(i));
  return t;
}

std::vector<ElementId> idempotents(const ElementTable& t,
                                   const DirectedGraph& g) {
  std::vector<ElementId> out;
  for (ElementId e = 0; e < static_cast<ElementId>(t.size()); ++e)
    if (t.product(e, e) == e) out.push_back(e);

  // e -> content(e) must biject onto the acyclic full vertex subsets.
  std::unordered_set<uint64_t> contents;
  for (ElementId e : out) {
    VertexSet c = t.content_of(e);
    if (has_oriented_cycle(g, c))
      raise(Errc::input, "idempotent with cyclic content: engine bug");
    if (!contents.insert(c.bits()).second)
      raise(Errc::input, "two idempotents share a content: engine bug");
  }
  uint64_t subsets = uint64_t{1} << g.size();
  uint64_t acyclic = 0;
  for (uint64_t mask = 0; mask < subsets; ++mask)
    if (!has_oriented_cycle(g, VertexSet(mask))) ++acyclic;
  if (acyclic != contents.size())
    raise(Errc::input, "idempotent count differs from acyclic subset count");
  return out;
}

bool zero_power_check(const ElementTable& t, const DirectedGraph& g,
                      const RewriteSystem& rs, const Word& w) {
  VertexSet c = content(w);
  if (has_oriented_cycle(g, c))
    raise(Errc::has_cycle, "content subgraph contains an oriented cycle");
  int m = c.count();
  ElementId x = t.element_of(rs, w);
  ElementId p = t.index.at(Word{});  // epsilon
  for (int k = 0; k < m; ++k) p = t.product(p, x);

  if (t.product(p, x) != p) return false;    // constant from m on
  if (t.product(p, p) != p) return false;    // idempotent
  if (!(t.content_of(p) == c)) return false; // the zero has full content
  // Uniqueness: no other idempotent carries this content.
  for (ElementId e = 0; e < static_cast<ElementId>(t.size()); ++e)
    if (e != p && t.product(e, e) == e && t.content_of(e) == c) return false;
  return true;
}

std::string export_table(const DirectedGraph& g, const ElementTable& t) {
  std::string out = "elements " + std::to_string(t.size()) + " generators " +
                    std::to_string(t.num_generators) + "\n";
  for (const Word& w : t.normal_forms) out += format_word(g, w) + "\n";
  out += "cayley\n";
  for (size_t e = 0; e < t.size(); ++e) {
    for (int gen = 0; gen < t.num_generators; ++gen) {
      if (gen) out += " ";
      out += std::to_string(t.cayley[e * t.num_generators + gen]);
    }
    out += "\n";
  }
  return out;
}

namespace {

constexpr int64_t kMaxOracleUniverse = int64_t{24} << 20;

// Words over an n-letter alphabet of length at most len.
int64_t universe_size(int n, int len) {
  int64_t total = 1;
  int64_t level = 1;
  for (int l = 1; l <= len && n > 0; ++l) {
    level *= n;
    total += level;
    if (total > (int64_t{1} << 40)) break;  // plenty to trigger the guard
  }
  return total;
}

// Union-find over the dense word universe of one padded closure run.
struct Closure {
  int alphabet;
  int max_word_len;
  std::vector<int64_t> offset;  // offset[len]; offset[len+1] bounds level len
  std::vector<int64_t> pow;
  std::vector<int32_t> parent;
  std::vector<int32_t> size;

  Closure(int n, int len) : alphabet(n), max_word_len(len) {
    offset.assign(len + 2, 0);
    pow.assign(len + 1, 1);
    for (int i = 1; i <= len; ++i) pow[i] = pow[i - 1] * std::max(n, 1);
    int64_t total = 0;
    for (int l = 0; l <= len; ++l) {
      offset[l] = total;
      total += (n == 0 && l > 0) ? 0 : pow[l];
    }
    offset[len + 1] = total;
    if (total > kMaxOracleUniverse)
      raise(Errc::input, "oracle word universe too large; lower the lengths");
    parent.resize(total);
    std::iota(parent.begin(), parent.end(), 0);
    size.assign(total, 1);
  }

  int64_t encode(const Word& w) const {
    int64_t idx = offset[w.size()];
    for (size_t i = 0; i < w.size(); ++i) idx += w[i] * pow[i];
    return idx;
  }

  int64_t find(int64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int64_t a, int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }

  // Unions every word with its single-relation-step rewrites. Each relation
  // stores its longer side as lhs, so replacements never grow a word and
  // every neighbor stays inside the universe.
  void saturate(const std::vector<Relation>& rels) {
    Word w;
    for (int len = 1; len <= max_word_len; ++len) {
      w.assign(len, 0);
      int64_t idx = offset[len];
      while (true) {
        for (const Relation& r : rels) {
          int k = static_cast<int>(r.lhs.size());
          for (int pos = 0; pos + k <= len; ++pos) {
            bool match = true;
            for (int i = 0; i < k && match; ++i) match = w[pos + i] == r.lhs[i];
            if (!match) continue;
            Word nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), r.rhs.begin(), r.rhs.end());
            nw.insert(nw.end(), w.begin() + pos + k, w.end());
            unite(idx, encode(nw));
          }
        }
        // Little-endian odometer; encode() is little-endian too, so the
        // index just increments.
        int p = 0;
        while (p < len && w[p] == alphabet - 1) w[p++] = 0;
        if (p == len) break;
        ++w[p];
        ++idx;
      }
    }
  }
};

}  // namespace

int64_t OracleResult::encode(const Word& w) const {
  int64_t idx = level_offset[w.size()];
  int64_t p = 1;
  for (size_t i = 0; i < w.size(); ++i) {
    idx += w[i] * p;
    p *= std::max(alphabet, 1);
  }
  return idx;
}

int64_t OracleResult::find(int64_t x) const {
  while (root[x] != x) x = root[x];
  return x;
}

int OracleResult::class_of(const Word& w) const {
  if (static_cast<int>(w.size()) > max_len)
    raise(Errc::input, "word longer than the oracle's max_len");
  return class_ids.at(find(encode(w)));
}

void OracleResult::require_certified() const {
  if (!certified)
    raise(Errc::unstable,
          "oracle class count did not stabilize; increase max_len or slack");
}

OracleResult oracle_classes(const DirectedGraph& g, int max_len, int slack) {
  if (max_len < 0 || slack < 1)
    raise(Errc::input, "oracle needs max_len >= 0 and slack >= 1");
  std::vector<Relation> rels = relations_of(g);
  int n = g.size();
  // Both closure runs must fit; reject before doing any work.
  if (n > 0 && universe_size(n, max_len + slack + 1) > kMaxOracleUniverse)
    raise(Errc::input, "oracle word universe too large; lower the lengths");

  auto counted_classes = [&](Closure& c) {
    std::unordered_set<int64_t> roots;
    for (int64_t idx = 0; idx < c.offset[std::min(max_len, c.max_word_len) + 1];
         ++idx)
      roots.insert(c.find(idx));
    return roots.size();
  };

  Closure run(n, n == 0 ? 0 : max_len + slack);
  run.saturate(rels);
  size_t count1 = counted_classes(run);

  bool stable;
  {
    Closure wider(n, n == 0 ? 0 : max_len + slack + 1);
    wider.saturate(rels);
    stable = counted_classes(wider) == count1;
  }

  OracleResult res;
  res.max_len = max_len;
  res.slack = slack;
  res.alphabet = n;
  res.class_count = static_cast<int64_t>(count1);
  res.level_offset = run.offset;

  // Dense class ids for counted classes, in word-index order.
  for (int64_t idx = 0; idx < run.offset[std::min(max_len, run.max_word_len) + 1];
       ++idx) {
    int64_t r = run.find(idx);
    res.class_ids.try_emplace(r, static_cast<int>(res.class_ids.size()));
  }

  // Right-multiplication closure: for every counted word w and generator a,
  // [w a] must land in a counted class, consistently across each class.
  bool closed = true;
  if (n > 0) {
    std::vector<int> action(res.class_ids.size() * n, -1);
    Word w;
    for (int len = 0; len <= max_len && closed; ++len) {
      w.assign(len, 0);
      while (closed) {
        int cls = res.class_ids.at(run.find(run.encode(w)));
        for (int a = 0; a < n; ++a) {
          Word wa = w;
          wa.push_back(a);
          int64_t r = run.find(run.encode(wa));
          auto it = res.class_ids.find(r);
          if (it == res.class_ids.end()) {
            closed = false;  // product escapes the counted universe
            break;
          }
          int& slot = action[static_cast<size_t>(cls) * n + a];
          if (slot < 0)
            slot = it->second;
          else if (slot != it->second) {
            closed = false;  // inconsistent action: classes are split
            break;
          }
        }
        if (len == 0) break;
        int p = 0;
        while (p < len && w[p] == n - 1) w[p++] = 0;
        if (p == len) break;
        ++w[p];
      }
    }
  }

  res.certified = stable && closed;
  res.root.assign(run.parent.begin(), run.parent.end());
  // Fully compress so OracleResult::find terminates without mutation.
  for (size_t i = 0; i < res.root.size(); ++i) {
    int64_t r = static_cast<int64_t>(i);
    while (res.root[r] != r) r = res.root[r];
    res.root[i] = static_cast<int32_t>(r);
  }
  return res;
}

}  // namespace hk
