#include "hk/word.hpp"

#include <cctype>
#include <sstream>

namespace hk {

VertexSet content(const Word& w) {
  VertexSet s;
  for (int x : w) s.insert(x);
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool shortlex_less(const Word& a, const Word& b, const std::vector<int>& rank) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank[a[i]] < rank[b[i]];
  return false;
}

Word canonical_projection(const Word& w, VertexSet keep) {
  Word out;
  for (int x : w)
    if (keep.contains(x)) out.push_back(x);
  return out;
}

namespace {

int resolve_letter(const DirectedGraph& g, const std::string& token) {
  int v = g.vertex_by_label(token);
  if (v >= 0) return v;
  bool digits = !token.empty();
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
  if (digits) {
    int idx = std::stoi(token);
    if (idx >= 0 && idx < g.size()) return idx;
  }
  raise(Errc::input, "unknown vertex `" + token + "`");
}

}  // namespace

Word parse_word(const DirectedGraph& g, const std::string& text) {
  std::string t;
  bool has_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      has_space = !t.empty();
    else
      t += c;
  }
  if (t.empty() || t == "-") return {};

  if (has_space) {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      if (token == "-") continue;
      w.push_back(resolve_letter(g, token));
    }
    return w;
  }
  // Single token: a full label, else a compact run of one-char letters.
  if (g.vertex_by_label(t) >= 0) return {g.vertex_by_label(t)};
  Word w;
  for (char c : t) {
    std::string one(1, c);
    int v = g.vertex_by_label(one);
    if (v < 0 && std::isdigit(static_cast<unsigned char>(c))) {
      int idx = c - '0';
      if (idx < g.size()) v = idx;
    }
    if (v < 0) raise(Errc::input, "unknown vertex `" + one + "` in word");
    w.push_back(v);
  }
  return w;
}

std::string format_word(const DirectedGraph& g, const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!g.single_char_labels() && i) out += " ";
    out += g.label(w[i]);
  }
  return out;
}

}  // namespace hk
