#include "hk/matrix.hpp"

namespace hk {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const BigInt& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const BigInt& y = o.at(k, j);
        if (y != 0) out.at(i, j) += x * y;
      }
    }
  return out;
}

IntMatrix IntMatrix::minor(VertexSet keep) const {
  std::vector<int> ids = keep.to_vector();
  IntMatrix out(static_cast<int>(ids.size()));
  for (size_t r = 0; r < ids.size(); ++r)
    for (size_t c = 0; c < ids.size(); ++c)
      out.at(static_cast<int>(r), static_cast<int>(c)) = at(ids[r], ids[c]);
  return out;
}

std::vector<BigInt> IntMatrix::column(int c) const {
  std::vector<BigInt> out(n_);
  for (int r = 0; r < n_; ++r) out[r] = at(r, c);
  return out;
}

std::string IntMatrix::key() const {
  std::string out;
  for (const BigInt& x : a_) {
    out += x.get_str();
    out += ';';
  }
  return out;
}

std::string IntMatrix::dump() const {
  std::string out;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if (c) out += ' ';
      out += at(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace hk
