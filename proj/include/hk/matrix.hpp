#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hk/graph.hpp"

namespace hk {

/// Exact integers throughout; 2^i weights and long words overflow machine
/// words quickly.
using BigInt = mpz_class;

/// Dense n-by-n matrix of exact integers, rows/columns indexed by VertexId.
/// Column convention: column x holds the image of basis vector x.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const BigInt& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * n_ + c];
  }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  /// Submatrix on the given rows-and-columns subset, ascending index order.
  IntMatrix minor(VertexSet keep) const;

  std::vector<BigInt> column(int c) const;

  /// Canonical byte encoding; used as the dedup key when counting distinct
  /// matrices (hashing with exact confirmation comes free with the map).
  std::string key() const;

  /// Row-major decimal dump, one row per line.
  std::string dump() const;

 private:
  int n_ = 0;
  std::vector<BigInt> a_;
};

}  // namespace hk
