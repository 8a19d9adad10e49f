#pragma once

#include <compare>
#include <cstddef>

#include "jantzen/checked.hpp"

namespace jantzen {

/// Dense square integer matrix sized by the root-system rank (at most 8).
class IntMat {
 public:
  IntMat() = default;
  explicit IntMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMat identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int dim() const { return n_; }

  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  IntMat operator*(const IntMat& o) const {
    IntMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Int aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
      }
    return r;
  }

  IntVec apply(const IntVec& v) const {
    IntVec r(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
    return r;
  }

  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat&, const IntMat&) = default;

 private:
  int n_ = 0;
  IntVec a_;
};

}  // namespace jantzen
