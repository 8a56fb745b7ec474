#pragma once

#include <vector>
#include <cstdint>

#include "specnet/bigint.hpp"
#include "specnet/poly.hpp"

namespace specnet {

// Dense square matrix over an exact integer type.
template <class I>
class Matrix {
 public:
  explicit Matrix(int n) : n_(n), a_(n * n, I(0)) {}

  int dim() const { return n_; }
  I& at(int i, int j) { return a_[i * n_ + j]; }
  const I& at(int i, int j) const { return a_[i * n_ + j]; }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = I(1);
    return m;
  }

  I trace() const {
    I t(0);
    for (int i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
  }

  bool rows_sum_to_zero() const {
    for (int i = 0; i < n_; ++i) {
      I s(0);
      for (int j = 0; j < n_; ++j) s = s + at(i, j);
      if (!(s == I(0))) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const I& aik = a.at(i, k);
        if (aik == I(0)) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    return r;
  }

 private:
  int n_;
  std::vector<I> a_;
};

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence:
//   M_1 = M, c_1 = -tr(M_1), M_{k+1} = M (M_k + c_k I), c_{k+1} = -tr(M_{k+1})/(k+1).
// Every division is exact over the integers, so the result is exact for any
// exact integer type I.
template <class I>
Poly<I> char_poly(const Matrix<I>& m) {
  int n = m.dim();
  std::vector<I> c(n + 1, I(0));
  c[n] = I(1);
  if (n == 0) return Poly<I>(std::move(c));
  Matrix<I> mk = m;
  I ck = I(0) - mk.trace();
  c[n - 1] = ck;
  for (int k = 2; k <= n; ++k) {
    Matrix<I> shifted = mk;
    for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + ck;
    mk = m * shifted;
    ck = int_divexact(I(0) - mk.trace(), (long long)k);
    c[n - k] = ck;
  }
  return Poly<I>(std::move(c));
}

}  // namespace specnet
