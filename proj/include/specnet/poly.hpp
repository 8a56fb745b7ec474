#pragma once

#include <vector>
#include <string>
#include <sstream>
#include <cstdint>

#include "specnet/bigint.hpp"
#include "specnet/errors.hpp"

namespace specnet {

// Dense polynomial with exact integer coefficients, stored low to high.
// I is long long on hot paths (n <= 6 sweeps) and BigInt everywhere the
// coefficients can outgrow 64 bits.
template <class I>
class Poly {
 public:
  Poly() : coeffs_(1, I(0)) {}
  explicit Poly(std::vector<I> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(I(0));
    trim();
  }
  static Poly constant(I c) { return Poly(std::vector<I>{std::move(c)}); }
  // x - r
  static Poly linear_root(long long r) { return Poly(std::vector<I>{I(-r), I(1)}); }

  int degree() const { return (int)coeffs_.size() - 1; }
  const std::vector<I>& coeffs() const { return coeffs_; }
  const I& operator[](int i) const { return coeffs_[i]; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == I(0); }
  bool is_monic() const { return coeffs_.back() == I(1); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<I> c(std::max(a.coeffs_.size(), b.coeffs_.size()), I(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<I> c(std::max(a.coeffs_.size(), b.coeffs_.size()), I(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<I> c(a.coeffs_.size() + b.coeffs_.size() - 1, I(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }

  I eval(long long x) const {
    I acc = coeffs_.back();
    for (int i = (int)coeffs_.size() - 2; i >= 0; --i) acc = acc * I(x) + coeffs_[i];
    return acc;
  }

  // Synthetic division by (x - r). Returns true and replaces *this by the
  // quotient when the remainder is exactly zero; otherwise leaves *this alone.
  bool divide_by_root(long long r) {
    std::vector<I> q(coeffs_.size() - 1, I(0));
    I carry = coeffs_.back();
    for (int i = (int)coeffs_.size() - 2; i >= 0; --i) {
      q[i] = carry;
      carry = coeffs_[i] + carry * I(r);
    }
    if (!(carry == I(0))) return false;
    coeffs_ = std::move(q);
    if (coeffs_.empty()) coeffs_.push_back(I(0));
    return true;
  }

  // Coefficients constant-first, space separated (the on-disk format).
  std::string to_line() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) os << ' ';
      os << int_to_string(coeffs_[i]);
    }
    return os.str();
  }

  std::vector<double> coeffs_as_double() const {
    std::vector<double> d(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) d[i] = int_to_double(coeffs_[i]);
    return d;
  }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == I(0)) coeffs_.pop_back();
  }
  std::vector<I> coeffs_;
};

using IntPoly = Poly<BigInt>;

inline IntPoly parse_poly_line(const std::string& line) {
  std::istringstream is(line);
  std::vector<BigInt> coeffs;
  std::string tok;
  while (is >> tok) {
    try {
      coeffs.push_back(BigInt::from_string(tok));
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad polynomial coefficient '" + tok + "'");
    }
  }
  if (coeffs.empty()) fail(errc::parse_error, "empty polynomial line");
  return IntPoly(std::move(coeffs));
}

}  // namespace specnet
