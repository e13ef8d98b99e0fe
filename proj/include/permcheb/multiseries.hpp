#pragma once

// Truncated series in several variables, as needed by the continued-fraction
// engines. Truncation orders are fixed at construction and every binary
// operation requires matching orders.

#include <map>
#include <utility>
#include <vector>

#include "permcheb/exact.hpp"

namespace permcheb {

/// Series in x through x^x_order whose coefficients are polynomials in z
/// truncated after z^z_order.
class BiSeries {
 public:
  BiSeries(int x_order, int z_order);

  static BiSeries one(int x_order, int z_order);

  int x_order() const { return nx_; }
  int z_order() const { return nz_; }
  const Rational& at(int n, int r) const { return c_[index(n, r)]; }
  Rational& at(int n, int r) { return c_[index(n, r)]; }

  /// Multiply by x * z^d, dropping whatever falls past the truncation.
  BiSeries times_x_z(int d) const;
  /// 1/f; requires the coefficient of x^0 z^0 to be nonzero.
  BiSeries inverse() const;

  /// Row of z^r as a series in x.
  Series z_row(int r) const;
  /// Substitute z = 1 (sum of the tracked terms).
  Series at_z_one() const;

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

 private:
  size_t index(int n, int r) const;
  void require_same_shape(const BiSeries& o) const;

  int nx_;
  int nz_;
  std::vector<Rational> c_;
};

/// Series in x through x^x_order with sparse coefficients in y, z, truncated
/// after y^y_order and z^z_order.
class TriSeries {
 public:
  using Key = std::pair<int, int>;  // (y exponent, z exponent)
  using Slice = std::map<Key, Rational>;

  TriSeries(int x_order, int y_order, int z_order);
  static TriSeries one(int x_order, int y_order, int z_order);

  int x_order() const { return nx_; }
  int y_order() const { return ny_; }
  int z_order() const { return nz_; }

  Rational at(int n, int b, int c) const;
  void add(int n, int b, int c, const Rational& v);
  const Slice& slice(int n) const { return s_[static_cast<size_t>(n)]; }

  /// f(x, y, z) -> f(x*y, y*z, z).
  TriSeries substitute_xy_yz() const;
  TriSeries times_x() const;

  BiSeries at_y_one() const;
  Series at_y_z_one() const;

  friend TriSeries operator+(const TriSeries& a, const TriSeries& b);
  friend TriSeries operator*(const TriSeries& a, const TriSeries& b);
  friend bool operator==(const TriSeries& a, const TriSeries& b) = default;

 private:
  void require_same_shape(const TriSeries& o) const;

  int nx_;
  int ny_;
  int nz_;
  std::vector<Slice> s_;
};

}  // namespace permcheb
