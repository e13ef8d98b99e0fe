#include "permcheb/multiseries.hpp"

#include "permcheb/error.hpp"

namespace permcheb {

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int x_order, int z_order) : nx_(x_order), nz_(z_order) {
  if (x_order < 0 || z_order < 0) throw InvalidArgument("BiSeries: negative truncation order");
  c_.resize(static_cast<size_t>(nx_ + 1) * static_cast<size_t>(nz_ + 1));
}

BiSeries BiSeries::one(int x_order, int z_order) {
  BiSeries s(x_order, z_order);
  s.at(0, 0) = 1;
  return s;
}

size_t BiSeries::index(int n, int r) const {
  if (n < 0 || n > nx_ || r < 0 || r > nz_) throw InvalidArgument("BiSeries: coefficient index outside truncation");
  return static_cast<size_t>(n) * static_cast<size_t>(nz_ + 1) + static_cast<size_t>(r);
}

void BiSeries::require_same_shape(const BiSeries& o) const {
  if (nx_ != o.nx_ || nz_ != o.nz_) throw InvalidArgument("BiSeries: mismatched truncation orders");
}

BiSeries BiSeries::times_x_z(int d) const {
  if (d < 0) throw InvalidArgument("BiSeries::times_x_z: negative z exponent");
  BiSeries out(nx_, nz_);
  for (int n = 0; n + 1 <= nx_; ++n)
    for (int r = 0; r + d <= nz_; ++r) out.at(n + 1, r + d) = at(n, r);
  return out;
}

BiSeries BiSeries::inverse() const {
  const Rational c00 = at(0, 0);
  if (c00 == 0) throw DivisionByZero("BiSeries::inverse: vanishing constant term");
  // Solve f * g = 1 coefficient by coefficient in (n, r) lexicographic order.
  BiSeries g(nx_, nz_);
  const Rational inv = 1 / c00;
  for (int n = 0; n <= nx_; ++n) {
    for (int r = 0; r <= nz_; ++r) {
      Rational acc = (n == 0 && r == 0) ? Rational(1) : Rational(0);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= r; ++j) {
          if (i == 0 && j == 0) continue;
          const Rational& f = at(i, j);
          if (f == 0) continue;
          acc -= f * g.at(n - i, r - j);
        }
      g.at(n, r) = acc * inv;
    }
  }
  return g;
}

Series BiSeries::z_row(int r) const {
  Series s(nx_);
  for (int n = 0; n <= nx_; ++n) s[static_cast<size_t>(n)] = at(n, r);
  return s;
}

Series BiSeries::at_z_one() const {
  Series s(nx_);
  for (int n = 0; n <= nx_; ++n)
    for (int r = 0; r <= nz_; ++r) s[static_cast<size_t>(n)] += at(n, r);
  return s;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  a.require_same_shape(b);
  BiSeries out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  a.require_same_shape(b);
  BiSeries out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.require_same_shape(b);
  BiSeries out(a.nx_, a.nz_);
  for (int n1 = 0; n1 <= a.nx_; ++n1)
    for (int r1 = 0; r1 <= a.nz_; ++r1) {
      const Rational& u = a.at(n1, r1);
      if (u == 0) continue;
      for (int n2 = 0; n1 + n2 <= a.nx_; ++n2)
        for (int r2 = 0; r1 + r2 <= a.nz_; ++r2) {
          const Rational& v = b.at(n2, r2);
          if (v != 0) out.at(n1 + n2, r1 + r2) += u * v;
        }
    }
  return out;
}

// ---------------------------------------------------------------- TriSeries

TriSeries::TriSeries(int x_order, int y_order, int z_order) : nx_(x_order), ny_(y_order), nz_(z_order) {
  if (x_order < 0 || y_order < 0 || z_order < 0) throw InvalidArgument("TriSeries: negative truncation order");
  s_.resize(static_cast<size_t>(nx_) + 1);
}

TriSeries TriSeries::one(int x_order, int y_order, int z_order) {
  TriSeries t(x_order, y_order, z_order);
  t.add(0, 0, 0, 1);
  return t;
}

Rational TriSeries::at(int n, int b, int c) const {
  if (n < 0 || n > nx_) throw InvalidArgument("TriSeries: x exponent outside truncation");
  auto it = s_[static_cast<size_t>(n)].find({b, c});
  return it == s_[static_cast<size_t>(n)].end() ? Rational(0) : it->second;
}

void TriSeries::add(int n, int b, int c, const Rational& v) {
  if (n < 0 || b < 0 || c < 0) throw InvalidArgument("TriSeries: negative exponent");
  if (n > nx_ || b > ny_ || c > nz_ || v == 0) return;
  auto& slot = s_[static_cast<size_t>(n)][{b, c}];
  slot += v;
  if (slot == 0) s_[static_cast<size_t>(n)].erase({b, c});
}

void TriSeries::require_same_shape(const TriSeries& o) const {
  if (nx_ != o.nx_ || ny_ != o.ny_ || nz_ != o.nz_) throw InvalidArgument("TriSeries: mismatched truncation orders");
}

TriSeries TriSeries::substitute_xy_yz() const {
  // x^n y^b z^c -> x^n y^(n+b) z^(b+c)
  TriSeries out(nx_, ny_, nz_);
  for (int n = 0; n <= nx_; ++n)
    for (const auto& [key, v] : s_[static_cast<size_t>(n)]) out.add(n, n + key.first, key.first + key.second, v);
  return out;
}

TriSeries TriSeries::times_x() const {
  TriSeries out(nx_, ny_, nz_);
  for (int n = 0; n < nx_; ++n) out.s_[static_cast<size_t>(n) + 1] = s_[static_cast<size_t>(n)];
  return out;
}

BiSeries TriSeries::at_y_one() const {
  BiSeries out(nx_, nz_);
  for (int n = 0; n <= nx_; ++n)
    for (const auto& [key, v] : s_[static_cast<size_t>(n)]) out.at(n, key.second) += v;
  return out;
}

Series TriSeries::at_y_z_one() const {
  Series out(nx_);
  for (int n = 0; n <= nx_; ++n)
    for (const auto& [key, v] : s_[static_cast<size_t>(n)]) out[static_cast<size_t>(n)] += v;
  return out;
}

TriSeries operator+(const TriSeries& a, const TriSeries& b) {
  a.require_same_shape(b);
  TriSeries out = a;
  for (int n = 0; n <= b.nx_; ++n)
    for (const auto& [key, v] : b.s_[static_cast<size_t>(n)]) out.add(n, key.first, key.second, v);
  return out;
}

TriSeries operator*(const TriSeries& a, const TriSeries& b) {
  a.require_same_shape(b);
  TriSeries out(a.nx_, a.ny_, a.nz_);
  for (int n1 = 0; n1 <= a.nx_; ++n1)
    for (int n2 = 0; n1 + n2 <= a.nx_; ++n2)
      for (const auto& [k1, v1] : a.s_[static_cast<size_t>(n1)])
        for (const auto& [k2, v2] : b.s_[static_cast<size_t>(n2)])
          out.add(n1 + n2, k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return out;
}

}  // namespace permcheb
