#pragma once

// Exact arithmetic: big rationals, dense univariate polynomials over Q,
// canonical rational functions, and truncated power series in x.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permcheb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the conventions used by the counting formulas:
/// zero for k < 0 and for 0 <= n < k; for n < 0 the generalized value
/// (-1)^k C(k-n-1, k).
Integer binomial(long n, long k);
Integer catalan(long j);
Integer factorial(long n);

std::string to_string(const Rational& q);

/// Dense polynomial in x, lowest degree first, never with a trailing zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly x();
  static Poly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of x^i (zero past the degree).
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& at) const;
  Poly scaled(const Rational& k) const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Renders as "1 - 2*x + x^2", lowest degree first.
  std::string to_string(std::string_view var = "x") const;
  /// Number of nonzero terms.
  int term_count() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = b*quot + rem with deg(rem) < deg(b).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Rational function num/den in lowest terms. The denominator is scaled so
/// that its constant term is 1 (or, when that vanishes, its lowest nonzero
/// coefficient is 1); the zero function is 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(Poly num);  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);
  RatFun(const Rational& c) : RatFun(Poly(c)) {}  // NOLINT
  RatFun(long c) : RatFun(Poly(c)) {}             // NOLINT

  static RatFun x() { return RatFun(Poly::x()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun inverse() const;
  RatFun pow(int e) const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(1 - x)/(1 - 2*x)"; a polynomial prints without a denominator.
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFun(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Poly num_;
  Poly den_;
};

/// Coefficients c_0..c_N of a power series truncated after x^N.
class Series {
 public:
  Series() = default;
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {}
  explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](size_t i) const { return c_[i]; }
  Rational& operator[](size_t i) { return c_[i]; }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Same series cut down to a lower order.
  Series truncated(int order) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  /// Truncated convolution; the result has the smaller of the two orders.
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// "1,1,2,5"
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

Series series_of(const Poly& p, int order);
/// Maclaurin expansion through x^order; throws DivisionByZero when the
/// denominator vanishes at 0.
Series series_of(const RatFun& f, int order);
Series series_from_counts(const std::vector<std::uint64_t>& counts);

}  // namespace permcheb
