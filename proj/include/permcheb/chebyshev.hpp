#pragma once

// Chebyshev polynomials of the second kind evaluated at t = 1/(2*sqrt(x)).
// Elements of Q(x)[t]/(t^2 - 1/(4x)) are kept as a + b*t with a, b in Q(x).

#include <string>

#include "permcheb/exact.hpp"

namespace permcheb {

class TExpr {
 public:
  TExpr() = default;
  TExpr(RatFun a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  TExpr(RatFun a, RatFun b) : a_(std::move(a)), b_(std::move(b)) {}
  TExpr(long c) : a_(c) {}  // NOLINT(google-explicit-constructor)

  /// The generator t itself.
  static TExpr t();

  const RatFun& a() const { return a_; }
  const RatFun& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_reducible() const { return b_.is_zero(); }

  /// Throws IrreducibleExpression when the t-part is nonzero.
  RatFun to_ratfun() const;

  /// (a - bt)/(a^2 - b^2/(4x)); throws DivisionByZero on zero.
  TExpr inverse() const;
  TExpr pow(int e) const;

  TExpr operator-() const { return TExpr(-a_, -b_); }
  friend TExpr operator+(const TExpr& p, const TExpr& q) { return TExpr(p.a_ + q.a_, p.b_ + q.b_); }
  friend TExpr operator-(const TExpr& p, const TExpr& q) { return TExpr(p.a_ - q.a_, p.b_ - q.b_); }
  friend TExpr operator*(const TExpr& p, const TExpr& q);
  friend TExpr operator/(const TExpr& p, const TExpr& q) { return p * q.inverse(); }
  TExpr& operator+=(const TExpr& o) { return *this = *this + o; }
  TExpr& operator-=(const TExpr& o) { return *this = *this - o; }
  TExpr& operator*=(const TExpr& o) { return *this = *this * o; }
  TExpr& operator/=(const TExpr& o) { return *this = *this / o; }
  friend bool operator==(const TExpr& p, const TExpr& q) { return p.a_ == q.a_ && p.b_ == q.b_; }

  /// Diagnostic rendering "A(x) + B(x)*t".
  std::string to_string() const;

 private:
  RatFun a_;
  RatFun b_;
};

/// U_r(t) for r >= -1, with U_{-1} = 0 and U_0 = 1. Memoized.
TExpr U(int r);
/// R_k(x) = 2t U_{k-1}(t) / U_k(t), R_0 = 0. Memoized.
RatFun R(int k);
/// 2t, the factor that recurs in every closed form.
TExpr two_t();

}  // namespace permcheb
