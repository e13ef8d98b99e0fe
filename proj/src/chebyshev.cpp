#include "permcheb/chebyshev.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "permcheb/error.hpp"

namespace permcheb {

namespace {

// t^2 = 1/(4x)
const RatFun& t_squared() {
  static const RatFun v(Poly(1), Poly::monomial(4, 1));
  return v;
}

}  // namespace

TExpr TExpr::t() { return TExpr(RatFun(), RatFun(1)); }

RatFun TExpr::to_ratfun() const {
  if (!b_.is_zero()) throw IrreducibleExpression("expression has a nonzero t-part: " + to_string());
  return a_;
}

TExpr operator*(const TExpr& p, const TExpr& q) {
  RatFun a = p.a_ * q.a_;
  if (!p.b_.is_zero() && !q.b_.is_zero()) a += p.b_ * q.b_ * t_squared();
  return TExpr(std::move(a), p.a_ * q.b_ + p.b_ * q.a_);
}

TExpr TExpr::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero t-expression");
  if (b_.is_zero()) return TExpr(a_.inverse());
  if (a_.is_zero()) return TExpr(RatFun(), (b_ * t_squared()).inverse());
  const RatFun norm = a_ * a_ - b_ * b_ * t_squared();
  const RatFun inv = norm.inverse();
  return TExpr(a_ * inv, -(b_ * inv));
}

TExpr TExpr::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TExpr result(1);
  TExpr base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string TExpr::to_string() const { return a_.to_string() + " + (" + b_.to_string() + ")*t"; }

TExpr two_t() { return TExpr(RatFun(), RatFun(2)); }

TExpr U(int r) {
  if (r < -1) throw InvalidArgument("U_r is defined for r >= -1");
  static std::mutex mu;
  static std::vector<TExpr> cache{TExpr(0), TExpr(1)};  // U_{-1}, U_0
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= r + 1) {
    const size_t n = cache.size();
    cache.push_back(two_t() * cache[n - 1] - cache[n - 2]);
  }
  return cache[static_cast<size_t>(r + 1)];
}

RatFun R(int k) {
  if (k < 0) throw InvalidArgument("R_k is defined for k >= 0");
  if (k == 0) return RatFun();
  static std::mutex mu;
  static std::map<int, RatFun> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  RatFun value = (two_t() * U(k - 1) / U(k)).to_ratfun();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k, std::move(value)).first->second;
}

}  // namespace permcheb
