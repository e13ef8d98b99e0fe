#include "permcheb/exact.hpp"

#include <algorithm>
#include <sstream>

#include "permcheb/error.hpp"

namespace permcheb {

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) {
    Integer v;
    mpz_bin_ui(v.get_mpz_t(), Integer(k - n - 1).get_mpz_t(), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? v : Integer(-v);
  }
  if (k > n) return 0;
  Integer v;
  mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return v;
}

Integer catalan(long j) {
  if (j < 0) throw InvalidArgument("catalan: negative index");
  return binomial(2 * j, j) / (j + 1);
}

Integer factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial: negative argument");
  Integer v;
  mpz_fac_ui(v.get_mpz_t(), static_cast<unsigned long>(n));
  return v;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("Poly::monomial: negative degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::scaled(const Rational& k) const {
  if (k == 0) return {};
  Poly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Poly Poly::operator-() const { return scaled(-1); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

int Poly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const Rational& c) { return c != 0; }));
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int i = a.degree() - db; i >= 0; --i) {
    Rational q = rem[static_cast<size_t>(i + db)] * inv_lead;
    quot[static_cast<size_t>(i)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i + j)] -= q * bc[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(1) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rational lead = den_.coeff(den_.valuation());
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun result(1);
  RatFun base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Canonical{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel first to keep the gcd on small operands.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly n1 = g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_;
  Poly d2 = g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_;
  Poly n2 = g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_;
  Poly d1 = g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_;
  Poly num = n1 * n2;
  Poly den = d1 * d2;
  const Rational lead = den.coeff(den.valuation());
  if (lead != 1) {
    num = num.scaled(1 / lead);
    den = den.scaled(1 / lead);
  }
  return RatFun(std::move(num), std::move(den), RatFun::Canonical{});
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

std::string RatFun::to_string() const {
  std::string n = num_.to_string();
  if (den_ == Poly(1)) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1 || den_.leading() != 1) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------- Series

Series Series::truncated(int order) const {
  if (order > this->order()) throw InvalidArgument("Series::truncated: order exceeds available terms");
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

Series operator+(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return r;
}

std::string Series::to_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].get_str();
  }
  return s;
}

Series series_of(const Poly& p, int order) {
  Series r(order);
  for (int i = 0; i <= order && i <= p.degree(); ++i) r[static_cast<size_t>(i)] = p.coeff(i);
  return r;
}

Series series_of(const RatFun& f, int order) {
  if (order < 0) throw InvalidArgument("series_of: negative order");
  const Poly& den = f.denominator();
  const Rational d0 = den.coeff(0);
  if (d0 == 0) throw DivisionByZero("series_of: pole at x = 0");
  const Rational inv = 1 / d0;
  Series r(order);
  const int dd = den.degree();
  for (int n = 0; n <= order; ++n) {
    Rational acc = f.numerator().coeff(n);
    for (int j = 1; j <= std::min(n, dd); ++j) acc -= den.coeff(j) * r[static_cast<size_t>(n - j)];
    r[static_cast<size_t>(n)] = acc * inv;
  }
  return r;
}

Series series_from_counts(const std::vector<std::uint64_t>& counts) {
  Series r(static_cast<int>(counts.size()) - 1);
  for (size_t i = 0; i < counts.size(); ++i) r[i] = Rational(Integer(std::to_string(counts[i])));
  return r;
}

}  // namespace permcheb
