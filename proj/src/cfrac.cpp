#include "permcheb/cfrac.hpp"

#include <sstream>

#include "json.hpp"
#include "permcheb/error.hpp"

namespace permcheb {

void CFSpec::validate() const {
  if (k < 1) throw InvalidArgument("continued fraction needs k >= 1");
  if (x_order < 0 || z_order < 0) throw InvalidArgument("negative truncation order");
  if (depth < x_order)
    throw InvalidArgument("depth " + std::to_string(depth) + " is below the x-order " + std::to_string(x_order) +
                          "; coefficients would be wrong");
}

BiSeries cf_biseries(const CFSpec& spec) {
  spec.validate();
  const BiSeries one = BiSeries::one(spec.x_order, spec.z_order);
  BiSeries tail = one;
  for (int j = spec.depth; j >= 1; --j) {
    const Integer d = binomial(j - 1, spec.k - 1);
    // exponents beyond the z truncation contribute nothing
    const int dz = d > spec.z_order ? spec.z_order + 1 : static_cast<int>(d.get_si());
    tail = (one - tail.times_x_z(dz)).inverse();
  }
  return tail;
}

TriSeries rwz_triseries(int N) {
  if (N < 0 || N > 10) throw InvalidArgument("rwz_triseries supports 0 <= N <= 10");
  const int y_cap = static_cast<int>(binomial(N, 2).get_si());
  const int z_cap = static_cast<int>(binomial(N, 3).get_si());
  const TriSeries one = TriSeries::one(N, y_cap, z_cap);
  TriSeries f = one;
  // Each round fixes one more x-degree.
  for (int round = 0; round <= N; ++round) f = one + (f.substitute_xy_yz() * f).times_x();
  return f;
}

std::string biseries_csv(const BiSeries& s) {
  std::ostringstream os;
  os << "n,r,count\n";
  for (int n = 0; n <= s.x_order(); ++n)
    for (int r = 0; r <= s.z_order(); ++r) os << n << ',' << r << ',' << s.at(n, r).get_str() << '\n';
  return os.str();
}

std::string biseries_json(const BiSeries& s) {
  nlohmann::json j;
  j["x_order"] = s.x_order();
  j["z_order"] = s.z_order();
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n <= s.x_order(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (int r = 0; r <= s.z_order(); ++r) row.push_back(s.at(n, r).get_str());
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump();
}

}  // namespace permcheb
