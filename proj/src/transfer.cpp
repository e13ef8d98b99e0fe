#include "permcheb/transfer.hpp"

#include <map>
#include <set>
#include <sstream>

#include "permcheb/error.hpp"

namespace permcheb {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

// Fraction-free elimination; entries stay polynomials with exact divisions.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly();
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<std::vector<Poly>> i_minus_xa(const TransferSystem& sys) {
  const size_t n = static_cast<size_t>(sys.size());
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly e = Poly::monomial(Rational(-sys.matrix[i][j]), 1);
      if (i == j) e += Poly(1);
      m[i][j] = e;
    }
  return m;
}

}  // namespace

// ---------------------------------------------------------------- trees

void GeneratingTree::validate() const {
  std::set<std::string> seen;
  for (const auto& [label, kids] : rules)
    if (!seen.insert(label).second) throw InvalidArgument("label " + label + " has two rules");
  if (!seen.count(root)) throw InvalidArgument("root label " + root + " has no rule");
  for (const auto& [label, kids] : rules)
    for (const auto& c : kids)
      if (!seen.count(c)) throw InvalidArgument("label " + c + " has no rule");
}

const std::vector<std::string>& GeneratingTree::children(const std::string& label) const {
  for (const auto& [l, kids] : rules)
    if (l == label) return kids;
  throw InvalidArgument("unknown label " + label);
}

GeneratingTree GeneratingTree::parse(std::string_view text) {
  GeneratingTree gt;
  bool have_root = false;
  size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("root:", 0) == 0) {
      gt.root = trim(std::string_view(line).substr(5));
      if (gt.root.empty()) throw InvalidArgument("line " + std::to_string(line_no) + ": empty root label");
      have_root = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'label -> children'");
    const std::string label = trim(std::string_view(line).substr(0, arrow));
    if (label.empty() || label.find(' ') != std::string::npos)
      throw InvalidArgument("line " + std::to_string(line_no) + ": bad label");
    gt.rules.emplace_back(label, split_words(std::string_view(line).substr(arrow + 2)));
  }
  if (!have_root) throw InvalidArgument("rule file has no 'root:' line");
  gt.validate();
  return gt;
}

std::string GeneratingTree::to_text() const {
  std::string s = "root: " + root + "\n";
  for (const auto& [label, kids] : rules) {
    s += label + " ->";
    for (const auto& c : kids) s += " " + c;
    s += "\n";
  }
  return s;
}

GeneratingTree Ak_tree(int k) {
  if (k < 3) throw InvalidArgument("A_k needs k >= 3");
  GeneratingTree gt;
  gt.root = "2";
  for (int l = 2; l <= k - 1; ++l) {
    std::vector<std::string> kids;
    if (l < k - 1) {
      for (int c = 2; c <= l + 1; ++c) kids.push_back(std::to_string(c));
    } else {
      for (int c = 2; c <= k - 1; ++c) kids.push_back(std::to_string(c));
      kids.push_back(std::to_string(k - 1));
    }
    gt.rules.emplace_back(std::to_string(l), std::move(kids));
  }
  return gt;
}

GeneratingTree binary_tree() { return GeneratingTree{"2", {{"2", {"2", "2"}}}}; }

GeneratingTree fibonacci_tree() { return GeneratingTree{"1", {{"1", {"2"}}, {"2", {"1", "2"}}}}; }

TransferSystem tree_to_system(const GeneratingTree& gt) {
  gt.validate();
  TransferSystem sys;
  for (const auto& [label, kids] : gt.rules) sys.labels.push_back(label);
  const size_t n = sys.labels.size();
  sys.matrix.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (const auto& c : gt.rules[i].second) ++sys.matrix[i][static_cast<size_t>(sys.index_of(c))];
  sys.start = sys.index_of(gt.root);
  return sys;
}

TransferSystem build_Ak(int k) { return tree_to_system(Ak_tree(k)); }

Series level_counts(const GeneratingTree& gt, int n_max) {
  gt.validate();
  if (n_max < 0) throw InvalidArgument("negative depth");
  std::map<std::string, Integer> level{{gt.root, 1}};
  Series out(n_max);
  for (int n = 0; n <= n_max; ++n) {
    Integer total = 0;
    std::map<std::string, Integer> next;
    for (const auto& [label, count] : level) {
      total += count;
      for (const auto& c : gt.children(label)) next[c] += count;
    }
    out[static_cast<size_t>(n)] = Rational(total);
    level = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- systems

int TransferSystem::index_of(std::string_view label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw InvalidArgument("unknown vertex label " + std::string(label));
}

void TransferSystem::validate() const {
  if (matrix.size() != labels.size()) throw InvalidArgument("matrix size does not match label count");
  for (const auto& row : matrix) {
    if (row.size() != labels.size()) throw InvalidArgument("matrix is not square");
    for (long v : row)
      if (v < 0) throw InvalidArgument("negative edge multiplicity");
  }
  if (start < 0 || start >= size()) throw InvalidArgument("start vertex out of range");
}

Poly transfer_determinant(const TransferSystem& sys) {
  sys.validate();
  return bareiss_determinant(i_minus_xa(sys));
}

RatFun walk_gf(const TransferSystem& sys, int r, int s) {
  sys.validate();
  if (r < 0 || r >= sys.size() || s < 0 || s >= sys.size()) throw InvalidArgument("vertex index out of range");
  const auto m = i_minus_xa(sys);
  // [(I - xA)^{-1}]_{r,s} = (-1)^{r+s} det(minor without row s and column r) / det
  std::vector<std::vector<Poly>> minor;
  for (size_t i = 0; i < m.size(); ++i) {
    if (static_cast<int>(i) == s) continue;
    std::vector<Poly> row;
    for (size_t j = 0; j < m.size(); ++j)
      if (static_cast<int>(j) != r) row.push_back(m[i][j]);
    minor.push_back(std::move(row));
  }
  Poly num = bareiss_determinant(std::move(minor));
  if ((r + s) % 2) num = -num;
  return RatFun(num, bareiss_determinant(m));
}

std::vector<std::vector<Integer>> series_of_walks(const TransferSystem& sys, int from, int length_max) {
  sys.validate();
  if (from < 0 || from >= sys.size()) throw InvalidArgument("vertex index out of range");
  if (length_max < 0) throw InvalidArgument("negative walk length");
  const size_t n = static_cast<size_t>(sys.size());
  std::vector<std::vector<Integer>> table;
  std::vector<Integer> row(n, 0);
  row[static_cast<size_t>(from)] = 1;
  table.push_back(row);
  for (int len = 1; len <= length_max; ++len) {
    std::vector<Integer> next(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (row[i] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        if (sys.matrix[i][j]) next[j] += row[i] * sys.matrix[i][j];
    }
    row = std::move(next);
    table.push_back(row);
  }
  return table;
}

Series open_walk_series(const TransferSystem& sys, int from, int length_max) {
  const auto table = series_of_walks(sys, from, length_max);
  Series s(length_max);
  for (size_t len = 0; len < table.size(); ++len) {
    Integer total = 0;
    for (const auto& v : table[len]) total += v;
    s[len] = Rational(total);
  }
  return s;
}

Series closed_walk_series(const TransferSystem& sys, int v, int length_max) {
  const auto table = series_of_walks(sys, v, length_max);
  Series s(length_max);
  for (size_t len = 0; len < table.size(); ++len) s[len] = Rational(table[len][static_cast<size_t>(v)]);
  return s;
}

TransferSystem dyck_strip_system(int height_cap) {
  if (height_cap < 1) throw InvalidArgument("strip height must be at least 1");
  TransferSystem sys;
  const size_t n = static_cast<size_t>(height_cap) + 1;
  for (size_t h = 0; h < n; ++h) sys.labels.push_back(std::to_string(h));
  sys.matrix.assign(n, std::vector<long>(n, 0));
  for (size_t h = 0; h + 1 < n; ++h) sys.matrix[h][h + 1] = sys.matrix[h + 1][h] = 1;
  sys.start = 0;
  return sys;
}

}  // namespace permcheb
