#include "permcheb/dyck.hpp"

#include <algorithm>
#include <functional>

#include "permcheb/error.hpp"

namespace permcheb {

using Step = DyckPath::Step;

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) throw InvalidArgument("path goes below the axis");
  }
  if (h != 0) throw InvalidArgument("path does not return to the axis");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    if (c == 'U' || c == 'u') steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd') steps.push_back(Step::Down);
    else throw InvalidArgument(std::string("bad step '") + c + "' in Dyck path");
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string s;
  for (Step st : steps_) s += static_cast<char>(st);
  return s;
}

DyckPath phi(const Permutation& pi) {
  if (contains(pi, Permutation{1, 3, 2})) throw InvalidArgument("phi is defined on 132-avoiding permutations");
  std::vector<Step> steps;
  int height = 0;
  for (int j = 0; j < pi.size(); ++j) {
    int h = 0;
    for (int i = j + 1; i < pi.size(); ++i)
      if (pi[static_cast<size_t>(i)] > pi[static_cast<size_t>(j)]) ++h;
    for (; height < h + 1; ++height) steps.push_back(Step::Up);
    steps.push_back(Step::Down);
    height = h;
  }
  return DyckPath(std::move(steps));
}

Permutation phi_inverse(const DyckPath& d) {
  // h_j is the height reached by the j-th down-step.
  std::vector<int> h;
  int height = 0;
  for (Step s : d.steps()) {
    height += s == Step::Up ? 1 : -1;
    if (s == Step::Down) h.push_back(height);
  }
  const int n = static_cast<int>(h.size());
  std::vector<int> remaining(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) remaining[static_cast<size_t>(v)] = n - v;  // descending
  std::vector<int> values;
  for (int j = 0; j < n; ++j) {
    // h_j larger entries remain to the right, so pi_j is the (h_j+1)-th largest left.
    const int idx = h[static_cast<size_t>(j)];
    if (idx >= static_cast<int>(remaining.size())) throw InvalidArgument("path is not the image of a permutation");
    values.push_back(remaining[static_cast<size_t>(idx)]);
    remaining.erase(remaining.begin() + idx);
  }
  Permutation pi(std::move(values));
  if (phi(pi) != d) throw InvalidArgument("path is not the image of a 132-avoiding permutation");
  return pi;
}

int max_height(const DyckPath& d) {
  int h = 0, best = 0;
  for (Step s : d.steps()) {
    h += s == Step::Up ? 1 : -1;
    best = std::max(best, h);
  }
  return best;
}

std::vector<DyckPath> all_dyck_paths(int semilength) {
  if (semilength < 0) throw InvalidArgument("negative semilength");
  std::vector<DyckPath> out;
  std::vector<Step> cur;
  std::function<void(int, int)> go = [&](int ups, int downs) {
    if (ups == semilength && downs == semilength) {
      out.emplace_back(cur);
      return;
    }
    if (ups < semilength) {
      cur.push_back(Step::Up);
      go(ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(Step::Down);
      go(ups, downs + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

}  // namespace permcheb
