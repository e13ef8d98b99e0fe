#include "permcheb/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "permcheb/error.hpp"

namespace permcheb {

Limits Limits::from_env() {
  Limits l;
  if (const char* env = std::getenv("PERMCHEB_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 16) {
      l.max_count_n = std::max(l.max_count_n, static_cast<int>(v));
      l.max_list_n = std::max(l.max_list_n, static_cast<int>(v));
    }
  }
  return l;
}

std::string CountTable::to_json() const {
  nlohmann::json j;
  j["constraint"] = constraint.to_literal();
  j["counts"] = counts;
  return j.dump();
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,count\n";
  for (size_t n = 0; n < counts.size(); ++n) os << n << ',' << counts[n] << '\n';
  return os.str();
}

namespace {

// Depth-first generator of S_n in lexicographic order. Each constraint item
// (plus an optional tracked pattern) keeps a running occurrence count,
// updated with the occurrences that end at the newly appended entry.
class Enumerator {
 public:
  Enumerator(const ConstraintSet& cs, int n, const Permutation* tracked, int tracked_cap)
      : n_(n), tracked_(tracked), tracked_cap_(tracked_cap) {
    for (const auto& item : cs.items()) {
      patterns_.push_back(&item.pattern.materialize());
      quantifiers_.push_back(item.quantifier);
    }
    counts_.assign(patterns_.size(), 0);
    for (size_t i = 0; i < patterns_.size(); ++i) counts_[i] = patterns_[i]->empty() ? 1 : 0;
    tracked_count_ = (tracked_ && tracked_->empty()) ? 1 : 0;
    used_.assign(static_cast<size_t>(n) + 1, false);
    prefix_.reserve(static_cast<size_t>(n));
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (tracked_ && tracked_count_ > static_cast<std::uint64_t>(tracked_cap_)) return;
    for (size_t i = 0; i < patterns_.size(); ++i)
      if (quantifiers_[i].exceeded(counts_[i])) return;
    search(visit);
  }

 private:
  template <typename Visit>
  void search(Visit& visit) {
    if (static_cast<int>(prefix_.size()) == n_) {
      for (size_t i = 0; i < patterns_.size(); ++i)
        if (!quantifiers_[i].holds(counts_[i])) return;
      visit(prefix_, tracked_count_);
      return;
    }
    const size_t items = patterns_.size();
    std::vector<std::uint64_t> added(items);
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<size_t>(v)]) continue;
      prefix_.push_back(v);
      bool ok = true;
      size_t done = 0;
      for (; done < items; ++done) {
        const Permutation& pat = *patterns_[done];
        added[done] = pat.empty() ? 0 : count_occurrences_ending_last(prefix_, pat);
        counts_[done] += added[done];
        if (quantifiers_[done].exceeded(counts_[done])) {
          ok = false;
          ++done;
          break;
        }
      }
      std::uint64_t tracked_added = 0;
      if (ok && tracked_ && !tracked_->empty()) {
        tracked_added = count_occurrences_ending_last(prefix_, *tracked_);
        tracked_count_ += tracked_added;
        if (tracked_count_ > static_cast<std::uint64_t>(tracked_cap_)) ok = false;
      }
      if (ok) {
        used_[static_cast<size_t>(v)] = true;
        search(visit);
        used_[static_cast<size_t>(v)] = false;
      }
      tracked_count_ -= tracked_added;
      for (size_t i = 0; i < done; ++i) counts_[i] -= added[i];
      prefix_.pop_back();
    }
  }

  int n_;
  const Permutation* tracked_;
  int tracked_cap_;
  std::vector<const Permutation*> patterns_;
  std::vector<Quantifier> quantifiers_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t tracked_count_ = 0;
  std::vector<bool> used_;
  std::vector<int> prefix_;
};

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": negative length");
  if (n > cap)
    throw ResourceLimit(std::string(what) + ": n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                        " (raise with PERMCHEB_MAX_N)");
}

}  // namespace

CountTable count_upto(const ConstraintSet& cs, int N, const Limits& limits) {
  check_cap(N, limits.max_count_n, "count_upto");
  CountTable table{cs, {}};
  for (int n = 0; n <= N; ++n) {
    std::uint64_t c = 0;
    Enumerator(cs, n, nullptr, 0).run([&](const std::vector<int>&, std::uint64_t) { ++c; });
    table.counts.push_back(c);
  }
  return table;
}

void for_each_matching(const ConstraintSet& cs, int n, const std::function<void(const Permutation&)>& visit,
                       const Limits& limits) {
  check_cap(n, limits.max_list_n, "list_matching");
  Enumerator(cs, n, nullptr, 0).run([&](const std::vector<int>& p, std::uint64_t) { visit(Permutation(p)); });
}

std::vector<Permutation> list_matching(const ConstraintSet& cs, int n, const Limits& limits) {
  std::vector<Permutation> out;
  for_each_matching(cs, n, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

std::vector<std::vector<std::uint64_t>> occurrence_profile(const ConstraintSet& base, const Permutation& tau, int r_max,
                                                           int N, const Limits& limits) {
  check_cap(N, limits.max_count_n, "occurrence_profile");
  if (r_max < 0) throw InvalidArgument("occurrence_profile: negative r_max");
  std::vector<std::vector<std::uint64_t>> table(static_cast<size_t>(r_max) + 1,
                                                std::vector<std::uint64_t>(static_cast<size_t>(N) + 1, 0));
  for (int n = 0; n <= N; ++n)
    Enumerator(base, n, &tau, r_max).run([&](const std::vector<int>&, std::uint64_t r) {
      ++table[static_cast<size_t>(r)][static_cast<size_t>(n)];
    });
  return table;
}

std::map<std::vector<int>, std::uint64_t> count_N_of_a(int p, NofAReading reading) {
  if (p < 4) throw InvalidArgument("count_N_of_a: p must be at least 4");
  const int len = reading == NofAReading::Consistent ? p - 2 : p;
  check_cap(len, Limits::from_env().max_count_n, "count_N_of_a");
  std::vector<int> v(static_cast<size_t>(len));
  std::iota(v.begin(), v.end(), 1);
  std::map<std::vector<int>, std::uint64_t> out;
  do {
    ++out[a_sequence(Permutation(v))];
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace permcheb
