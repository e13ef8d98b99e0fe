#pragma once

// Oracle-versus-formula checks grouped by family. Each check is one
// formula on one parameter set compared coefficientwise with brute-force
// counts (or, for pure identities, compared as canonical RatFuns).

#include <optional>
#include <string>
#include <vector>

#include "permcheb/exact.hpp"
#include "permcheb/oracle.hpp"

namespace permcheb {

enum class Tier { Proved, Experimental };
enum class TierFilter { Proved, Experimental, All };

std::string to_string(Tier t);
TierFilter parse_tier_filter(std::string_view text);

struct Mismatch {
  /// Coefficient index, or -1 when whole expressions were compared.
  int n = -1;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string id;
  std::string params;
  Tier tier = Tier::Proved;
  bool passed = false;
  std::optional<Mismatch> first_mismatch;
  double runtime_ms = 0;
};

struct VerifyOptions {
  std::string scope = "all";
  int N = 8;
  TierFilter tier = TierFilter::All;
  Limits limits = Limits::from_env();
};

/// "all" followed by the family scopes.
std::vector<std::string> verify_scopes();

/// Runs every check in the scope, sorted by (id, params). Throws
/// InvalidArgument for an unknown scope and ResourceLimit when N exceeds
/// the oracle caps.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

/// First index where the two series differ, comparing up to the shorter one.
std::optional<Mismatch> first_difference(const Series& expected, const Series& actual);

/// True when every proved-tier result passed.
bool proved_tier_passes(const std::vector<CheckResult>& results);

std::string report_json(const std::vector<CheckResult>& results, bool timings);
std::string report_csv(const std::vector<CheckResult>& results, bool timings);
std::string report_text(const std::vector<CheckResult>& results, bool timings);

}  // namespace permcheb
