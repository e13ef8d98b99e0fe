#pragma once

// Machine-readable listing of every closed form the library evaluates, with
// its parameter ranges and one CLI invocation that reaches it.

#include <optional>
#include <string>
#include <vector>

#include "permcheb/closed_forms.hpp"

namespace permcheb {

struct CatalogParam {
  std::string name;
  std::string range;
};

struct CatalogEntry {
  /// Stable id; verify checks for this formula use the same id.
  std::string id;
  /// CLI family keyword ("pair", "G", "H", ...).
  std::string family;
  std::string statement;
  std::vector<CatalogParam> params;
  /// Arguments after "permcheb formula" that evaluate this formula.
  std::string cli;
};

/// Sorted by id.
const std::vector<CatalogEntry>& formula_catalog();
/// {"formulas": [{"id", "family", "statement", "params": {..}, "cli"}, ..]}
std::string catalog_json();
std::string catalog_text();

/// One formula invocation as the CLI spells it.
struct FormulaRequest {
  std::string family = "pair";
  std::optional<std::string> pattern;
  Base base = Base::P132;
  std::optional<int> k, m, l, r, p;
  /// For family G: a route name from G_routes ("identity.any_r", ...).
  std::optional<std::string> route;
};

/// Evaluates the request; id is the catalog id of the formula used. Throws
/// InvalidArgument for missing or unknown parameters and the closed-form
/// errors (UnsupportedPattern, OutOfStatedRange) otherwise.
Route evaluate_formula(const FormulaRequest& req);

}  // namespace permcheb
