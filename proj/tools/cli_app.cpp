#include "cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permcheb/catalog.hpp"
#include "permcheb/cfrac.hpp"
#include "permcheb/closed_forms.hpp"
#include "permcheb/dyck.hpp"
#include "permcheb/error.hpp"
#include "permcheb/literal.hpp"
#include "permcheb/oracle.hpp"
#include "permcheb/transfer.hpp"
#include "permcheb/verify.hpp"

namespace permcheb::cli {

namespace {

constexpr int kHardCap = 16;

const std::set<std::string> kFamilies = {"R",   "pair", "G",  "triple", "Gtriple", "H",        "phi",
                                         "Lp",  "Lp_literal", "L4id", "L4tl", "recursive"};

Limits limits_for(int n, bool unsafe) {
  Limits lim = Limits::from_env();
  if (unsafe) {
    if (n > kHardCap) throw ResourceLimit("n = " + std::to_string(n) + " exceeds the hard cap " + std::to_string(kHardCap));
    lim.max_count_n = std::max(lim.max_count_n, n);
    lim.max_list_n = std::max(lim.max_list_n, n);
  }
  return lim;
}

std::string series_text(const Series& s) { return s.to_string(); }

nlohmann::json series_json(const Series& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coefficients()) arr.push_back(to_string(c));
  return arr;
}

struct FormulaArgs {
  std::vector<std::string> words;
  std::string pattern;
  std::string base = "132";
  std::string route;
  int k = 0, m = 0, l = 0, r = 0, p = 0;
  CLI::Option *o_pattern = nullptr, *o_route = nullptr, *o_k = nullptr, *o_m = nullptr, *o_l = nullptr,
              *o_r = nullptr, *o_p = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("args", words, "[family] [pattern]; family defaults to pair");
    o_pattern = sub->add_option("--pattern", pattern, "pattern literal");
    sub->add_option("--base", base, "base pattern")->check(CLI::IsMember({"132", "321"}));
    o_route = sub->add_option("--route", route, "occurrence formula route for family G");
    o_k = sub->add_option("-k", k);
    o_m = sub->add_option("-m", m);
    o_l = sub->add_option("-l", l);
    o_r = sub->add_option("-r", r, "number of occurrences");
    o_p = sub->add_option("-p", p, "L_p length");
  }

  FormulaRequest request() const {
    FormulaRequest req;
    std::vector<std::string> rest = words;
    if (!rest.empty() && kFamilies.count(rest.front())) {
      req.family = rest.front();
      rest.erase(rest.begin());
    }
    if (rest.size() > 1) throw InvalidArgument("unexpected argument '" + rest[1] + "'");
    if (!rest.empty()) req.pattern = rest.front();
    if (*o_pattern) {
      if (req.pattern) throw InvalidArgument("pattern given twice");
      req.pattern = pattern;
    }
    req.base = parse_base(base);
    if (*o_route) req.route = route;
    if (*o_k) req.k = k;
    if (*o_m) req.m = m;
    if (*o_l) req.l = l;
    if (*o_r) req.r = r;
    if (*o_p) req.p = p;
    return req;
  }
};

bool looks_like_path(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == 'U' || c == 'D' || c == 'u' || c == 'd'; });
}

TransferSystem builtin_system(const std::string& name, std::optional<GeneratingTree>& tree) {
  if (name == "binary") {
    tree = binary_tree();
    return tree_to_system(*tree);
  }
  if (name == "fibonacci") {
    tree = fibonacci_tree();
    return tree_to_system(*tree);
  }
  auto number = [&](size_t prefix) {
    const std::string digits = name.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
      throw InvalidArgument("unknown system '" + name + "'");
    return std::stoi(digits);
  };
  if (name.rfind("A", 0) == 0) {
    tree = Ak_tree(number(1));
    return tree_to_system(*tree);
  }
  if (name.rfind("strip", 0) == 0) return dyck_strip_system(number(5));
  throw InvalidArgument("unknown system '" + name + "' (binary, fibonacci, A<k>, strip<h>)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of restricted permutations and Chebyshev closed forms", "permcheb"};
  app.require_subcommand(1);

  std::string format;
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force counts of permutations satisfying constraints");
  std::vector<std::string> constraints;
  int N = 8;
  int list_n = -1;
  bool unsafe = false;
  oracle->add_option("constraints", constraints, "avoid:<pat>, exactly:<r>:<pat>, atleast:<r>:<pat> or <pat>")->required();
  oracle->add_option("-N", N, "largest n");
  oracle->add_option("--list", list_n, "list the members of S_n instead of counting");
  oracle->add_flag("--unsafe-N", unsafe, "allow n above the default caps");
  add_format(oracle, {"text", "json", "csv"});

  // formula / series
  auto* formula = app.add_subcommand("formula", "closed-form generating function");
  FormulaArgs fargs;
  fargs.attach(formula);
  add_format(formula, {"text", "json"});
  auto* series = app.add_subcommand("series", "coefficients of a closed form");
  FormulaArgs sargs;
  sargs.attach(series);
  series->add_option("-N", N, "order");
  add_format(series, {"text", "json"});

  // verify
  auto* verify = app.add_subcommand("verify", "compare closed forms with brute-force counts");
  std::string scope = "all", tier = "all";
  bool timings = false;
  verify->add_option("--scope", scope, "check family")->check(CLI::IsMember(verify_scopes()));
  verify->add_option("-N", N, "largest n");
  verify->add_option("--tier", tier, "which checks to report")->check(CLI::IsMember({"proved", "experimental", "all"}));
  verify->add_flag("--timings", timings, "include runtimes");
  verify->add_flag("--unsafe-N", unsafe, "allow N above the default caps");
  add_format(verify, {"text", "json", "csv"});

  // bijection
  auto* bij = app.add_subcommand("bijection", "map a 132-avoider to its Dyck path or back");
  std::string bij_input;
  bij->add_option("input", bij_input, "permutation (\"534261\") or Dyck path (\"UUDD\")")->required();
  add_format(bij, {"text", "json"});

  // transfer
  auto* transfer = app.add_subcommand("transfer", "transfer-matrix walk counts");
  std::string system_name, rules_path;
  int length = 10;
  transfer->add_option("system", system_name, "binary, fibonacci, A<k> or strip<h>");
  transfer->add_option("--rules", rules_path, "generating-tree rule file")->check(CLI::ExistingFile);
  transfer->add_option("-N", length, "longest walk");
  add_format(transfer, {"text", "json"});

  // cfrac
  auto* cfrac = app.add_subcommand("cfrac", "continued-fraction expansion by occurrences of [k]");
  int cf_k = 3, cf_R = 3, depth = -1;
  bool rwz = false;
  cfrac->add_option("-k", cf_k, "pattern length");
  cfrac->add_option("-N", N, "x-order");
  cfrac->add_option("-R", cf_R, "z-order");
  cfrac->add_option("--depth", depth, "truncation depth (defaults to N)");
  cfrac->add_flag("--rwz", rwz, "solve the trivariate functional equation and set y = 1");
  add_format(cfrac, {"text", "json", "csv"});

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list every closed form with its ranges");
  add_format(catalog, {"json", "text"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (format.empty()) format = *catalog ? "json" : "text";

  try {
    if (*oracle) {
      const ConstraintSet cs = parse_constraints(constraints);
      if (list_n >= 0) {
        const auto perms = list_matching(cs, list_n, limits_for(list_n, unsafe));
        if (format == "json") {
          nlohmann::json j;
          j["constraint"] = cs.to_literal();
          j["n"] = list_n;
          auto arr = nlohmann::json::array();
          for (const auto& p : perms) arr.push_back(p.to_string());
          j["permutations"] = arr;
          out << j.dump() << '\n';
        } else {
          if (format == "csv") out << "permutation\n";
          for (const auto& p : perms) out << p.to_string() << '\n';
        }
        return kOk;
      }
      const CountTable t = count_upto(cs, N, limits_for(N, unsafe));
      if (format == "json")
        out << t.to_json() << '\n';
      else if (format == "csv")
        out << t.to_csv();
      else
        out << series_text(t.series()) << '\n';
      return kOk;
    }
    if (*formula || *series) {
      const bool is_series = series->parsed();
      const Route value = evaluate_formula((is_series ? sargs : fargs).request());
      if (format == "json") {
        nlohmann::json j;
        j["formula"] = value.name;
        j["gf"] = value.value.to_string();
        if (is_series) j["series"] = series_json(series_of(value.value, N));
        out << j.dump() << '\n';
      } else {
        out << (is_series ? series_text(series_of(value.value, N)) : value.value.to_string()) << '\n';
      }
      return kOk;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.scope = scope;
      opts.N = N;
      opts.tier = parse_tier_filter(tier);
      opts.limits = limits_for(N, unsafe);
      const auto results = run_verify(opts);
      if (format == "json")
        out << report_json(results, timings) << '\n';
      else if (format == "csv")
        out << report_csv(results, timings);
      else
        out << report_text(results, timings);
      return proved_tier_passes(results) ? kOk : kVerificationFailed;
    }
    if (*bij) {
      Permutation pi;
      DyckPath path;
      if (looks_like_path(bij_input)) {
        path = DyckPath::parse(bij_input);
        pi = phi_inverse(path);
      } else {
        pi = Permutation::parse(bij_input);
        path = phi(pi);
      }
      const int h = max_height(path);
      const int lis = longest_increasing_subsequence(pi.values());
      if (format == "json") {
        nlohmann::json j;
        j["permutation"] = pi.to_string();
        j["path"] = path.to_string();
        j["max_height"] = h;
        j["lis"] = lis;
        out << j.dump() << '\n';
      } else {
        out << pi.to_string() << " <-> " << path.to_string() << " (max height " << h << ", LIS " << lis << ")\n";
      }
      return kOk;
    }
    if (*transfer) {
      if (length < 0) throw InvalidArgument("walk length must be nonnegative");
      std::optional<GeneratingTree> tree;
      TransferSystem sys;
      if (!rules_path.empty()) {
        if (!system_name.empty()) throw InvalidArgument("give either a builtin system or --rules, not both");
        std::ifstream in(rules_path);
        std::stringstream buf;
        buf << in.rdbuf();
        tree = GeneratingTree::parse(buf.str());
        sys = tree_to_system(*tree);
      } else {
        if (system_name.empty()) throw InvalidArgument("transfer needs a system name or --rules");
        sys = builtin_system(system_name, tree);
      }
      const RatFun closed = walk_gf(sys, sys.start, sys.start);
      const Series closed_s = closed_walk_series(sys, sys.start, length);
      const Series open_s = open_walk_series(sys, sys.start, length);
      const Poly det = transfer_determinant(sys);
      if (format == "json") {
        nlohmann::json j;
        j["labels"] = sys.labels;
        j["matrix"] = sys.matrix;
        j["start"] = sys.labels[static_cast<size_t>(sys.start)];
        j["determinant"] = det.to_string();
        j["closed_walk_gf"] = closed.to_string();
        j["closed_walks"] = series_json(closed_s);
        j["open_walks"] = series_json(open_s);
        if (tree) j["levels"] = series_json(level_counts(*tree, length));
        out << j.dump() << '\n';
      } else {
        out << "vertices: ";
        for (size_t i = 0; i < sys.labels.size(); ++i) out << (i ? " " : "") << sys.labels[i];
        out << "\nstart: " << sys.labels[static_cast<size_t>(sys.start)] << "\n";
        out << "det(I - xA): " << det.to_string() << "\n";
        out << "closed walk gf: " << closed.to_string() << "\n";
        out << "closed walks: " << series_text(closed_s) << "\n";
        out << "open walks: " << series_text(open_s) << "\n";
        if (tree) out << "levels: " << series_text(level_counts(*tree, length)) << "\n";
      }
      return kOk;
    }
    if (*cfrac) {
      const BiSeries b = rwz ? rwz_triseries(N).at_y_one() : cf_biseries(CFSpec{cf_k, depth < 0 ? N : depth, N, cf_R});
      if (format == "json") {
        out << biseries_json(b) << '\n';
      } else if (format == "csv") {
        out << biseries_csv(b);
      } else {
        for (int r = 0; r <= b.z_order(); ++r) out << "r=" << r << ": " << series_text(b.z_row(r)) << '\n';
      }
      return kOk;
    }
    if (*catalog) {
      out << (format == "text" ? catalog_text() : catalog_json() + "\n");
      return kOk;
    }
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedPattern& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfStatedRange& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace permcheb::cli
