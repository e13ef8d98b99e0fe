#include "permcheb/literal.hpp"

#include <charconv>

#include "permcheb/error.hpp"

namespace permcheb {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw InvalidArgument("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  size_t pos = 0;
  while (true) {
    const size_t comma = s.find(',', pos);
    out.push_back(parse_int(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos), what));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

PatternSpec parse_pattern(std::string_view text) {
  if (starts_with(text, "id:")) return PatternSpec::identity(parse_int(text.substr(3), "identity length"));
  if (starts_with(text, "tl:")) {
    auto v = parse_int_list(text.substr(3), "two-layered parameters");
    if (v.size() != 2) throw InvalidArgument("tl:k,m takes exactly two numbers");
    return PatternSpec::two_layered(v[0], v[1]);
  }
  if (starts_with(text, "layered:")) return PatternSpec::layered(parse_int_list(text.substr(8), "layer bounds"));
  if (starts_with(text, "Lp:")) throw InvalidArgument("Lp:p denotes a set of patterns, not a single pattern");
  if (text.empty()) throw InvalidArgument("empty pattern literal");
  return PatternSpec(Permutation::parse(text));
}

std::vector<PatternSpec> parse_pattern_set(std::string_view text) {
  if (starts_with(text, "Lp:")) {
    std::vector<PatternSpec> out;
    for (auto& p : Lp_set(parse_int(text.substr(3), "L_p length"))) out.emplace_back(std::move(p));
    return out;
  }
  return {parse_pattern(text)};
}

ConstraintSet parse_constraint(std::string_view token) {
  ConstraintSet cs;
  auto add_all = [&](std::string_view pat, Quantifier q) {
    auto set = parse_pattern_set(pat);
    if (set.size() > 1 && q != Quantifier::avoid())
      throw InvalidArgument("pattern sets can only be avoided");
    for (auto& p : set) cs.add(std::move(p), q);
  };
  if (starts_with(token, "avoid:")) {
    add_all(token.substr(6), Quantifier::avoid());
  } else if (starts_with(token, "exactly:") || starts_with(token, "atleast:")) {
    const bool exact = token[0] == 'e';
    const auto rest = token.substr(8);
    const size_t colon = rest.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("expected <kind>:<r>:<pattern>");
    const int r = parse_int(rest.substr(0, colon), "occurrence count");
    add_all(rest.substr(colon + 1), exact ? Quantifier::exactly(r) : Quantifier::at_least(r));
  } else {
    add_all(token, Quantifier::avoid());
  }
  return cs;
}

ConstraintSet parse_constraints(const std::vector<std::string>& tokens) {
  ConstraintSet cs;
  for (const auto& t : tokens) {
    const ConstraintSet one = parse_constraint(t);
    for (const auto& item : one.items()) cs.add(item.pattern, item.quantifier);
  }
  return cs;
}

}  // namespace permcheb
