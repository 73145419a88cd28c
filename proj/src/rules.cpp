#include "phrasal/rules.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "phrasal/errors.hpp"

namespace phrasal {

const char* comparator_symbol(Comparator cmp) {
  switch (cmp) {
    case Comparator::Greater:
      return ">";
    case Comparator::Less:
      return "<";
    case Comparator::GreaterEq:
      return ">=";
    case Comparator::LessEq:
      return "<=";
    case Comparator::Equal:
      return "=";
  }
  return "?";
}

bool condition_holds(const Condition& condition, const FeatureMap& features) {
  auto it = features.find(condition.feature);
  if (it == features.end()) return false;
  const double v = it->second;
  switch (condition.cmp) {
    case Comparator::Greater:
      return v > condition.threshold;
    case Comparator::Less:
      return v < condition.threshold;
    case Comparator::GreaterEq:
      return v >= condition.threshold;
    case Comparator::LessEq:
      return v <= condition.threshold;
    case Comparator::Equal:
      return v == condition.threshold;
  }
  return false;
}

bool rule_matches(const Rule& rule, const FeatureMap& features) {
  for (const Condition& condition : rule.conditions) {
    if (!condition_holds(condition, features)) return false;
  }
  return true;
}

const std::string& apply_rules(const RuleSet& rules,
                               const FeatureMap& features) {
  for (const Rule& rule : rules.rules) {
    if (rule_matches(rule, features)) return rule.outcome;
  }
  return rules.default_outcome;
}

namespace {

std::string format_threshold(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Condition parse_condition(const std::string& text, long line_no) {
  static const std::pair<const char*, Comparator> ops[] = {
      {">=", Comparator::GreaterEq},
      {"<=", Comparator::LessEq},
      {">", Comparator::Greater},
      {"<", Comparator::Less},
      {"=", Comparator::Equal},
  };
  for (const auto& [sym, cmp] : ops) {
    auto pos = text.find(sym);
    if (pos == std::string::npos) continue;
    std::string feature = trim(text.substr(0, pos));
    std::string number = trim(text.substr(pos + std::string(sym).size()));
    if (feature.empty() || number.empty()) break;
    try {
      std::size_t used = 0;
      double threshold = std::stod(number, &used);
      if (used != number.size()) break;
      return Condition{feature, cmp, threshold};
    } catch (const std::exception&) {
      break;
    }
  }
  throw ParseError("bad condition '" + text + "'", line_no);
}

}  // namespace

std::string serialize_rules(const RuleSet& rules) {
  std::ostringstream out;
  for (const Rule& rule : rules.rules) {
    out << "IF ";
    for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
      if (i > 0) out << " AND ";
      const Condition& c = rule.conditions[i];
      out << c.feature << comparator_symbol(c.cmp)
          << format_threshold(c.threshold);
    }
    out << " THEN " << rule.outcome << '\n';
  }
  out << "DEFAULT " << rules.default_outcome << '\n';
  return out.str();
}

RuleSet parse_rules(std::istream& in) {
  RuleSet rules;
  bool saw_default = false;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (saw_default) throw ParseError("rule after DEFAULT line", line_no);
    if (line.rfind("DEFAULT ", 0) == 0) {
      rules.default_outcome = trim(line.substr(8));
      if (rules.default_outcome.empty()) {
        throw ParseError("missing default outcome", line_no);
      }
      saw_default = true;
      continue;
    }
    if (line.rfind("IF ", 0) != 0) {
      throw ParseError("expected IF or DEFAULT", line_no);
    }
    auto then_pos = line.find(" THEN ");
    if (then_pos == std::string::npos) {
      throw ParseError("missing THEN", line_no);
    }
    Rule rule;
    rule.outcome = trim(line.substr(then_pos + 6));
    if (rule.outcome.empty()) throw ParseError("missing outcome", line_no);
    std::string body = line.substr(3, then_pos - 3);
    std::size_t pos = 0;
    while (true) {
      auto and_pos = body.find(" AND ", pos);
      std::string part = and_pos == std::string::npos
                             ? body.substr(pos)
                             : body.substr(pos, and_pos - pos);
      rule.conditions.push_back(parse_condition(trim(part), line_no));
      if (and_pos == std::string::npos) break;
      pos = and_pos + 5;
    }
    rules.rules.push_back(std::move(rule));
  }
  if (!saw_default) throw ParseError("missing DEFAULT line", line_no + 1);
  return rules;
}

RuleSet parse_rules_text(const std::string& text) {
  std::istringstream in(text);
  return parse_rules(in);
}

RuleSet load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return parse_rules(in);
}

void save_rules(const RuleSet& rules, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path);
  out << serialize_rules(rules);
}

RuleSet run1_rules() {
  RuleSet rules;
  rules.rules.push_back(
      Rule{{{kFeatureSn, Comparator::Greater, 0.61}}, kPositive});
  rules.default_outcome = kNegative;
  return rules;
}

RuleSet run2_rules() {
  // The middle rule pins the outcome whenever SN is present, so the DS
  // fallback is only consulted on network misses.
  RuleSet rules;
  rules.rules.push_back(
      Rule{{{kFeatureSn, Comparator::Greater, 0.61}}, kPositive});
  rules.rules.push_back(
      Rule{{{kFeatureSn, Comparator::LessEq, 0.61}}, kNegative});
  rules.rules.push_back(
      Rule{{{kFeatureDs, Comparator::Greater, 0.40}}, kPositive});
  rules.default_outcome = kNegative;
  return rules;
}

RuleSet run3_rules() {
  RuleSet rules;
  rules.rules.push_back(
      Rule{{{kFeatureSn, Comparator::Greater, 0.61}}, kPositive});
  rules.rules.push_back(
      Rule{{{kFeatureDs, Comparator::Greater, 0.40}}, kPositive});
  rules.rules.push_back(Rule{{{kFeatureSn, Comparator::Greater, 0.53},
                              {kFeatureDs, Comparator::Greater, 0.31}},
                             kPositive});
  rules.default_outcome = kNegative;
  return rules;
}

}  // namespace phrasal
