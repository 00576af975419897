#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "globforge/engine/term.hpp"

namespace globforge::engine {

/// `lhs rel rhs` over affine grades.
struct Condition {
  enum Rel { Le, Lt, Eq };
  Grade lhs;
  Rel rel = Le;
  Grade rhs;

  std::string str() const;
};

/// Parses "n<=p", "p<m-1", "m=2".
Condition parse_condition(std::string_view s);

/// Difference constraints over grade symbols. Every symbol is implicitly
/// non-negative.
class GradeContext {
 public:
  GradeContext() = default;
  explicit GradeContext(const std::vector<Condition>& assumptions);

  void assume(const Condition& c);
  bool consistent() const;
  bool entails(const Condition& c) const;

 private:
  std::vector<Condition> assumptions_;
};

struct Subst {
  std::map<std::string, Grade> grades;
  std::map<std::string, Term> metas;
  std::map<std::string, std::string> names;  // map-name metas
  std::optional<Carrier> carrier;            // the rule's carrier variable
};

struct Rule {
  std::string name;
  std::string citation;
  Term lhs, rhs;
  std::vector<Condition> conditions;
  bool strict_carrier = false;  // carrier variable ranges over C, Cp only
  bool needs_bracket = false;   // matched bracket must be admitted
};

/// Builds a rule from textual patterns; metas and grade names are free.
Rule make_rule(std::string name, std::string citation, std::string_view lhs,
               std::string_view rhs, std::vector<std::string> conditions = {},
               bool strict_carrier = false, const VarTable& vars = {});

const std::vector<Rule>& rule_library();
const Rule* find_rule(std::string_view name);

using Path = std::vector<std::size_t>;

std::string path_str(const Path& p);
/// Throws Error(NoMatch) for a path leaving the term.
Term subterm(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, const Term& with);

/// Extends s so that pattern instantiates to t.
bool match(const Term& pattern, const Term& t, Subst& s, bool strict_carrier);
/// Throws Error(NoMatch) if a meta or grade of the pattern is unbound.
Term instantiate(const Term& pattern, const Subst& s);
Grade instantiate(const Grade& g, const Subst& s);

/// Rewrites the subterm at `position` with `rule` (rhs to lhs when
/// `reverse`). `admitted` lists the bracket terms usable by bracket rules.
/// Throws Error(NoMatch) or Error(SideConditionViolated).
Term apply_step(const Term& t, const Rule& rule, const Path& position,
                const Subst& subst, bool reverse, const GradeContext& ctx,
                const std::vector<Term>* admitted = nullptr);

}  // namespace globforge::engine
