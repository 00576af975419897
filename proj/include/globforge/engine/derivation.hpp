#pragma once

#include <string>
#include <variant>
#include <vector>

#include "globforge/engine/rules.hpp"
#include "globforge/engine/term.hpp"
#include "globforge/report.hpp"

namespace globforge::engine {

enum class StepKind { Rewrite, InverseUniqueness };

/// One rewrite. `rule` names a library rule, a hypothesis ("hyp:<name>") or
/// an equation established earlier in the derivation ("eq:<label>").
/// InverseUniqueness replaces β by j(m,p,α) given the metas "alpha" (and
/// "beta" when reversed) and grades m, p in `subst`. `result` is the term
/// claimed after the step.
struct Step {
  StepKind kind = StepKind::Rewrite;
  std::string rule;
  Path position;
  Subst subst;
  bool reverse = false;
  Term result;
};

/// Establishes start = last result under its label.
struct Chain {
  std::string label;
  Term start;
  std::vector<Step> steps;

  Term end() const { return steps.empty() ? start : steps.back().result; }
};

/// Admits bracket(m, c1, c0). Needs established equations
/// pi(c1) = pi(c0) and, above grade 0, s(c1) = s(c0) and t(c1) = t(c0).
struct BracketIntro {
  std::string label;
  Grade m;
  Term c1, c0;

  Term bracket_term() const;
};

using Item = std::variant<Chain, BracketIntro>;

struct Derivation {
  std::string name;
  std::vector<Condition> context;
  std::vector<Rule> hypotheses;
  std::vector<Item> items;

  /// The equation of the last chain.
  const Chain& conclusion() const;
};

struct Suite {
  std::string name;
  std::string description;
  std::vector<Derivation> derivations;
};

/// Replays every item. Empty iff each step reproduces its claimed result;
/// otherwise one violation naming the first bad step as
/// "<derivation>/<label>/step <k>" (k counts from 1).
ValidationReport check_derivation(const Derivation& d);
ValidationReport check_suite(const Suite& s);

const std::vector<Suite>& builtin_suites();
const Suite* find_suite(std::string_view name);

}  // namespace globforge::engine
