#include "globforge/engine/derivation.hpp"

#include <algorithm>

#include "globforge/error.hpp"

namespace globforge::engine {

namespace {

struct Equation {
  std::string label;
  Term lhs, rhs;
};

bool established(const std::vector<Equation>& eqs, const Term& a, const Term& b) {
  return std::any_of(eqs.begin(), eqs.end(), [&](const Equation& e) {
    return (equal(e.lhs, a) && equal(e.rhs, b)) || (equal(e.lhs, b) && equal(e.rhs, a));
  });
}

struct Checker {
  const Derivation& d;
  GradeContext ctx;
  std::vector<Equation> eqs;
  std::vector<Term> admitted;
  ValidationReport report;

  explicit Checker(const Derivation& der) : d(der), ctx(der.context) {
    report.subject = der.name;
  }

  const Rule& resolve(const std::string& name, Rule& scratch) const {
    if (name.rfind("hyp:", 0) == 0) {
      for (const auto& h : d.hypotheses)
        if (h.name == name.substr(4)) return h;
    } else if (name.rfind("eq:", 0) == 0) {
      for (const auto& e : eqs)
        if (e.label == name.substr(3)) {
          scratch = Rule{name, "established equation " + e.label, e.lhs, e.rhs, {}, false, false};
          return scratch;
        }
    } else if (const Rule* r = find_rule(name)) {
      return *r;
    }
    throw Error(ErrorKind::UnresolvedIdentifier, "unknown rule '" + name + "'");
  }

  Term inverse_uniqueness(const Term& cur, const Step& st) const {
    auto meta_of = [&](const char* k) {
      auto it = st.subst.metas.find(k);
      if (it == st.subst.metas.end())
        throw Error(ErrorKind::NoMatch, std::string("inverse uniqueness needs ") + k);
      return it->second;
    };
    auto grade_of = [&](const char* k) {
      auto it = st.subst.grades.find(k);
      if (it == st.subst.grades.end())
        throw Error(ErrorKind::NoMatch, std::string("inverse uniqueness needs grade ") + k);
      return it->second;
    };
    Term alpha = meta_of("alpha");
    Grade m = grade_of("m"), p = grade_of("p");
    if (!is_strict(alpha->carrier))
      throw Error(ErrorKind::SideConditionViolated,
                  "inverse uniqueness needs a strict carrier, got " +
                      std::string(to_string(alpha->carrier)));
    for (const auto& c : {Condition{Grade("n"), Condition::Le, p},
                          Condition{p, Condition::Lt, m}})
      if (!ctx.entails(c))
        throw Error(ErrorKind::SideConditionViolated,
                    "inverse uniqueness: " + c.str() + " does not follow from the context");
    Term inv = rev(m, p, alpha);
    Term sub = subterm(cur, st.position);
    Term beta = sub, result = inv;
    if (st.reverse) {
      if (!equal(sub, inv))
        throw Error(ErrorKind::NoMatch, "expected " + print(inv) + ", found " + print(sub));
      beta = meta_of("beta");
      result = beta;
    }
    Term left = comp(m, p, beta, alpha), right = comp(m, p, alpha, beta);
    if (!established(eqs, left, one(p, m, src(m, p, alpha))))
      throw Error(ErrorKind::SideConditionViolated,
                  "no established equation " + print(left) + " = identity on source");
    if (!established(eqs, right, one(p, m, tgt(m, p, alpha))))
      throw Error(ErrorKind::SideConditionViolated,
                  "no established equation " + print(right) + " = identity on target");
    return replace_at(cur, st.position, result);
  }

  bool run_chain(const Chain& c) {
    Term cur = c.start;
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
      const Step& st = c.steps[k];
      std::string where = d.name + "/" + c.label + "/step " + std::to_string(k + 1);
      std::string citation = "inverse uniqueness";
      std::string rule_name = st.kind == StepKind::InverseUniqueness ? "inverse-uniqueness" : st.rule;
      Term next;
      try {
        if (st.kind == StepKind::InverseUniqueness) {
          next = inverse_uniqueness(cur, st);
        } else {
          Rule scratch;
          const Rule& r = resolve(st.rule, scratch);
          citation = r.citation;
          next = apply_step(cur, r, st.position, st.subst, st.reverse, ctx, &admitted);
        }
      } catch (const Error& e) {
        report.add("derivation.step", citation, {where},
                   rule_name + ": " + to_string(e.kind()) + ": " + e.what());
        return false;
      }
      if (!st.result || !equal(next, st.result)) {
        report.add("derivation.step", citation, {where},
                   rule_name + ": claimed " + (st.result ? print(st.result) : "nothing") +
                       " but the step gives " + print(next));
        return false;
      }
      cur = next;
    }
    eqs.push_back({c.label, c.start, cur});
    return true;
  }

  bool run_bracket(const BracketIntro& b) {
    std::string where = d.name + "/" + b.label;
    auto fail = [&](const std::string& why) {
      report.add("derivation.bracket", "bracket axioms", {where}, why);
      return false;
    };
    Term br;
    try {
      br = b.bracket_term();
    } catch (const Error& e) {
      return fail(e.what());
    }
    if (!established(eqs, pi(b.c1), pi(b.c0)))
      return fail("no established equation pi(" + print(b.c1) + ") = pi(" + print(b.c0) + ")");
    if (!(b.m == Grade(0))) {
      if (!ctx.entails(parse_condition("0<" + b.m.str())))
        return fail("grade " + b.m.str() + " is not known to be positive");
      Grade q = b.m - 1;
      if (!established(eqs, src(b.m, q, b.c1), src(b.m, q, b.c0)) ||
          !established(eqs, tgt(b.m, q, b.c1), tgt(b.m, q, b.c0)))
        return fail("parallelism of " + print(b.c1) + " and " + print(b.c0) +
                    " is not established");
    }
    admitted.push_back(br);
    return true;
  }
};

}  // namespace

Term BracketIntro::bracket_term() const { return bracket(m, c1, c0); }

const Chain& Derivation::conclusion() const {
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    if (const auto* c = std::get_if<Chain>(&*it)) return *c;
  throw Error(ErrorKind::NoMatch, "derivation " + name + " has no chain");
}

ValidationReport check_derivation(const Derivation& d) {
  Checker ch(d);
  if (!ch.ctx.consistent()) {
    ch.report.add("derivation.context", "grade assumptions", {d.name},
                  "grade assumptions are contradictory");
    return ch.report;
  }
  for (const auto& item : d.items) {
    bool ok = std::visit(
        [&](const auto& x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Chain>)
            return ch.run_chain(x);
          else
            return ch.run_bracket(x);
        },
        item);
    if (!ok) break;
  }
  return ch.report;
}

ValidationReport check_suite(const Suite& s) {
  ValidationReport r;
  r.subject = s.name;
  for (const auto& d : s.derivations) r.merge(check_derivation(d));
  return r;
}

const Suite* find_suite(std::string_view name) {
  for (const auto& s : builtin_suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace globforge::engine
