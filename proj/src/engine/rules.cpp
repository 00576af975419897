#include "globforge/engine/rules.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "globforge/error.hpp"

namespace globforge::engine {

namespace {

[[noreturn]] void no_match(const std::string& msg) {
  throw Error(ErrorKind::NoMatch, msg);
}

bool bind_carrier(Carrier pattern, Carrier actual, Subst& s, bool strict) {
  if (pattern != Carrier::Var) return pattern == actual;
  if (s.carrier) return *s.carrier == actual;
  if (strict && !is_strict(actual)) return false;
  s.carrier = actual;
  return true;
}

bool unify(const Grade& pattern, const Grade& actual, Subst& s) {
  if (pattern.is_constant()) return pattern == actual;
  auto it = s.grades.find(pattern.var);
  if (it != s.grades.end()) return it->second + pattern.offset == actual;
  s.grades.emplace(pattern.var, actual - pattern.offset);
  return true;
}

bool uses_g1(Op op) {
  return op == Op::Src || op == Op::Tgt || op == Op::Rev || op == Op::One ||
         op == Op::Comp || op == Op::Bracket;
}

bool uses_g2(Op op) { return uses_g1(op) && op != Op::Bracket; }

// Symbolic substitution: unbound names stay as context symbols.
Grade substitute(const Grade& g, const Subst& s) {
  if (g.is_constant()) return g;
  auto it = s.grades.find(g.var);
  return it == s.grades.end() ? g : it->second + g.offset;
}

void collect_brackets(const Term& pattern, const Term& t, std::vector<Term>& out) {
  if (pattern->op == Op::Meta || pattern->op == Op::Var) return;
  if (pattern->op == Op::Bracket) out.push_back(t);
  for (std::size_t i = 0; i < pattern->kids.size(); ++i)
    collect_brackets(pattern->kids[i], t->kids[i], out);
}

}  // namespace

std::string Condition::str() const {
  const char* r = rel == Le ? "<=" : rel == Lt ? "<" : "=";
  return lhs.str() + r + rhs.str();
}

Condition parse_condition(std::string_view s) {
  struct Pat {
    const char* tok;
    Condition::Rel rel;
    bool swap;
  };
  static const Pat pats[] = {{"<=", Condition::Le, false},
                             {">=", Condition::Le, true},
                             {"<", Condition::Lt, false},
                             {">", Condition::Lt, true},
                             {"=", Condition::Eq, false}};
  for (const auto& p : pats) {
    auto at = s.find(p.tok);
    if (at == std::string_view::npos) continue;
    Grade a = parse_grade(s.substr(0, at));
    Grade b = parse_grade(s.substr(at + std::string_view(p.tok).size()));
    if (p.swap) std::swap(a, b);
    return Condition{a, p.rel, b};
  }
  throw Error(ErrorKind::ParseError, "bad condition '" + std::string(s) + "'");
}

GradeContext::GradeContext(const std::vector<Condition>& assumptions)
    : assumptions_(assumptions) {}

void GradeContext::assume(const Condition& c) { assumptions_.push_back(c); }

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

// dist[b][a] bounds a - b from above.
struct Closure {
  std::vector<std::string> syms;
  std::vector<std::vector<long>> dist;
  bool consistent = true;

  std::size_t id(const std::string& v) const {
    return std::find(syms.begin(), syms.end(), v) - syms.begin();
  }
};

// a - b <= k as an edge b -> a.
void add_le(Closure& c, const Grade& a, const Grade& b) {
  auto i = c.id(b.var), j = c.id(a.var);
  c.dist[i][j] = std::min(c.dist[i][j], b.offset - a.offset);
}

void add_condition(Closure& c, const Condition& k) {
  switch (k.rel) {
    case Condition::Le: add_le(c, k.lhs, k.rhs); break;
    case Condition::Lt: add_le(c, k.lhs + 1, k.rhs); break;
    case Condition::Eq:
      add_le(c, k.lhs, k.rhs);
      add_le(c, k.rhs, k.lhs);
      break;
  }
}

Closure close(const std::vector<Condition>& assumptions, const Condition* query) {
  Closure c;
  std::set<std::string> names{""};
  auto note = [&](const Condition& k) {
    names.insert(k.lhs.var);
    names.insert(k.rhs.var);
  };
  for (const auto& k : assumptions) note(k);
  if (query) note(*query);
  c.syms.assign(names.begin(), names.end());
  std::size_t n = c.syms.size();
  c.dist.assign(n, std::vector<long>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) c.dist[i][i] = 0;
  for (const auto& v : c.syms)
    if (!v.empty()) add_le(c, Grade(0), Grade(v));
  for (const auto& k : assumptions) add_condition(c, k);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (c.dist[i][k] >= kInf) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (c.dist[k][j] < kInf)
          c.dist[i][j] = std::min(c.dist[i][j], c.dist[i][k] + c.dist[k][j]);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (c.dist[i][i] < 0) c.consistent = false;
  return c;
}

bool holds_le(const Closure& c, const Grade& a, const Grade& b) {
  return c.dist[c.id(b.var)][c.id(a.var)] <= b.offset - a.offset;
}

}  // namespace

bool GradeContext::consistent() const { return close(assumptions_, nullptr).consistent; }

bool GradeContext::entails(const Condition& k) const {
  Closure c = close(assumptions_, &k);
  if (!c.consistent) return false;
  switch (k.rel) {
    case Condition::Le: return holds_le(c, k.lhs, k.rhs);
    case Condition::Lt: return holds_le(c, k.lhs + 1, k.rhs);
    case Condition::Eq: return holds_le(c, k.lhs, k.rhs) && holds_le(c, k.rhs, k.lhs);
  }
  return false;
}

Rule make_rule(std::string name, std::string citation, std::string_view lhs,
               std::string_view rhs, std::vector<std::string> conditions,
               bool strict_carrier, const VarTable& vars) {
  Rule r;
  r.name = std::move(name);
  r.citation = std::move(citation);
  r.lhs = parse_term(lhs, vars);
  r.rhs = parse_term(rhs, vars);
  for (const auto& c : conditions) r.conditions.push_back(parse_condition(c));
  r.strict_carrier = strict_carrier;
  std::vector<Term> found;
  collect_brackets(r.lhs, r.lhs, found);
  r.needs_bracket = std::any_of(found.begin(), found.end(), [](const Term& b) {
    return !equal(b->kids[0], b->kids[1]);
  });
  return r;
}

const std::vector<Rule>& rule_library() {
  static const std::vector<Rule> rules = [] {
    const std::string rb = "reversor boundary axioms";
    const std::string gs = "globular set identities";
    const std::string pos = "positional axioms";
    const std::string rf = "reflexor axioms";
    const std::string br = "bracket axioms";
    const std::string inv = "inverse laws";
    const std::string cat = "strict category axioms";
    const std::string pr = "projection preserves operations";
    const std::string al = "algebra map preserves operations";
    const std::string ops = "induced algebra operations";
    const std::string fun = "strict functor axioms";
    std::vector<Rule> r;
    auto add = [&](const char* n, const std::string& cite, const char* l,
                   const char* rhs, std::vector<std::string> cond = {},
                   bool strict = false) {
      r.push_back(make_rule(n, cite, l, rhs, std::move(cond), strict));
    };

    add("rev-swap-src", rb, "s(m,p,j(m,p,?x))", "t(m,p,?x)", {"n<=p", "p<m"});
    add("rev-swap-tgt", rb, "t(m,p,j(m,p,?x))", "s(m,p,?x)", {"n<=p", "p<m"});
    add("rev-boundary-commute-src", rb, "s(m,q,j(m,p,?x))", "j(q,p,s(m,q,?x))",
        {"n<=p", "p<q", "q<m"});
    add("rev-boundary-commute-tgt", rb, "t(m,q,j(m,p,?x))", "j(q,p,t(m,q,?x))",
        {"n<=p", "p<q", "q<m"});
    add("globular-ss", gs, "s(q,r,t(m,q,?x))", "s(q,r,s(m,q,?x))", {"r<q", "q<m"});
    add("globular-tt", gs, "t(q,r,s(m,q,?x))", "t(q,r,t(m,q,?x))", {"r<q", "q<m"});
    add("boundary-compose-src", gs, "s(q,r,s(m,q,?x))", "s(m,r,?x)", {"r<q", "q<m"});
    add("boundary-compose-tgt", gs, "t(q,r,t(m,q,?x))", "t(m,r,?x)", {"r<q", "q<m"});

    add("pos-src-at", pos, "s(m,p,comp(m,p,?y,?x))", "s(m,p,?x)", {"p<m"});
    add("pos-tgt-at", pos, "t(m,p,comp(m,p,?y,?x))", "t(m,p,?y)", {"p<m"});
    add("pos-src-above", pos, "s(m,q,comp(m,p,?y,?x))",
        "comp(q,p,s(m,q,?y),s(m,q,?x))", {"p<q", "q<m"});
    add("pos-tgt-above", pos, "t(m,q,comp(m,p,?y,?x))",
        "comp(q,p,t(m,q,?y),t(m,q,?x))", {"p<q", "q<m"});
    add("pos-src-below", pos, "s(m,q,comp(m,p,?y,?x))", "s(m,q,?x)", {"q<p", "p<m"});
    add("pos-tgt-below", pos, "t(m,q,comp(m,p,?y,?x))", "t(m,q,?x)", {"q<p", "p<m"});

    add("refl-src", rf, "s(m,p,one(p,m,?x@p))", "?x@p", {"p<m"});
    add("refl-tgt", rf, "t(m,p,one(p,m,?x@p))", "?x@p", {"p<m"});
    add("refl-src-above", rf, "s(m,q,one(p,m,?x@p))", "one(p,q,?x@p)", {"p<q", "q<m"});
    add("refl-tgt-above", rf, "t(m,q,one(p,m,?x@p))", "one(p,q,?x@p)", {"p<q", "q<m"});
    add("refl-src-below", rf, "s(m,q,one(p,m,?x@p))", "s(p,q,?x@p)", {"q<p", "p<m"});
    add("refl-tgt-below", rf, "t(m,q,one(p,m,?x@p))", "t(p,q,?x@p)", {"q<p", "p<m"});
    add("refl-compose", rf, "one(q,m,one(p,q,?x@p))", "one(p,m,?x@p)", {"p<q", "q<m"});

    add("bracket-src", br, "s(m+1,m,bracket(m,?c1:M,?c0:M))", "?c0:M");
    add("bracket-tgt", br, "t(m+1,m,bracket(m,?c1:M,?c0:M))", "?c1:M");
    add("bracket-pi", br, "pi(bracket(m,?c1:M,?c0:M))", "one(m,m+1,pi(?c1:M))");
    add("bracket-diagonal", br, "bracket(m,?c:M,?c:M)", "one(m,m+1,?c:M)");

    add("inverse-right", inv, "comp(m,p,?x,j(m,p,?x))", "one(p,m,t(m,p,?x))",
        {"n<=p", "p<m"}, true);
    add("inverse-left", inv, "comp(m,p,j(m,p,?x),?x)", "one(p,m,s(m,p,?x))",
        {"n<=p", "p<m"}, true);
    add("assoc", cat, "comp(m,p,?z,comp(m,p,?y,?x))", "comp(m,p,comp(m,p,?z,?y),?x)",
        {"p<m"}, true);
    add("unit-right", cat, "comp(m,p,?x@m,one(p,m,s(m,p,?x@m)))", "?x@m", {"p<m"}, true);
    add("unit-left", cat, "comp(m,p,one(p,m,t(m,p,?x@m)),?x@m)", "?x@m", {"p<m"}, true);
    add("refl-idempotent", cat, "comp(m,q,one(p,m,?x@p),one(p,m,?x@p))",
        "one(p,m,?x@p)", {"p<=q", "q<m"}, true);
    add("interchange", cat, "comp(m,p,comp(m,q,?y2,?y),comp(m,q,?x2,?x))",
        "comp(m,q,comp(m,p,?y2,?x2),comp(m,p,?y,?x))", {"p<q", "q<m"}, true);
    add("refl-functor", cat, "one(p,m,comp(p,q,?y,?x))",
        "comp(m,q,one(p,m,?y),one(p,m,?x))", {"q<p", "p<m"}, true);
    add("rev-refl-absorb", "reflexive compatibility (i), involutive reflexors",
        "j(m,q,one(p,m,?x@p))", "one(p,m,?x@p)", {"n<=q", "q<m", "p<=q"}, true);
    add("rev-refl-commute", "reflexive compatibility (ii)", "j(m,q,one(p,m,?x@p))",
        "one(p,m,j(p,q,?x@p))", {"n<=q", "q<p", "p<m"}, true);
    add("involutive", "involutive reversors", "j(m,p,j(m,p,?x))", "?x",
        {"n<=p", "p<m"}, true);

    add("pi-comp", pr, "pi(comp(m,p,?y:M,?x:M))", "comp(m,p,pi(?y:M),pi(?x:M))");
    add("pi-rev", pr, "pi(j(m,p,?x:M))", "j(m,p,pi(?x:M))", {"n<=p", "p<m"});
    add("pi-refl", pr, "pi(one(p,m,?x:M))", "one(p,m,pi(?x:M))");
    add("pi-src", pr, "pi(s(m,q,?x:M))", "s(m,q,pi(?x:M))");
    add("pi-tgt", pr, "pi(t(m,q,?x:M))", "t(m,q,pi(?x:M))");

    add("v-comp", al, "v(comp(m,p,?y:M,?x:M))", "comp(m,p,v(?y:M),v(?x:M))");
    add("v-rev", al, "v(j(m,p,?x:M))", "j(m,p,v(?x:M))", {"n<=p", "p<m"});
    add("v-refl", al, "v(one(p,m,?x:M))", "one(p,m,v(?x:M))");
    add("v-src", al, "v(s(m,q,?x:M))", "s(m,q,v(?x:M))");
    add("v-tgt", al, "v(t(m,q,?x:M))", "t(m,q,v(?x:M))");
    add("v-lam-unit", "algebra unit law", "v(lam(?a:G))", "?a:G");
    add("lam-src", "unit preserves boundaries", "lam(s(m,q,?a:G))", "s(m,q,lam(?a:G))");
    add("lam-tgt", "unit preserves boundaries", "lam(t(m,q,?a:G))", "t(m,q,lam(?a:G))");

    add("alg-comp-def", ops, "comp(m,p,?b:G,?a:G)", "v(comp(m,p,lam(?b:G),lam(?a:G)))");
    add("alg-refl-def", ops, "one(p,m,?a:G)", "v(one(p,m,lam(?a:G)))");
    add("alg-rev-def", ops, "j(m,p,?a:G)", "v(j(m,p,lam(?a:G)))", {"n<=p", "p<m"});

    add("map-comp", fun, "map(?F,Cp,comp(m,p,?y:C,?x:C))",
        "comp(m,p,map(?F,Cp,?y:C),map(?F,Cp,?x:C))");
    add("map-refl", fun, "map(?F,Cp,one(p,m,?x:C))", "one(p,m,map(?F,Cp,?x:C))");
    add("map-src", fun, "map(?F,Cp,s(m,q,?x:C))", "s(m,q,map(?F,Cp,?x:C))");
    add("map-tgt", fun, "map(?F,Cp,t(m,q,?x:C))", "t(m,q,map(?F,Cp,?x:C))");
    return r;
  }();
  return rules;
}

const Rule* find_rule(std::string_view name) {
  for (const auto& r : rule_library())
    if (r.name == name) return &r;
  return nullptr;
}

std::string path_str(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

Term subterm(const Term& t, const Path& p) {
  Term cur = t;
  for (std::size_t k : p) {
    if (k >= cur->kids.size()) no_match("position " + path_str(p) + " leaves " + print(t));
    cur = cur->kids[k];
  }
  return cur;
}

namespace {

Term replace_from(const Term& t, const Path& p, std::size_t depth, const Term& with) {
  if (depth == p.size()) return with;
  if (p[depth] >= t->kids.size()) no_match("position " + path_str(p) + " out of range");
  std::vector<Term> kids = t->kids;
  kids[p[depth]] = replace_from(t->kids[p[depth]], p, depth + 1, with);
  return rebuild(*t, std::move(kids));
}

}  // namespace

Term replace_at(const Term& t, const Path& p, const Term& with) {
  return replace_from(t, p, 0, with);
}

bool match(const Term& pattern, const Term& t, Subst& s, bool strict) {
  const Node& pn = *pattern;
  if (pn.op == Op::Meta) {
    if (!bind_carrier(pn.carrier, t->carrier, s, strict)) return false;
    if (pn.grade_known && (!t->grade_known || !unify(pn.grade, t->grade, s)))
      return false;
    auto it = s.metas.find(pn.name);
    if (it != s.metas.end()) return equal(it->second, t);
    s.metas.emplace(pn.name, t);
    return true;
  }
  if (pn.op == Op::Var) return equal(pattern, t);
  if (pn.op != t->op) return false;
  if (!bind_carrier(pn.carrier, t->carrier, s, strict)) return false;
  if (uses_g1(pn.op) && !unify(pn.g1, t->g1, s)) return false;
  if (uses_g2(pn.op) && !unify(pn.g2, t->g2, s)) return false;
  if (pn.op == Op::Map) {
    if (!pn.name.empty() && pn.name[0] == '?') {
      auto [it, fresh] = s.names.emplace(pn.name, t->name);
      if (!fresh && it->second != t->name) return false;
    } else if (pn.name != t->name) {
      return false;
    }
  }
  for (std::size_t i = 0; i < pn.kids.size(); ++i)
    if (!match(pn.kids[i], t->kids[i], s, strict)) return false;
  return true;
}

Grade instantiate(const Grade& g, const Subst& s) {
  if (g.is_constant()) return g;
  auto it = s.grades.find(g.var);
  if (it == s.grades.end()) no_match("grade '" + g.var + "' is not bound");
  return it->second + g.offset;
}

Term instantiate(const Term& pattern, const Subst& s) {
  const Node& pn = *pattern;
  if (pn.op == Op::Meta) {
    auto it = s.metas.find(pn.name);
    if (it == s.metas.end()) no_match("meta ?" + pn.name + " is not bound");
    return it->second;
  }
  if (pn.op == Op::Var) return pattern;
  Node shape = pn;
  if (uses_g1(pn.op)) shape.g1 = instantiate(pn.g1, s);
  if (uses_g2(pn.op)) shape.g2 = instantiate(pn.g2, s);
  if (pn.op == Op::Map) {
    if (!pn.name.empty() && pn.name[0] == '?') {
      auto it = s.names.find(pn.name);
      if (it == s.names.end()) no_match("map name " + pn.name + " is not bound");
      shape.name = it->second;
    }
    if (shape.carrier == Carrier::Var) {
      if (!s.carrier) no_match("carrier is not bound");
      shape.carrier = *s.carrier;
    }
  }
  std::vector<Term> kids;
  for (const auto& k : pn.kids) kids.push_back(instantiate(k, s));
  return rebuild(shape, std::move(kids));
}

Term apply_step(const Term& t, const Rule& rule, const Path& position,
                const Subst& subst, bool reverse, const GradeContext& ctx,
                const std::vector<Term>* admitted) {
  const Term& from = reverse ? rule.rhs : rule.lhs;
  const Term& to = reverse ? rule.lhs : rule.rhs;
  Term sub = subterm(t, position);
  Subst s = subst;
  if (!match(from, sub, s, rule.strict_carrier))
    no_match(rule.name + (reverse ? " (reversed)" : "") + " does not match " +
             print(sub) + " at " + path_str(position));
  for (const auto& c : rule.conditions) {
    Condition inst{substitute(c.lhs, s), c.rel, substitute(c.rhs, s)};
    if (!ctx.entails(inst))
      throw Error(ErrorKind::SideConditionViolated,
                  rule.name + ": side condition " + c.str() + " (" + inst.str() +
                      ") does not follow from the context");
  }
  if (rule.needs_bracket) {
    std::vector<Term> found;
    collect_brackets(from, sub, found);
    for (const auto& b : found) {
      bool ok = admitted && std::any_of(admitted->begin(), admitted->end(),
                                        [&](const Term& a) { return equal(a, b); });
      if (!ok)
        throw Error(ErrorKind::SideConditionViolated,
                    rule.name + ": bracket " + print(b) + " was not introduced");
    }
  }
  Term result;
  try {
    result = instantiate(to, s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IllTypedTerm) throw;
    no_match(rule.name + ": instance is ill-typed: " + e.what());
  }
  try {
    return replace_at(t, position, result);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IllTypedTerm) throw;
    no_match(rule.name + ": rewritten term is ill-typed: " + e.what());
  }
}

}  // namespace globforge::engine
