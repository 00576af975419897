#include <utility>

#include "globforge/engine/derivation.hpp"

namespace globforge::engine {

namespace {

using Grades = std::vector<std::pair<std::string, std::string>>;

class Build {
 public:
  Build(std::string name, VarTable vars, const std::vector<std::string>& context)
      : vars_(std::move(vars)) {
    d_.name = std::move(name);
    for (const auto& c : context) d_.context.push_back(parse_condition(c));
  }

  Term term(const std::string& s) const { return parse_term(s, vars_); }

  Build& hyp(const std::string& name, const std::string& lhs, const std::string& rhs,
             std::vector<std::string> conditions = {}) {
    d_.hypotheses.push_back(
        make_rule(name, "hypothesis " + name, lhs, rhs, std::move(conditions), false, vars_));
    return *this;
  }

  Build& chain(const std::string& label, const std::string& start) {
    d_.items.push_back(Chain{label, term(start), {}});
    return *this;
  }

  Build& rw(const std::string& rule, Path at, const std::string& result, const Grades& g = {}) {
    return push(rule, std::move(at), result, g, false);
  }

  Build& rv(const std::string& rule, Path at, const std::string& result, const Grades& g = {}) {
    return push(rule, std::move(at), result, g, true);
  }

  Build& iu(Path at, const std::string& alpha, const std::string& m, const std::string& p,
            const std::string& result) {
    Step s;
    s.kind = StepKind::InverseUniqueness;
    s.position = std::move(at);
    s.subst.metas["alpha"] = term(alpha);
    s.subst.grades["m"] = parse_grade(m);
    s.subst.grades["p"] = parse_grade(p);
    s.result = term(result);
    std::get<Chain>(d_.items.back()).steps.push_back(std::move(s));
    return *this;
  }

  Build& bracket(const std::string& label, const std::string& m, const std::string& c1,
                 const std::string& c0) {
    d_.items.push_back(BracketIntro{label, parse_grade(m), term(c1), term(c0)});
    return *this;
  }

  Derivation done() { return std::move(d_); }

 private:
  Build& push(const std::string& rule, Path at, const std::string& result, const Grades& g,
              bool reverse) {
    Step s;
    s.rule = rule;
    s.position = std::move(at);
    s.reverse = reverse;
    for (const auto& [k, v] : g) s.subst.grades[k] = parse_grade(v);
    s.result = term(result);
    std::get<Chain>(d_.items.back()).steps.push_back(std::move(s));
    return *this;
  }

  VarTable vars_;
  Derivation d_;
};

Derivation functor_reversors() {
  Build b("S1", {{"alpha", {Carrier::C, Grade("m")}}}, {"n<=p", "p<m"});
  b.chain("left", "comp(m,p,map(F,Cp,j(m,p,alpha)),map(F,Cp,alpha))")
      .rv("map-comp", {}, "map(F,Cp,comp(m,p,j(m,p,alpha),alpha))")
      .rw("inverse-left", {0}, "map(F,Cp,one(p,m,s(m,p,alpha)))")
      .rw("map-refl", {}, "one(p,m,map(F,Cp,s(m,p,alpha)))")
      .rw("map-src", {0}, "one(p,m,s(m,p,map(F,Cp,alpha)))");
  b.chain("right", "comp(m,p,map(F,Cp,alpha),map(F,Cp,j(m,p,alpha)))")
      .rv("map-comp", {}, "map(F,Cp,comp(m,p,alpha,j(m,p,alpha)))")
      .rw("inverse-right", {0}, "map(F,Cp,one(p,m,t(m,p,alpha)))")
      .rw("map-refl", {}, "one(p,m,map(F,Cp,t(m,p,alpha)))")
      .rw("map-tgt", {0}, "one(p,m,t(m,p,map(F,Cp,alpha)))");
  b.chain("main", "map(F,Cp,j(m,p,alpha))")
      .iu({}, "map(F,Cp,alpha)", "m", "p", "j(m,p,map(F,Cp,alpha))");
  return b.done();
}

Derivation involutivity() {
  Build b("S2", {{"alpha", {Carrier::C, Grade("m")}}}, {"n<=p", "p<m"});
  b.chain("left", "comp(m,p,alpha,j(m,p,alpha))")
      .rw("inverse-right", {}, "one(p,m,t(m,p,alpha))")
      .rv("rev-swap-src", {0}, "one(p,m,s(m,p,j(m,p,alpha)))");
  b.chain("right", "comp(m,p,j(m,p,alpha),alpha)")
      .rw("inverse-left", {}, "one(p,m,s(m,p,alpha))")
      .rv("rev-swap-tgt", {0}, "one(p,m,t(m,p,j(m,p,alpha)))");
  b.chain("main", "alpha").iu({}, "j(m,p,alpha)", "m", "p", "j(m,p,j(m,p,alpha))");
  return b.done();
}

Derivation compat_below() {
  Build b("S3a", {{"alpha", {Carrier::C, Grade("p")}}}, {"n<=q", "q<p", "p<m"});
  b.chain("left", "comp(m,q,one(p,m,j(p,q,alpha)),one(p,m,alpha))")
      .rv("refl-functor", {}, "one(p,m,comp(p,q,j(p,q,alpha),alpha))")
      .rw("inverse-left", {0}, "one(p,m,one(q,p,s(p,q,alpha)))")
      .rw("refl-compose", {}, "one(q,m,s(p,q,alpha))")
      .rv("refl-src-below", {0}, "one(q,m,s(m,q,one(p,m,alpha)))", {{"m", "m"}});
  b.chain("right", "comp(m,q,one(p,m,alpha),one(p,m,j(p,q,alpha)))")
      .rv("refl-functor", {}, "one(p,m,comp(p,q,alpha,j(p,q,alpha)))")
      .rw("inverse-right", {0}, "one(p,m,one(q,p,t(p,q,alpha)))")
      .rw("refl-compose", {}, "one(q,m,t(p,q,alpha))")
      .rv("refl-tgt-below", {0}, "one(q,m,t(m,q,one(p,m,alpha)))", {{"m", "m"}});
  b.chain("main", "one(p,m,j(p,q,alpha))")
      .iu({}, "one(p,m,alpha)", "m", "q", "j(m,q,one(p,m,alpha))");
  return b.done();
}

Derivation compat_above_strict() {
  Build b("S3b(p<q)", {{"alpha", {Carrier::C, Grade("p")}}}, {"n<=q", "p<q", "q<m"});
  b.chain("left", "comp(m,q,one(p,m,alpha),one(p,m,alpha))")
      .rw("refl-idempotent", {}, "one(p,m,alpha)")
      .rv("refl-compose", {}, "one(q,m,one(p,q,alpha))", {{"q", "q"}})
      .rv("refl-src-above", {0}, "one(q,m,s(m,q,one(p,m,alpha)))", {{"m", "m"}});
  b.chain("right", "comp(m,q,one(p,m,alpha),one(p,m,alpha))")
      .rw("refl-idempotent", {}, "one(p,m,alpha)")
      .rv("refl-compose", {}, "one(q,m,one(p,q,alpha))", {{"q", "q"}})
      .rv("refl-tgt-above", {0}, "one(q,m,t(m,q,one(p,m,alpha)))", {{"m", "m"}});
  b.chain("main", "one(p,m,alpha)")
      .iu({}, "one(p,m,alpha)", "m", "q", "j(m,q,one(p,m,alpha))");
  return b.done();
}

Derivation compat_above_equal() {
  Build b("S3b(p=q)", {{"alpha", {Carrier::C, Grade("p")}}}, {"n<=p", "p<m"});
  b.chain("left", "comp(m,p,one(p,m,alpha),one(p,m,alpha))")
      .rw("refl-idempotent", {}, "one(p,m,alpha)")
      .rv("refl-src", {0}, "one(p,m,s(m,p,one(p,m,alpha)))", {{"m", "m"}});
  b.chain("right", "comp(m,p,one(p,m,alpha),one(p,m,alpha))")
      .rw("refl-idempotent", {}, "one(p,m,alpha)")
      .rv("refl-tgt", {0}, "one(p,m,t(m,p,one(p,m,alpha)))", {{"m", "m"}});
  b.chain("main", "one(p,m,alpha)")
      .iu({}, "one(p,m,alpha)", "m", "p", "j(m,p,one(p,m,alpha))");
  return b.done();
}

Derivation induced_formulas() {
  Build b("S4",
          {{"t", {Carrier::M, Grade("m")}},
           {"u", {Carrier::M, Grade("m")}},
           {"r", {Carrier::M, Grade("p")}}},
          {"n<=p", "p<m"});
  b.hyp("mu-unit", "map(mu,M,map(lamT,MM,?t:M))", "?t:M")
      .hyp("mu-rev", "map(mu,M,j(m,p,?X:MM))", "j(m,p,map(mu,M,?X:MM))", {"n<=p", "p<m"})
      .hyp("mu-refl", "map(mu,M,one(p,m,?X:MM))", "one(p,m,map(mu,M,?X:MM))")
      .hyp("mu-comp", "map(mu,M,comp(m,p,?Y:MM,?X:MM))",
           "comp(m,p,map(mu,M,?Y:MM),map(mu,M,?X:MM))")
      .hyp("alg-morphism", "v(map(mu,M,?X:MM))", "v(map(Tv,M,?X:MM))")
      .hyp("Tv-rev", "map(Tv,M,j(m,p,?X:MM))", "j(m,p,map(Tv,M,?X:MM))", {"n<=p", "p<m"})
      .hyp("Tv-refl", "map(Tv,M,one(p,m,?X:MM))", "one(p,m,map(Tv,M,?X:MM))")
      .hyp("Tv-comp", "map(Tv,M,comp(m,p,?Y:MM,?X:MM))",
           "comp(m,p,map(Tv,M,?Y:MM),map(Tv,M,?X:MM))")
      .hyp("lam-natural", "map(Tv,M,map(lamT,MM,?t:M))", "lam(v(?t:M))");
  b.chain("comp", "v(comp(m,p,t,u))")
      .rv("hyp:mu-unit", {0, 0}, "v(comp(m,p,map(mu,M,map(lamT,MM,t)),u))")
      .rv("hyp:mu-unit", {0, 1},
          "v(comp(m,p,map(mu,M,map(lamT,MM,t)),map(mu,M,map(lamT,MM,u))))")
      .rv("hyp:mu-comp", {0}, "v(map(mu,M,comp(m,p,map(lamT,MM,t),map(lamT,MM,u))))")
      .rw("hyp:alg-morphism", {}, "v(map(Tv,M,comp(m,p,map(lamT,MM,t),map(lamT,MM,u))))")
      .rw("hyp:Tv-comp", {0},
          "v(comp(m,p,map(Tv,M,map(lamT,MM,t)),map(Tv,M,map(lamT,MM,u))))")
      .rw("hyp:lam-natural", {0, 0}, "v(comp(m,p,lam(v(t)),map(Tv,M,map(lamT,MM,u))))")
      .rw("hyp:lam-natural", {0, 1}, "v(comp(m,p,lam(v(t)),lam(v(u))))")
      .rv("alg-comp-def", {}, "comp(m,p,v(t),v(u))");
  b.chain("refl", "v(one(p,m,r))")
      .rv("hyp:mu-unit", {0, 0}, "v(one(p,m,map(mu,M,map(lamT,MM,r))))")
      .rv("hyp:mu-refl", {0}, "v(map(mu,M,one(p,m,map(lamT,MM,r))))")
      .rw("hyp:alg-morphism", {}, "v(map(Tv,M,one(p,m,map(lamT,MM,r))))")
      .rw("hyp:Tv-refl", {0}, "v(one(p,m,map(Tv,M,map(lamT,MM,r))))")
      .rw("hyp:lam-natural", {0, 0}, "v(one(p,m,lam(v(r))))")
      .rv("alg-refl-def", {}, "iota(p,m,v(r))");
  b.chain("rev", "v(j(m,p,t))")
      .rv("hyp:mu-unit", {0, 0}, "v(j(m,p,map(mu,M,map(lamT,MM,t))))")
      .rv("hyp:mu-rev", {0}, "v(map(mu,M,j(m,p,map(lamT,MM,t))))")
      .rw("hyp:alg-morphism", {}, "v(map(Tv,M,j(m,p,map(lamT,MM,t))))")
      .rw("hyp:Tv-rev", {0}, "v(j(m,p,map(Tv,M,map(lamT,MM,t))))")
      .rw("hyp:lam-natural", {0, 0}, "v(j(m,p,lam(v(t))))")
      .rv("alg-rev-def", {}, "i(m,p,v(t))");
  return b.done();
}

Derivation double_reversal() {
  Build b("S5a", {{"alpha", {Carrier::G, Grade("m", 1)}}}, {"n<=m"});
  b.chain("tgt", "t(m+1,m,i(m+1,m,i(m+1,m,alpha)))")
      .rw("alg-rev-def", {0, 0}, "t(m+1,m,i(m+1,m,v(j(m+1,m,lam(alpha)))))")
      .rv("v-rev", {0}, "t(m+1,m,v(j(m+1,m,j(m+1,m,lam(alpha)))))")
      .rv("v-tgt", {}, "v(t(m+1,m,j(m+1,m,j(m+1,m,lam(alpha)))))")
      .rw("rev-swap-tgt", {0}, "v(s(m+1,m,j(m+1,m,lam(alpha))))")
      .rw("rev-swap-src", {0}, "v(t(m+1,m,lam(alpha)))")
      .rv("lam-tgt", {0}, "v(lam(t(m+1,m,alpha)))")
      .rw("v-lam-unit", {}, "t(m+1,m,alpha)");
  b.chain("src", "s(m+1,m,i(m+1,m,i(m+1,m,alpha)))")
      .rw("alg-rev-def", {0, 0}, "s(m+1,m,i(m+1,m,v(j(m+1,m,lam(alpha)))))")
      .rv("v-rev", {0}, "s(m+1,m,v(j(m+1,m,j(m+1,m,lam(alpha)))))")
      .rv("v-src", {}, "v(s(m+1,m,j(m+1,m,j(m+1,m,lam(alpha)))))")
      .rw("rev-swap-src", {0}, "v(t(m+1,m,j(m+1,m,lam(alpha))))")
      .rw("rev-swap-tgt", {0}, "v(s(m+1,m,lam(alpha)))")
      .rv("lam-src", {0}, "v(lam(s(m+1,m,alpha)))")
      .rw("v-lam-unit", {}, "s(m+1,m,alpha)");
  return b.done();
}

Derivation reversed_identity_below() {
  Build b("S5b", {{"alpha", {Carrier::G, Grade("m", -1)}}}, {"n<=q", "q<m-1"});
  auto side = [&](const std::string& f, const std::string& label) {
    std::string commute = f == "s" ? "rev-boundary-commute-src" : "rev-boundary-commute-tgt";
    std::string refl = f == "s" ? "refl-src" : "refl-tgt";
    std::string vb = f == "s" ? "v-src" : "v-tgt";
    b.chain(label, f + "(m,m-1,i(m,q,iota(m-1,m,alpha)))")
        .rw("alg-refl-def", {0, 0}, f + "(m,m-1,i(m,q,v(one(m-1,m,lam(alpha)))))")
        .rv("v-rev", {0}, f + "(m,m-1,v(j(m,q,one(m-1,m,lam(alpha)))))")
        .rv(vb, {}, "v(" + f + "(m,m-1,j(m,q,one(m-1,m,lam(alpha)))))")
        .rw(commute, {0}, "v(j(m-1,q," + f + "(m,m-1,one(m-1,m,lam(alpha)))))")
        .rw(refl, {0, 0}, "v(j(m-1,q,lam(alpha)))")
        .rv("alg-rev-def", {}, "i(m-1,q,alpha)")
        .rv("v-lam-unit", {}, "v(lam(i(m-1,q,alpha)))")
        .rv(refl, {0}, "v(" + f + "(m,m-1,one(m-1,m,lam(i(m-1,q,alpha)))))", {{"m", "m"}})
        .rw(vb, {}, f + "(m,m-1,v(one(m-1,m,lam(i(m-1,q,alpha)))))")
        .rv("alg-refl-def", {0}, f + "(m,m-1,iota(m-1,m,i(m-1,q,alpha)))");
  };
  side("t", "tgt");
  side("s", "src");
  return b.done();
}

Derivation reversed_identity_at() {
  Build b("S5c", {{"alpha", {Carrier::G, Grade("m", -1)}}}, {"n<=m-1"});
  b.chain("tgt", "t(m,m-1,i(m,m-1,iota(m-1,m,alpha)))")
      .rw("alg-refl-def", {0, 0}, "t(m,m-1,i(m,m-1,v(one(m-1,m,lam(alpha)))))")
      .rv("v-rev", {0}, "t(m,m-1,v(j(m,m-1,one(m-1,m,lam(alpha)))))")
      .rv("v-tgt", {}, "v(t(m,m-1,j(m,m-1,one(m-1,m,lam(alpha)))))")
      .rw("rev-swap-tgt", {0}, "v(s(m,m-1,one(m-1,m,lam(alpha))))")
      .rw("refl-src", {0}, "v(lam(alpha))")
      .rw("v-lam-unit", {}, "alpha")
      .rv("refl-tgt", {}, "t(m,m-1,iota(m-1,m,alpha))", {{"m", "m"}});
  b.chain("src", "s(m,m-1,i(m,m-1,iota(m-1,m,alpha)))")
      .rw("alg-refl-def", {0, 0}, "s(m,m-1,i(m,m-1,v(one(m-1,m,lam(alpha)))))")
      .rv("v-rev", {0}, "s(m,m-1,v(j(m,m-1,one(m-1,m,lam(alpha)))))")
      .rv("v-src", {}, "v(s(m,m-1,j(m,m-1,one(m-1,m,lam(alpha)))))")
      .rw("rev-swap-src", {0}, "v(t(m,m-1,one(m-1,m,lam(alpha))))")
      .rw("refl-tgt", {0}, "v(lam(alpha))")
      .rw("v-lam-unit", {}, "alpha")
      .rv("refl-src", {}, "s(m,m-1,iota(m-1,m,alpha))", {{"m", "m"}});
  return b.done();
}

const VarTable kEdge = {{"f", {Carrier::G, Grade(1)}},
                        {"a", {Carrier::G, Grade(0)}},
                        {"b", {Carrier::G, Grade(0)}}};

const std::string kC1 = "comp(1,0,lam(f),j(1,0,lam(f)))";
const std::string kC0 = "one(0,1,lam(b))";
const std::string kBeta = "bracket(1," + kC1 + "," + kC0 + ")";

// Admits the bracket from 1(λb) to λf ⋆ j(λf).
void edge_bracket(Build& b) {
  b.hyp("f-src", "s(1,0,f)", "a").hyp("f-tgt", "t(1,0,f)", "b");
  b.chain("pi-eq", "pi(" + kC1 + ")")
      .rw("pi-comp", {}, "comp(1,0,pi(lam(f)),pi(j(1,0,lam(f))))")
      .rw("pi-rev", {1}, "comp(1,0,pi(lam(f)),j(1,0,pi(lam(f))))")
      .rw("inverse-right", {}, "one(0,1,t(1,0,pi(lam(f))))")
      .rv("pi-tgt", {0}, "one(0,1,pi(t(1,0,lam(f))))")
      .rv("lam-tgt", {0, 0}, "one(0,1,pi(lam(t(1,0,f))))")
      .rw("hyp:f-tgt", {0, 0, 0}, "one(0,1,pi(lam(b)))")
      .rv("pi-refl", {}, "pi(" + kC0 + ")");
  b.chain("par-src", "s(1,0," + kC1 + ")")
      .rw("pos-src-at", {}, "s(1,0,j(1,0,lam(f)))")
      .rw("rev-swap-src", {}, "t(1,0,lam(f))")
      .rv("lam-tgt", {}, "lam(t(1,0,f))")
      .rw("hyp:f-tgt", {0}, "lam(b)")
      .rv("refl-src", {}, "s(1,0," + kC0 + ")", {{"m", "1"}});
  b.chain("par-tgt", "t(1,0," + kC1 + ")")
      .rw("pos-tgt-at", {}, "t(1,0,lam(f))")
      .rv("lam-tgt", {}, "lam(t(1,0,f))")
      .rw("hyp:f-tgt", {0}, "lam(b)")
      .rv("refl-tgt", {}, "t(1,0," + kC0 + ")", {{"m", "1"}});
  b.bracket("beta", "1", kC1, kC0);
}

Derivation dimension_one() {
  Build b("S6", kEdge, {"n<=0"});
  edge_bracket(b);
  b.hyp("dim-1", "t(2,1,?X:G@2)", "s(2,1,?X:G@2)");
  b.chain("eval-tgt", "t(2,1,v(" + kBeta + "))")
      .rv("v-tgt", {}, "v(t(2,1," + kBeta + "))")
      .rw("bracket-tgt", {0}, "v(" + kC1 + ")")
      .rw("v-comp", {}, "comp(1,0,v(lam(f)),v(j(1,0,lam(f))))")
      .rw("v-lam-unit", {0}, "comp(1,0,f,v(j(1,0,lam(f))))")
      .rw("v-rev", {1}, "comp(1,0,f,i(1,0,v(lam(f))))")
      .rw("v-lam-unit", {1, 0}, "comp(1,0,f,i(1,0,f))");
  b.chain("eval-src", "s(2,1,v(" + kBeta + "))")
      .rv("v-src", {}, "v(s(2,1," + kBeta + "))")
      .rw("bracket-src", {0}, "v(" + kC0 + ")")
      .rw("v-refl", {}, "iota(0,1,v(lam(b)))")
      .rw("v-lam-unit", {0}, "iota(0,1,b)");
  b.chain("main", "comp(1,0,f,i(1,0,f))")
      .rv("eq:eval-tgt", {}, "t(2,1,v(" + kBeta + "))")
      .rw("hyp:dim-1", {}, "s(2,1,v(" + kBeta + "))")
      .rw("eq:eval-src", {}, "iota(0,1,b)");
  return b.done();
}

Derivation dimension_two() {
  Build b("S7", kEdge, {"n<=0"});
  edge_bracket(b);
  b.hyp("dim-2", "t(3,2,?X:G@3)", "s(3,2,?X:G@3)");
  const std::string B = kBeta;
  const std::string D = "comp(2,1," + B + ",j(2,1," + B + "))";
  const std::string E = "one(1,2," + kC1 + ")";
  const std::string L = "bracket(2," + D + "," + E + ")";
  const std::string P = "pi(lam(b))";
  b.chain("par2-src", "s(2,1," + D + ")")
      .rw("pos-src-at", {}, "s(2,1,j(2,1," + B + "))")
      .rw("rev-swap-src", {}, "t(2,1," + B + ")")
      .rw("bracket-tgt", {}, kC1)
      .rv("refl-src", {}, "s(2,1," + E + ")", {{"m", "2"}});
  b.chain("par2-tgt", "t(2,1," + D + ")")
      .rw("pos-tgt-at", {}, "t(2,1," + B + ")")
      .rw("bracket-tgt", {}, kC1)
      .rv("refl-tgt", {}, "t(2,1," + E + ")", {{"m", "2"}});
  const std::string pc1 = "one(1,2,pi(" + kC1 + "))";
  const std::string pc0 = "one(1,2,pi(" + kC0 + "))";
  const std::string p01 = "one(1,2,one(0,1," + P + "))";
  const std::string p02 = "one(0,2," + P + ")";
  b.chain("pi2-eq", "pi(" + D + ")")
      .rw("pi-comp", {}, "comp(2,1,pi(" + B + "),pi(j(2,1," + B + ")))")
      .rw("pi-rev", {1}, "comp(2,1,pi(" + B + "),j(2,1,pi(" + B + ")))")
      .rw("bracket-pi", {0}, "comp(2,1," + pc1 + ",j(2,1,pi(" + B + ")))")
      .rw("bracket-pi", {1, 0}, "comp(2,1," + pc1 + ",j(2,1," + pc1 + "))")
      .rw("eq:pi-eq", {0, 0}, "comp(2,1," + pc0 + ",j(2,1," + pc1 + "))")
      .rw("eq:pi-eq", {1, 0, 0}, "comp(2,1," + pc0 + ",j(2,1," + pc0 + "))")
      .rw("pi-refl", {0, 0}, "comp(2,1," + p01 + ",j(2,1," + pc0 + "))")
      .rw("pi-refl", {1, 0, 0}, "comp(2,1," + p01 + ",j(2,1," + p01 + "))")
      .rw("refl-compose", {0}, "comp(2,1," + p02 + ",j(2,1," + p01 + "))")
      .rw("refl-compose", {1, 0}, "comp(2,1," + p02 + ",j(2,1," + p02 + "))")
      .rw("rev-refl-absorb", {1}, "comp(2,1," + p02 + "," + p02 + ")")
      .rw("refl-idempotent", {}, p02)
      .rv("refl-compose", {}, p01, {{"q", "1"}})
      .rv("pi-refl", {0}, pc0)
      .rv("eq:pi-eq", {0}, pc1)
      .rv("pi-refl", {}, "pi(" + E + ")");
  b.bracket("lambda-f", "2", D, E);
  b.chain("v-tgt", "t(3,2,v(" + L + "))")
      .rv("v-tgt", {}, "v(t(3,2," + L + "))")
      .rw("bracket-tgt", {0}, "v(" + D + ")")
      .rw("v-comp", {}, "comp(2,1,v(" + B + "),v(j(2,1," + B + ")))")
      .rw("v-rev", {1}, "comp(2,1,v(" + B + "),i(2,1,v(" + B + ")))");
  b.chain("v-src", "s(3,2,v(" + L + "))")
      .rv("v-src", {}, "v(s(3,2," + L + "))")
      .rw("bracket-src", {0}, "v(" + E + ")")
      .rw("v-refl", {}, "iota(1,2,v(" + kC1 + "))")
      .rw("v-comp", {0}, "iota(1,2,comp(1,0,v(lam(f)),v(j(1,0,lam(f)))))")
      .rw("v-lam-unit", {0, 0}, "iota(1,2,comp(1,0,f,v(j(1,0,lam(f)))))")
      .rw("v-rev", {0, 1}, "iota(1,2,comp(1,0,f,i(1,0,v(lam(f)))))")
      .rw("v-lam-unit", {0, 1, 0}, "iota(1,2,comp(1,0,f,i(1,0,f)))");
  b.chain("main", "comp(2,1,v(" + B + "),i(2,1,v(" + B + ")))")
      .rv("eq:v-tgt", {}, "t(3,2,v(" + L + "))")
      .rw("hyp:dim-2", {}, "s(3,2,v(" + L + "))")
      .rw("eq:v-src", {}, "iota(1,2,comp(1,0,f,i(1,0,f)))");
  return b.done();
}

}  // namespace

const std::vector<Suite>& builtin_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> s;
    s.push_back({"S1", "strict functors preserve reversors", {functor_reversors()}});
    s.push_back({"S2", "reversors are involutive", {involutivity()}});
    s.push_back({"S3a", "reversed identities below the reflexor level", {compat_below()}});
    s.push_back({"S3b", "identities are self-inverse at or above their level",
                 {compat_above_strict(), compat_above_equal()}});
    s.push_back({"S4", "algebra operations are preserved by the structure map",
                 {induced_formulas()}});
    s.push_back({"S5a", "double reversal keeps boundaries", {double_reversal()}});
    s.push_back({"S5b", "reversed identities below the top level", {reversed_identity_below()}});
    s.push_back({"S5c", "reversed identities at the top level", {reversed_identity_at()}});
    s.push_back({"S6", "an algebra of dimension 1 has inverse 1-cells", {dimension_one()}});
    s.push_back({"S7", "an algebra of dimension 2 has inverse 1-cells up to a 2-cell",
                 {dimension_two()}});
    return s;
  }();
  return suites;
}

}  // namespace globforge::engine
