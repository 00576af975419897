#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace globforge::engine {

/// Which structure a term lives in. M is the free magma, C its strict
/// quotient, Cp a second strict category (functor codomain), G an algebra
/// and MM the free magma on M. Var is the carrier variable of a rule.
enum class Carrier { M, C, Cp, G, MM, Var };

const char* to_string(Carrier c);
Carrier parse_carrier(std::string_view s);
inline bool is_strict(Carrier c) { return c == Carrier::C || c == Carrier::Cp; }

/// Affine grade `var + offset`; an empty var is a constant.
struct Grade {
  std::string var;
  long offset = 0;

  Grade() = default;
  Grade(long c) : offset(c) {}  // NOLINT: constants read naturally
  Grade(std::string v, long off = 0) : var(std::move(v)), offset(off) {}

  bool is_constant() const { return var.empty(); }
  Grade operator+(long k) const { return Grade(var, offset + k); }
  Grade operator-(long k) const { return Grade(var, offset - k); }
  std::string str() const;

  friend bool operator==(const Grade&, const Grade&) = default;
  friend auto operator<=>(const Grade&, const Grade&) = default;
};

Grade parse_grade(std::string_view s);

enum class Op { Var, Meta, Src, Tgt, Rev, One, Comp, Bracket, Pi, V, Lam, Map };

struct Node;
using Term = std::shared_ptr<const Node>;

/// Immutable term node. Grade parameters per operator:
///   s/t(m, q, x)      g1 = m, g2 = q, grade q
///   j(m, p, x)        g1 = m, g2 = p, grade m
///   one(p, m, x)      g1 = p, g2 = m, grade m
///   comp(m, p, y, x)  g1 = m, g2 = p, grade m
///   bracket(m, c1, c0) g1 = m, grade m+1
struct Node {
  Op op = Op::Var;
  Carrier carrier = Carrier::M;
  Grade grade;
  bool grade_known = true;  // false for metas without a grade pattern
  Grade g1, g2;
  std::string name;  // Var, Meta, Map
  std::vector<Term> kids;
};

bool equal(const Term& a, const Term& b);
/// Total order used for canonical sorting.
bool less(const Term& a, const Term& b);
std::string print(const Term& t);
std::size_t term_size(const Term& t);

// Constructors. Each checks grades and carriers of its arguments and throws
// Error(IllTypedTerm) on a mismatch. Unknown grades (bare metas) pass.
Term var(std::string name, Carrier c, Grade g);
Term meta(std::string name, Carrier c);
Term meta(std::string name, Carrier c, Grade g);
Term src(Grade m, Grade q, Term x);
Term tgt(Grade m, Grade q, Term x);
Term rev(Grade m, Grade p, Term x);
Term one(Grade p, Grade m, Term x);
Term comp(Grade m, Grade p, Term y, Term x);
Term bracket(Grade m, Term c1, Term c0);
Term pi(Term x);
Term v(Term x);
Term lam(Term x);
Term map(std::string name, Carrier target, Term x);

/// Rebuilds a node of the same shape over new children.
Term rebuild(const Node& shape, std::vector<Term> kids);

/// Variables usable by name in parsed terms.
struct VarDecl {
  Carrier carrier;
  Grade grade;
};
using VarTable = std::map<std::string, VarDecl>;

/// Parses the textual term syntax:
///   s(m,q,x) t(m,q,x) j(m,p,x) i(m,p,x) one(p,m,x) iota(p,m,x)
///   comp(m,p,y,x) bracket(m,c1,c0) pi(x) v(x) lam(x) map(F,Carrier,x)
///   ?x  ?x:C  ?x@m  ?x:G@m   (metas)   and declared variable names.
/// Throws Error(ParseError), Error(UnresolvedIdentifier), Error(IllTypedTerm).
Term parse_term(std::string_view text, const VarTable& vars = {});

}  // namespace globforge::engine
