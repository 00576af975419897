#include "globforge/engine/term.hpp"

#include <cctype>
#include <charconv>

#include "globforge/error.hpp"

namespace globforge::engine {

namespace {

[[noreturn]] void ill_typed(const std::string& msg) {
  throw Error(ErrorKind::IllTypedTerm, msg);
}

Term make(Node n) { return std::make_shared<const Node>(std::move(n)); }

void expect_grade(const Term& x, const Grade& g, const char* op) {
  if (x->grade_known && x->grade != g)
    ill_typed(std::string(op) + ": argument " + print(x) + " has grade " +
              x->grade.str() + ", expected " + g.str());
}

bool same_carrier(Carrier a, Carrier b) {
  return a == b || a == Carrier::Var || b == Carrier::Var;
}

Term boundary(Op op, Grade m, Grade q, Term x) {
  expect_grade(x, m, op == Op::Src ? "s" : "t");
  Node n;
  n.op = op;
  n.carrier = x->carrier;
  n.grade = q;
  n.g1 = std::move(m);
  n.g2 = std::move(q);
  n.kids = {std::move(x)};
  return make(std::move(n));
}

Term unary(Op op, Carrier from, Carrier to, Term x, const char* name) {
  if (!same_carrier(x->carrier, from))
    ill_typed(std::string(name) + ": argument " + print(x) + " lives in " +
              to_string(x->carrier) + ", expected " + to_string(from));
  Node n;
  n.op = op;
  n.carrier = to;
  n.grade = x->grade;
  n.grade_known = x->grade_known;
  n.kids = {std::move(x)};
  return make(std::move(n));
}

int compare(const Term& a, const Term& b);

int compare_grade(const Grade& a, const Grade& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int compare(const Term& a, const Term& b) {
  if (a == b) return 0;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (a->carrier != b->carrier) return a->carrier < b->carrier ? -1 : 1;
  if (int c = compare_grade(a->grade, b->grade)) return c;
  if (a->grade_known != b->grade_known) return a->grade_known ? 1 : -1;
  if (int c = compare_grade(a->g1, b->g1)) return c;
  if (int c = compare_grade(a->g2, b->g2)) return c;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->kids.size() != b->kids.size())
    return a->kids.size() < b->kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = compare(a->kids[i], b->kids[i])) return c;
  return 0;
}

}  // namespace

const char* to_string(Carrier c) {
  switch (c) {
    case Carrier::M: return "M";
    case Carrier::C: return "C";
    case Carrier::Cp: return "Cp";
    case Carrier::G: return "G";
    case Carrier::MM: return "MM";
    case Carrier::Var: return "X";
  }
  return "?";
}

Carrier parse_carrier(std::string_view s) {
  if (s == "M") return Carrier::M;
  if (s == "C") return Carrier::C;
  if (s == "Cp") return Carrier::Cp;
  if (s == "G") return Carrier::G;
  if (s == "MM") return Carrier::MM;
  if (s == "X") return Carrier::Var;
  throw Error(ErrorKind::ParseError, "unknown carrier '" + std::string(s) + "'");
}

std::string Grade::str() const {
  if (var.empty()) return std::to_string(offset);
  if (offset == 0) return var;
  return var + (offset > 0 ? "+" : "") + std::to_string(offset);
}

Grade parse_grade(std::string_view s) {
  auto bad = [&] {
    throw Error(ErrorKind::ParseError, "bad grade '" + std::string(s) + "'");
  };
  auto number = [&](std::string_view d) {
    long v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || p != d.data() + d.size() || d.empty()) bad();
    return v;
  };
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) bad();
  if (std::isdigit(static_cast<unsigned char>(s.front()))) return Grade(number(s));
  std::size_t i = 0;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
    ++i;
  std::string v(s.substr(0, i));
  if (i == s.size()) return Grade(v);
  char sign = s[i];
  if (sign != '+' && sign != '-') bad();
  long k = number(s.substr(i + 1));
  return Grade(v, sign == '+' ? k : -k);
}

bool equal(const Term& a, const Term& b) { return compare(a, b) == 0; }
bool less(const Term& a, const Term& b) { return compare(a, b) < 0; }

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const auto& k : t->kids) n += term_size(k);
  return n;
}

std::string print(const Term& t) {
  const Node& n = *t;
  auto g = [](const Grade& x) { return x.str(); };
  switch (n.op) {
    case Op::Var: return n.name;
    case Op::Meta: return "?" + n.name;
    case Op::Src:
    case Op::Tgt:
      return std::string(n.op == Op::Src ? "s(" : "t(") + g(n.g1) + "," +
             g(n.g2) + "," + print(n.kids[0]) + ")";
    case Op::Rev:
      return std::string(n.carrier == Carrier::G ? "i(" : "j(") + g(n.g1) +
             "," + g(n.g2) + "," + print(n.kids[0]) + ")";
    case Op::One:
      return std::string(n.carrier == Carrier::G ? "iota(" : "one(") + g(n.g1) +
             "," + g(n.g2) + "," + print(n.kids[0]) + ")";
    case Op::Comp:
      return "comp(" + g(n.g1) + "," + g(n.g2) + "," + print(n.kids[0]) + "," +
             print(n.kids[1]) + ")";
    case Op::Bracket:
      return "bracket(" + g(n.g1) + "," + print(n.kids[0]) + "," +
             print(n.kids[1]) + ")";
    case Op::Pi: return "pi(" + print(n.kids[0]) + ")";
    case Op::V: return "v(" + print(n.kids[0]) + ")";
    case Op::Lam: return "lam(" + print(n.kids[0]) + ")";
    case Op::Map:
      return "map(" + n.name + "," + to_string(n.carrier) + "," +
             print(n.kids[0]) + ")";
  }
  return "?";
}

Term var(std::string name, Carrier c, Grade g) {
  Node n;
  n.op = Op::Var;
  n.carrier = c;
  n.grade = std::move(g);
  n.name = std::move(name);
  return make(std::move(n));
}

Term meta(std::string name, Carrier c) {
  Node n;
  n.op = Op::Meta;
  n.carrier = c;
  n.grade_known = false;
  n.name = std::move(name);
  return make(std::move(n));
}

Term meta(std::string name, Carrier c, Grade g) {
  Node n;
  n.op = Op::Meta;
  n.carrier = c;
  n.grade = std::move(g);
  n.name = std::move(name);
  return make(std::move(n));
}

Term src(Grade m, Grade q, Term x) {
  return boundary(Op::Src, std::move(m), std::move(q), std::move(x));
}

Term tgt(Grade m, Grade q, Term x) {
  return boundary(Op::Tgt, std::move(m), std::move(q), std::move(x));
}

Term rev(Grade m, Grade p, Term x) {
  expect_grade(x, m, "j");
  Node n;
  n.op = Op::Rev;
  n.carrier = x->carrier;
  n.grade = m;
  n.g1 = std::move(m);
  n.g2 = std::move(p);
  n.kids = {std::move(x)};
  return make(std::move(n));
}

Term one(Grade p, Grade m, Term x) {
  expect_grade(x, p, "one");
  Node n;
  n.op = Op::One;
  n.carrier = x->carrier;
  n.grade = m;
  n.g1 = std::move(p);
  n.g2 = std::move(m);
  n.kids = {std::move(x)};
  return make(std::move(n));
}

Term comp(Grade m, Grade p, Term y, Term x) {
  expect_grade(y, m, "comp");
  expect_grade(x, m, "comp");
  if (!same_carrier(x->carrier, y->carrier))
    ill_typed("comp: factors " + print(y) + " and " + print(x) +
              " live in different carriers");
  Node n;
  n.op = Op::Comp;
  n.carrier = x->carrier == Carrier::Var ? y->carrier : x->carrier;
  n.grade = m;
  n.g1 = std::move(m);
  n.g2 = std::move(p);
  n.kids = {std::move(y), std::move(x)};
  return make(std::move(n));
}

Term bracket(Grade m, Term c1, Term c0) {
  expect_grade(c1, m, "bracket");
  expect_grade(c0, m, "bracket");
  for (const Term* c : {&c1, &c0})
    if (!same_carrier((*c)->carrier, Carrier::M))
      ill_typed("bracket: " + print(*c) + " is not a term of M");
  Node n;
  n.op = Op::Bracket;
  n.carrier = Carrier::M;
  n.grade = m + 1;
  n.g1 = std::move(m);
  n.kids = {std::move(c1), std::move(c0)};
  return make(std::move(n));
}

Term pi(Term x) { return unary(Op::Pi, Carrier::M, Carrier::C, std::move(x), "pi"); }
Term v(Term x) { return unary(Op::V, Carrier::M, Carrier::G, std::move(x), "v"); }
Term lam(Term x) { return unary(Op::Lam, Carrier::G, Carrier::M, std::move(x), "lam"); }

Term map(std::string name, Carrier target, Term x) {
  Node n;
  n.op = Op::Map;
  n.carrier = target;
  n.grade = x->grade;
  n.grade_known = x->grade_known;
  n.name = std::move(name);
  n.kids = {std::move(x)};
  return make(std::move(n));
}

Term rebuild(const Node& shape, std::vector<Term> kids) {
  switch (shape.op) {
    case Op::Var:
    case Op::Meta: return make(shape);
    case Op::Src: return src(shape.g1, shape.g2, kids.at(0));
    case Op::Tgt: return tgt(shape.g1, shape.g2, kids.at(0));
    case Op::Rev: return rev(shape.g1, shape.g2, kids.at(0));
    case Op::One: return one(shape.g1, shape.g2, kids.at(0));
    case Op::Comp: return comp(shape.g1, shape.g2, kids.at(0), kids.at(1));
    case Op::Bracket: return bracket(shape.g1, kids.at(0), kids.at(1));
    case Op::Pi: return pi(kids.at(0));
    case Op::V: return v(kids.at(0));
    case Op::Lam: return lam(kids.at(0));
    case Op::Map: return map(shape.name, shape.carrier, kids.at(0));
  }
  ill_typed("unknown operator");
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const VarTable& vars)
      : s_(text), vars_(vars) {}

  Term parse() {
    Term t = term();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at offset " + std::to_string(i_) + " in '" +
                    std::string(s_) + "'");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::string ident() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
            s_[i_] == '\''))
      ++i_;
    if (b == i_) fail("expected identifier");
    return std::string(s_.substr(b, i_ - b));
  }

  Grade grade() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ')') ++i_;
    return parse_grade(s_.substr(b, i_ - b));
  }

  Term term() {
    if (peek('?')) {
      ++i_;
      std::string name = ident();
      Carrier c = Carrier::Var;
      if (peek(':')) {
        ++i_;
        c = parse_carrier(ident());
      }
      if (peek('@')) {
        ++i_;
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ')') ++i_;
        return meta(name, c, parse_grade(s_.substr(b, i_ - b)));
      }
      return meta(name, c);
    }
    std::string id = ident();
    if (!peek('(')) {
      auto it = vars_.find(id);
      if (it == vars_.end())
        throw Error(ErrorKind::UnresolvedIdentifier, "undeclared variable '" + id + "'");
      return var(id, it->second.carrier, it->second.grade);
    }
    expect('(');
    Term out;
    if (id == "s" || id == "t" || id == "j" || id == "i" || id == "one" ||
        id == "iota") {
      Grade a = grade();
      expect(',');
      Grade b = grade();
      expect(',');
      Term x = term();
      if (id == "s") out = src(a, b, x);
      else if (id == "t") out = tgt(a, b, x);
      else if (id == "j" || id == "i") out = rev(a, b, x);
      else out = one(a, b, x);
    } else if (id == "comp") {
      Grade a = grade();
      expect(',');
      Grade b = grade();
      expect(',');
      Term y = term();
      expect(',');
      Term x = term();
      out = comp(a, b, y, x);
    } else if (id == "bracket") {
      Grade a = grade();
      expect(',');
      Term c1 = term();
      expect(',');
      Term c0 = term();
      out = bracket(a, c1, c0);
    } else if (id == "pi" || id == "v" || id == "lam") {
      Term x = term();
      out = id == "pi" ? pi(x) : id == "v" ? v(x) : lam(x);
    } else if (id == "map") {
      std::string name;
      if (peek('?')) {
        ++i_;
        name = "?" + ident();
      } else {
        name = ident();
      }
      expect(',');
      Carrier c = parse_carrier(ident());
      expect(',');
      out = map(name, c, term());
    } else {
      throw Error(ErrorKind::UnresolvedIdentifier, "unknown operator '" + id + "'");
    }
    expect(')');
    return out;
  }

  std::string_view s_;
  const VarTable& vars_;
  std::size_t i_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const VarTable& vars) {
  return TermParser(text, vars).parse();
}

}  // namespace globforge::engine
