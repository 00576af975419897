#include "globforge/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "globforge/error.hpp"

namespace globforge {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         c == '.' || c == '+' || c == '-' || c == '*';
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t lineno) : lineno_(lineno) {
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == ':' || c == '=' || c == '(' || c == ')' || c == ',') {
        toks_.push_back({std::string(1, c), i + 1});
        ++i;
      } else if (ident_char(c)) {
        std::size_t b = i;
        while (i < line.size() && ident_char(line[i])) ++i;
        toks_.push_back({std::string(line.substr(b, i - b)), b + 1});
      } else {
        fail(ErrorKind::ParseError, i + 1, std::string("unexpected character '") + c + "'");
      }
    }
    end_col_ = line.size() + 1;
  }

  bool empty() const { return toks_.empty(); }
  bool done() const { return pos_ == toks_.size(); }
  std::size_t col() const { return done() ? end_col_ : toks_[pos_].col; }

  [[noreturn]] void fail(ErrorKind k, std::size_t col, const std::string& msg) const {
    throw Error(k, "line " + std::to_string(lineno_) + ", column " + std::to_string(col) +
                       ": " + msg);
  }
  [[noreturn]] void fail(ErrorKind k, const std::string& msg) const { fail(k, col(), msg); }

  const Token& next(const char* what) {
    if (done()) fail(ErrorKind::ParseError, std::string("expected ") + what);
    return toks_[pos_++];
  }

  void expect(const char* punct) {
    const Token& t = next(punct);
    if (t.text != punct)
      fail(ErrorKind::ParseError, t.col, std::string("expected '") + punct + "', found '" +
                                             t.text + "'");
  }

  Dim number() {
    const Token& t = next("a number");
    Dim v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail(ErrorKind::ParseError, t.col, "expected a number, found '" + t.text + "'");
    return v;
  }

  const Token& ident() {
    const Token& t = next("an identifier");
    if (t.text.size() == 1 && !ident_char(t.text[0]))
      fail(ErrorKind::ParseError, t.col, "expected an identifier, found '" + t.text + "'");
    return t;
  }

  void finish() {
    if (!done()) fail(ErrorKind::ParseError, "unexpected '" + toks_[pos_].text + "'");
  }

  std::size_t lineno() const { return lineno_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t lineno_;
  std::size_t end_col_ = 1;
};

struct Block {
  Structure s;
  bool explicit_dim = false;
  std::map<std::string, CellRef> names;
};

CellRef lookup(const Block& b, LineParser& lp, const Token& t) {
  auto it = b.names.find(t.text);
  if (it == b.names.end())
    lp.fail(ErrorKind::UnresolvedIdentifier, t.col, "unknown cell '" + t.text + "'");
  return it->second;
}

CellRef cell_at(const Block& b, LineParser& lp, Dim m, const char* role) {
  const Token& t = lp.ident();
  CellRef c = lookup(b, lp, t);
  if (c.dim != m)
    lp.fail(ErrorKind::GradeMismatch, t.col,
            std::string(role) + " '" + t.text + "' has grade " + std::to_string(c.dim) +
                ", expected " + std::to_string(m));
  return c;
}

void grow(Block& b, LineParser& lp, Dim m, std::size_t col) {
  if (m <= b.s.cells.max_dim()) return;
  if (b.explicit_dim)
    lp.fail(ErrorKind::DimensionOutOfRange, col,
            "grade " + std::to_string(m) + " exceeds dim " + std::to_string(b.s.cells.max_dim()));
  b.s.cells.set_max_dim(m);
}

void face_line(Block& b, LineParser& lp, bool target) {
  const Token& t = lp.ident();
  CellRef x = lookup(b, lp, t);
  if (x.dim == 0)
    lp.fail(ErrorKind::GradeMismatch, t.col, "'" + t.text + "' is a 0-cell and has no faces");
  lp.expect("=");
  CellRef y = cell_at(b, lp, x.dim - 1, "face");
  if (target)
    b.s.cells.set_target(x.dim, x.index, y.index);
  else
    b.s.cells.set_source(x.dim, x.index, y.index);
}

void check_level(LineParser& lp, std::size_t col, Dim lo, Dim hi, const char* what) {
  if (lo >= hi)
    lp.fail(ErrorKind::GradeMismatch, col,
            std::string(what) + " needs " + std::to_string(lo) + " < " + std::to_string(hi));
}

}  // namespace

const Structure* Presentation::find(std::string_view name) const {
  for (const auto& s : structures)
    if (s.name == name) return &s;
  return nullptr;
}

Presentation parse_presentation(std::string_view text) {
  std::vector<Block> blocks(1);
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    LineParser lp(line, lineno);
    if (lp.empty()) continue;
    const Token kw = lp.ident();
    Block& b = blocks.back();
    if (kw.text == "structure") {
      const Token& name = lp.ident();
      for (const auto& other : blocks)
        if (other.s.name == name.text)
          lp.fail(ErrorKind::DuplicateDeclaration, name.col,
                  "structure '" + name.text + "' declared twice");
      bool fresh = blocks.size() == 1 && b.s.name.empty() && b.names.empty() &&
                   !b.explicit_dim && !b.s.has_threshold;
      if (!fresh) blocks.emplace_back();
      blocks.back().s.name = name.text;
    } else if (kw.text == "dim") {
      std::size_t col = lp.col();
      Dim d = lp.number();
      if (b.explicit_dim)
        lp.fail(ErrorKind::DuplicateDeclaration, kw.col, "dim declared twice");
      for (Dim m = d + 1; m <= b.s.cells.max_dim(); ++m)
        if (b.s.cells.size(m) > 0)
          lp.fail(ErrorKind::DimensionOutOfRange, col,
                  "cells of grade " + std::to_string(m) + " already declared");
      b.s.cells.set_max_dim(d);
      b.explicit_dim = true;
    } else if (kw.text == "threshold") {
      if (b.s.has_threshold)
        lp.fail(ErrorKind::DuplicateDeclaration, kw.col, "threshold declared twice");
      b.s.threshold = lp.number();
      b.s.has_threshold = true;
      b.s.rev.threshold = b.s.threshold;
    } else if (kw.text == "cells") {
      std::size_t col = lp.col();
      Dim m = lp.number();
      lp.expect(":");
      grow(b, lp, m, col);
      while (!lp.done()) {
        const Token& t = lp.ident();
        if (b.names.count(t.text))
          lp.fail(ErrorKind::DuplicateDeclaration, t.col, "cell '" + t.text + "' declared twice");
        CellIndex i = b.s.cells.add_cell(m, t.text);
        b.names.emplace(t.text, CellRef{m, i});
      }
    } else if (kw.text == "src" || kw.text == "tgt") {
      face_line(b, lp, kw.text == "tgt");
    } else if (kw.text == "refl") {
      std::size_t col = lp.col();
      Dim p = lp.number();
      Dim m = lp.number();
      check_level(lp, col, p, m, "refl");
      CellRef x = cell_at(b, lp, p, "argument");
      lp.expect("=");
      CellRef y = cell_at(b, lp, m, "value");
      b.s.refl.set(p, m, x.index, y.index);
      b.s.has_refl = true;
    } else if (kw.text == "comp") {
      std::size_t col = lp.col();
      Dim m = lp.number();
      Dim p = lp.number();
      check_level(lp, col, p, m, "comp");
      lp.expect("(");
      CellRef y = cell_at(b, lp, m, "factor");
      lp.expect(",");
      CellRef x = cell_at(b, lp, m, "factor");
      lp.expect(")");
      lp.expect("=");
      CellRef r = cell_at(b, lp, m, "value");
      b.s.comp.set(m, p, y.index, x.index, r.index);
      b.s.has_comp = true;
    } else if (kw.text == "rev") {
      std::size_t col = lp.col();
      Dim m = lp.number();
      Dim p = lp.number();
      check_level(lp, col, p, m, "rev");
      CellRef x = cell_at(b, lp, m, "argument");
      lp.expect("=");
      CellRef y = cell_at(b, lp, m, "value");
      b.s.rev.set(m, p, x.index, y.index);
      b.s.has_rev = true;
    } else if (kw.text == "partial") {
      if (lp.done()) lp.fail(ErrorKind::ParseError, "expected rev, refl or comp");
      while (!lp.done()) {
        const Token& t = lp.ident();
        if (t.text == "rev") b.s.rev.partial = true;
        else if (t.text == "refl") b.s.refl.partial = true;
        else if (t.text == "comp") b.s.comp.partial = true;
        else lp.fail(ErrorKind::ParseError, t.col, "expected rev, refl or comp");
      }
    } else if (kw.text == "over") {
      const Token& t = lp.ident();
      if (!b.s.over.empty())
        lp.fail(ErrorKind::DuplicateDeclaration, kw.col, "base declared twice");
      bool known = false;
      for (std::size_t i = 0; i + 1 < blocks.size(); ++i) known |= blocks[i].s.name == t.text;
      if (!known)
        lp.fail(ErrorKind::UnresolvedIdentifier, t.col, "unknown structure '" + t.text + "'");
      b.s.over = t.text;
    } else if (kw.text == "pi") {
      if (b.s.over.empty())
        lp.fail(ErrorKind::ParseError, kw.col, "pi needs an 'over' declaration first");
      const Block* base = nullptr;
      for (const auto& o : blocks)
        if (o.s.name == b.s.over) base = &o;
      Dim m = lp.number();
      CellRef x = cell_at(b, lp, m, "cell");
      lp.expect("=");
      CellRef y = cell_at(*base, lp, m, "image");
      b.s.pi.push_back({m, x.index, y.index});
    } else if (kw.text == "bracket") {
      Dim m = lp.number();
      lp.expect("(");
      CellRef c1 = cell_at(b, lp, m, "bracket target");
      lp.expect(",");
      CellRef c0 = cell_at(b, lp, m, "bracket source");
      lp.expect(")");
      lp.expect("=");
      CellRef k = cell_at(b, lp, m + 1, "bracket cell");
      b.s.brackets.push_back({m, c1.index, c0.index, k.index});
    } else {
      lp.fail(ErrorKind::ParseError, kw.col, "unknown keyword '" + kw.text + "'");
    }
    lp.finish();
  }

  Presentation out;
  for (auto& b : blocks) out.structures.push_back(std::move(b.s));
  return out;
}

Stretching to_stretching(const Presentation& p, const Structure& m) {
  const Structure* base = p.find(m.over);
  if (m.over.empty() || !base)
    throw Error(ErrorKind::UnresolvedIdentifier,
                "structure '" + m.name + "' has no base structure");
  Stretching e;
  e.m.magma = m.magma();
  e.m.rev = m.rev;
  e.c = base->magma();
  if (base->has_rev) {
    e.c_rev = base->rev;
  } else {
    try {
      e.c_rev = derive_canonical_reversors(e.c, base->threshold);
    } catch (const Error&) {
      e.c_rev = ReversorStructure{};
      e.c_rev.threshold = base->threshold;
      e.c_rev.partial = true;
    }
  }
  const Dim top = m.cells.max_dim();
  e.pi.assign(top + 1, {});
  for (Dim d = 0; d <= top; ++d) e.pi[d].assign(m.cells.size(d), kNoCell);
  for (const auto& x : m.pi) e.pi[x.m][x.x] = x.y;
  e.bracket.assign(top + 1, {});
  for (const auto& b : m.brackets)
    if (b.m < e.bracket.size()) e.bracket[b.m][{b.c1, b.c0}] = b.cell;
  return e;
}

namespace {

void absorb(ValidationReport& into, ValidationReport r, const Structure& s) {
  if (!s.name.empty())
    for (auto& v : r.violations)
      for (auto& c : v.cells) c = s.name + "/" + c;
  into.merge(r);
}

}  // namespace

ValidationReport validate_structure(const Presentation& p, const Structure& s,
                                    const std::string& layer) {
  static const std::set<std::string> known = {"",          "all",       "globular",
                                              "reversors", "reflexors", "magma",
                                              "strict",    "stretching"};
  if (!known.count(layer)) throw Error(ErrorKind::UnresolvedIdentifier, "unknown layer " + layer);
  ValidationReport out;
  const bool all = layer.empty() || layer == "all";
  const bool forced = !all;
  auto want = [&](const char* l) { return all || layer == l; };
  if (want("globular")) absorb(out, validate_globular(s.cells), s);
  if (want("reversors") && (s.has_rev || forced)) {
    absorb(out, validate_reversors(s.cells, s.rev), s);
    absorb(out, validate_involutive(s.cells, s.rev), s);
    if (s.has_refl) absorb(out, validate_reflexive_compat(s.cells, s.refl, s.rev), s);
  }
  if (want("reflexors") && (s.has_refl || forced))
    absorb(out, validate_reflexors(s.cells, s.refl), s);
  if (want("magma") && (s.has_comp || forced)) absorb(out, validate_magma(s.magma()), s);
  if (layer == "strict" || (layer == "all" && s.has_comp))
    absorb(out, validate_strict(s.magma()), s);
  if (want("stretching") && !s.over.empty())
    absorb(out, validate_stretching(to_stretching(p, s)), s);
  return out;
}

}  // namespace globforge
