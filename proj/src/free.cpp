#include "globforge/free.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "globforge/error.hpp"

namespace globforge {

CellIndex step_tail(const GlobularSet& g, Step s) {
  return s.inverse ? g.target(1, s.edge) : g.source(1, s.edge);
}

CellIndex step_head(const GlobularSet& g, Step s) {
  return s.inverse ? g.source(1, s.edge) : g.target(1, s.edge);
}

CellIndex word_target(const GlobularSet& g, const Word& w) {
  return w.steps.empty() ? w.base : step_head(g, w.steps.front());
}

void check_word(const GlobularSet& g, const Word& w) {
  if (w.base >= g.size(0))
    throw Error(ErrorKind::MalformedWord, "word has no valid base 0-cell");
  CellIndex at = w.base;
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (it->edge >= g.size(1))
      throw Error(ErrorKind::MalformedWord, "word uses an unknown edge");
    if (step_tail(g, *it) != at)
      throw Error(ErrorKind::MalformedWord,
                  "step " + g.name(1, it->edge) + (it->inverse ? "-" : "+") +
                      " does not start where the previous step ends");
    at = step_head(g, *it);
  }
}

Word reduce_word(const GlobularSet& g, const Word& w) {
  check_word(g, w);
  std::vector<Step> stack;  // application order
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (!stack.empty() && stack.back().edge == it->edge &&
        stack.back().inverse != it->inverse)
      stack.pop_back();
    else
      stack.push_back(*it);
  }
  std::reverse(stack.begin(), stack.end());
  return Word{w.base, std::move(stack)};
}

std::string word_name(const GlobularSet& g, const Word& w) {
  if (w.steps.empty()) return "1_" + g.name(0, w.base);
  std::string out;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    if (i) out += '.';
    out += g.name(1, w.steps[i].edge);
    out += w.steps[i].inverse ? '-' : '+';
  }
  return out;
}

Word parse_word(const GlobularSet& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string token;
  bool first = true;
  while (in >> token) {
    if (token.front() == '@') {
      if (!first)
        throw Error(ErrorKind::ParseError, "word base must come first");
      w.base = g.index_of(0, token.substr(1));
    } else {
      Step s;
      if (token.size() > 1 && (token.back() == '+' || token.back() == '-')) {
        s.inverse = token.back() == '-';
        token.pop_back();
      }
      s.edge = g.index_of(1, token);
      w.steps.push_back(s);
    }
    first = false;
  }
  if (w.base == kNoCell) {
    if (w.steps.empty())
      throw Error(ErrorKind::ParseError, "empty word needs a base '@<cell>'");
    w.base = step_tail(g, w.steps.back());
  }
  check_word(g, w);
  return w;
}

FreeGroupoid free_groupoid_cells(const GlobularSet& g, std::size_t max_len) {
  if (g.max_dim() > 1)
    throw Error(ErrorKind::UnsupportedDimension,
                "free groupoid needs generators of dimension at most 1");
  FreeGroupoid out;
  InfinityMagma& mag = out.category.magma;
  out.category.threshold = 0;
  mag.gs = GlobularSet(1);
  for (CellIndex a = 0; a < g.size(0); ++a) mag.gs.add_cell(0, g.name(0, a));

  std::vector<Step> steps;
  for (CellIndex e = 0; e < g.size(1); ++e)
    for (bool inv : {false, true}) steps.push_back(Step{e, inv});

  std::vector<Word> layer;
  for (CellIndex a = 0; a < g.size(0); ++a) layer.push_back(Word{a, {}});
  for (std::size_t len = 0;; ++len) {
    out.words.insert(out.words.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<Word> next;
    for (const Word& w : layer) {
      const CellIndex head = word_target(g, w);
      for (Step s : steps) {
        if (step_tail(g, s) != head) continue;
        if (!w.steps.empty() && w.steps.front().edge == s.edge &&
            w.steps.front().inverse != s.inverse)
          continue;
        Word v{w.base, {s}};
        v.steps.insert(v.steps.end(), w.steps.begin(), w.steps.end());
        next.push_back(std::move(v));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }

  std::map<Word, CellIndex> index;
  for (const Word& w : out.words) {
    const CellIndex i = mag.gs.add_cell(1, word_name(g, w));
    mag.gs.set_source(1, i, w.base);
    mag.gs.set_target(1, i, word_target(g, w));
    index.emplace(w, i);
  }
  for (CellIndex a = 0; a < g.size(0); ++a)
    mag.refl.set(0, 1, a, index.at(Word{a, {}}));

  out.reversal.threshold = 0;
  mag.comp.partial = false;
  for (CellIndex x = 0; x < out.words.size(); ++x) {
    const Word& wx = out.words[x];
    Word rx{word_target(g, wx), {}};
    for (auto it = wx.steps.rbegin(); it != wx.steps.rend(); ++it)
      rx.steps.push_back(Step{it->edge, !it->inverse});
    out.reversal.set(1, 0, x, index.at(rx));
    for (CellIndex y = 0; y < out.words.size(); ++y) {
      const Word& wy = out.words[y];
      if (wy.base != word_target(g, wx)) continue;
      Word cat{wx.base, wy.steps};
      cat.steps.insert(cat.steps.end(), wx.steps.begin(), wx.steps.end());
      auto it = index.find(reduce_word(g, cat));
      if (it == index.end())
        mag.comp.partial = true;
      else
        mag.comp.set(1, 0, y, x, it->second);
    }
  }
  return out;
}

StrictModel::StrictModel(const GlobularSet& g, Dim threshold)
    : g_(&g), n_(threshold) {
  if (g.max_dim() > 2)
    throw Error(ErrorKind::UnsupportedDimension,
                "normal forms need generators of dimension at most 2");
  if (threshold == 0 && g.size(2) > 0)
    throw Error(ErrorKind::UnsupportedDimension,
                "2-generators with threshold 0 are not supported");
}

StrictCell StrictModel::gen(Dim m, CellIndex x) const {
  const GlobularSet& g = *g_;
  if (m > g.max_dim() || x >= g.size(m))
    throw Error(ErrorKind::UnknownCell, "no generator of that dimension");
  switch (m) {
    case 0: return StrictCell{0, x, {}, {}};
    case 1: return StrictCell{1, g.source(1, x), {Step{x, false}}, {}};
    default: {
      const CellIndex f = g.source(2, x), h = g.target(2, x);
      return StrictCell{
          2, g.source(1, f), {},
          {Column{Step{f, false}, Step{h, false}, {VStep{x, false}}}}};
    }
  }
}

StrictCell StrictModel::refl(const StrictCell& c) const {
  switch (c.dim) {
    case 0: return StrictCell{1, c.base, {}, {}};
    case 1: {
      StrictCell r{2, c.base, {}, {}};
      for (Step s : c.steps) r.columns.push_back(Column{s, s, {}});
      return r;
    }
    case 2: {
      StrictCell r = c;
      r.dim = 3;
      return r;
    }
    default:
      throw Error(ErrorKind::UnsupportedDimension,
                  "normal forms stop at dimension 3");
  }
}

StrictCell StrictModel::refl(const StrictCell& c, Dim m) const {
  StrictCell r = c;
  while (r.dim < m) r = refl(r);
  return r;
}

StrictCell StrictModel::face1(const StrictCell& c, bool target) const {
  switch (c.dim) {
    case 0:
      throw Error(ErrorKind::DimensionOutOfRange, "0-cells have no faces");
    case 1:
      return StrictCell{0, target ? word_target(*g_, Word{c.base, c.steps}) : c.base,
                        {}, {}};
    case 2: {
      StrictCell r{1, c.base, {}, {}};
      for (const Column& col : c.columns)
        r.steps.push_back(target ? col.tgt : col.src);
      return r;
    }
    default: {
      StrictCell r = c;
      r.dim = 2;
      return r;
    }
  }
}

StrictCell StrictModel::source(const StrictCell& c) const { return face1(c, false); }
StrictCell StrictModel::target(const StrictCell& c) const { return face1(c, true); }

StrictCell StrictModel::face(const StrictCell& c, Dim q, Side side) const {
  if (q >= c.dim)
    throw Error(ErrorKind::DimensionOutOfRange, "face above the cell");
  StrictCell r = c;
  while (r.dim > q) r = face1(r, side == Side::Target);
  return r;
}

void StrictModel::reduce_columns(StrictCell& c) const {
  if (n_ <= 1) {
    for (Column& col : c.columns) {
      std::vector<VStep> stack;
      for (auto it = col.word.rbegin(); it != col.word.rend(); ++it) {
        if (!stack.empty() && stack.back().gen == it->gen &&
            stack.back().inverse != it->inverse)
          stack.pop_back();
        else
          stack.push_back(*it);
      }
      col.word.assign(stack.rbegin(), stack.rend());
    }
  }
  if (n_ == 0) {
    // no 2-generators, so every column is an identity
    Word w{c.base, {}};
    for (const Column& col : c.columns) w.steps.push_back(col.src);
    w = reduce_word(*g_, w);
    c.columns.clear();
    for (Step s : w.steps) c.columns.push_back(Column{s, s, {}});
  }
}

StrictCell StrictModel::comp(Dim p, const StrictCell& y,
                             const StrictCell& x) const {
  if (y.dim != x.dim || p >= x.dim)
    throw Error(ErrorKind::IllTypedTerm, "composite of mismatched dimensions");
  if (face(y, p, Side::Source) != face(x, p, Side::Target))
    throw Error(ErrorKind::IllTypedTerm,
                "composite of non-composable cells " + name(y) + " and " +
                    name(x));
  StrictCell r{x.dim, x.base, {}, {}};
  switch (x.dim) {
    case 1:
      r.steps = y.steps;
      r.steps.insert(r.steps.end(), x.steps.begin(), x.steps.end());
      if (n_ == 0) r.steps = reduce_word(*g_, Word{r.base, r.steps}).steps;
      return r;
    case 2:
      if (p == 0) {
        r.columns = y.columns;
        r.columns.insert(r.columns.end(), x.columns.begin(), x.columns.end());
      } else {
        for (std::size_t i = 0; i < x.columns.size(); ++i) {
          Column col{x.columns[i].src, y.columns[i].tgt, y.columns[i].word};
          col.word.insert(col.word.end(), x.columns[i].word.begin(),
                          x.columns[i].word.end());
          r.columns.push_back(std::move(col));
        }
      }
      reduce_columns(r);
      return r;
    default: {
      if (p == 2) return x;
      StrictCell a = y, b = x;
      a.dim = b.dim = 2;
      r = comp(p, a, b);
      r.dim = 3;
      return r;
    }
  }
}

StrictCell StrictModel::rev(Dim p, const StrictCell& x) const {
  if (p < n_ || p >= x.dim)
    throw Error(ErrorKind::IllTypedTerm,
                "no reversor at level " + std::to_string(p) + " on a " +
                    std::to_string(x.dim) + "-cell");
  StrictCell r{x.dim, x.base, {}, {}};
  switch (x.dim) {
    case 1:
      r.base = word_target(*g_, Word{x.base, x.steps});
      for (auto it = x.steps.rbegin(); it != x.steps.rend(); ++it)
        r.steps.push_back(Step{it->edge, !it->inverse});
      return r;
    case 2:
      if (p == 0) {
        r.base = face(x, 0, Side::Target).base;
        for (auto it = x.columns.rbegin(); it != x.columns.rend(); ++it) {
          const Step s{it->src.edge, !it->src.inverse};
          r.columns.push_back(Column{s, s, {}});
        }
      } else {
        for (const Column& col : x.columns) {
          Column c{col.tgt, col.src, {}};
          for (auto it = col.word.rbegin(); it != col.word.rend(); ++it)
            c.word.push_back(VStep{it->gen, !it->inverse});
          r.columns.push_back(std::move(c));
        }
      }
      return r;
    default: {
      if (p == 2) return x;
      StrictCell a = x;
      a.dim = 2;
      r = rev(p, a);
      r.dim = 3;
      return r;
    }
  }
}

std::string StrictModel::name(const StrictCell& c) const {
  const GlobularSet& g = *g_;
  switch (c.dim) {
    case 0: return g.name(0, c.base);
    case 1: return word_name(g, Word{c.base, c.steps});
    default: {
      std::string out = c.dim == 3 ? "1{" : "{";
      if (c.columns.empty()) out += "1_" + g.name(0, c.base);
      for (std::size_t i = 0; i < c.columns.size(); ++i) {
        if (i) out += " | ";
        const Column& col = c.columns[i];
        if (col.word.empty()) {
          out += g.name(1, col.src.edge);
          out += col.src.inverse ? '-' : '+';
        }
        for (std::size_t k = 0; k < col.word.size(); ++k) {
          if (k) out += '.';
          out += g.name(2, col.word[k].gen);
          out += col.word[k].inverse ? '-' : '+';
        }
      }
      return out + "}";
    }
  }
}

}  // namespace globforge
