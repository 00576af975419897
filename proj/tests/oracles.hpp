#pragma once

// Reference implementations used to cross-check the library. They share no
// code with it beyond plain data.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// ---- word reduction --------------------------------------------------------

using Letter = std::pair<std::size_t, bool>;  // edge, inverse

inline bool cancels(const Letter& x, const Letter& y) {
  return x.first == y.first && x.second != y.second;
}

/// Removes the leftmost cancelling pair and rescans from the start until
/// nothing changes.
inline std::vector<Letter> fixpoint_reduce(std::vector<Letter> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (cancels(w[i], w[i + 1])) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
  }
  return w;
}

/// Cancels a uniformly chosen available pair at each step.
inline std::vector<Letter> random_order_reduce(std::vector<Letter> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (cancels(w[i], w[i + 1])) spots.push_back(i);
    if (spots.empty()) return w;
    const std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    w.erase(w.begin() + i, w.begin() + i + 2);
  }
}

// ---- bounded free stretching over one edge e: a -> b -------------------------

struct STerm;
using SPtr = std::shared_ptr<const STerm>;

/// Syntactic cell with its faces. `pi` is the projection: for 0-cells the
/// name, for 1-cells "<base>:" followed by the reduced signed word, for
/// 2-cells "1(" + pi of the source + ")" since the strict side has only
/// identity 2-cells.
struct STerm {
  std::string text;
  unsigned dim = 0;
  std::size_t size = 1;
  SPtr src, tgt;
  std::string base;           // 1-cells: 0-source
  std::vector<int> word;      // 1-cells: +1 for e, -1 for e-, composition order
  std::string pi() const {
    if (dim == 0) return text;
    if (dim == 1) {
      std::string s = base + ":";
      for (int x : word) s += x > 0 ? "+" : "-";
      return s;
    }
    return "1(" + src->pi() + ")";
  }
};

inline SPtr face(SPtr t, unsigned q, bool target) {
  while (t->dim > q) t = target ? t->tgt : t->src;
  return t;
}

inline std::vector<int> reduce_signed(std::vector<int> w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

inline SPtr s_comp(unsigned p, const SPtr& y, const SPtr& x) {
  auto t = std::make_shared<STerm>();
  t->text = "(" + y->text + " *" + std::to_string(p) + " " + x->text + ")";
  t->dim = x->dim;
  t->size = 1 + y->size + x->size;
  if (t->dim - 1 > p) {
    t->src = s_comp(p, y->src, x->src);
    t->tgt = s_comp(p, y->tgt, x->tgt);
  } else {
    t->src = x->src;
    t->tgt = y->tgt;
  }
  if (t->dim == 1) {
    t->base = x->base;
    std::vector<int> w = y->word;
    w.insert(w.end(), x->word.begin(), x->word.end());
    t->word = reduce_signed(w);
  }
  return t;
}

inline SPtr s_refl(const SPtr& a) {
  auto t = std::make_shared<STerm>();
  t->text = "1(" + a->text + ")";
  t->dim = a->dim + 1;
  t->size = 1 + a->size;
  t->src = t->tgt = a;
  if (t->dim == 1) t->base = a->text;
  return t;
}

inline SPtr s_rev(unsigned p, const SPtr& a) {
  auto t = std::make_shared<STerm>();
  t->text = "j" + std::to_string(p) + "(" + a->text + ")";
  t->dim = a->dim;
  t->size = 1 + a->size;
  if (t->dim == p + 1) {
    t->src = a->tgt;
    t->tgt = a->src;
  } else {
    t->src = s_rev(p, a->src);
    t->tgt = s_rev(p, a->tgt);
  }
  if (t->dim == 1) {
    t->base = a->tgt->text;
    for (auto it = a->word.rbegin(); it != a->word.rend(); ++it) t->word.push_back(-*it);
  }
  return t;
}

inline SPtr s_bracket(const SPtr& c1, const SPtr& c0) {
  auto t = std::make_shared<STerm>();
  t->text = "[" + c1->text + ", " + c0->text + "]";
  t->dim = c1->dim + 1;
  t->size = 1 + c1->size + c0->size;
  t->src = c0;
  t->tgt = c1;
  if (t->dim == 1) t->base = c0->text;
  return t;
}

inline bool s_parallel(const SPtr& x, const SPtr& y) {
  return x->dim == y->dim && (x->dim == 0 || (x->src->text == y->src->text &&
                                               x->tgt->text == y->tgt->text));
}

struct StretchEnumeration {
  std::vector<std::size_t> counts;  // per grade
  std::set<std::string> cells;
};

/// Cells of size <= max_size and dimension <= max_dim built from a, b, e by
/// composition, one-step reflexors, reversors at levels >= n and brackets
/// of distinct parallel cells with equal projection, the larger cell (by
/// size, then text) as target.
inline StretchEnumeration enumerate_edge_stretching(unsigned n, unsigned max_dim,
                                                    std::size_t max_size) {
  std::vector<std::vector<SPtr>> by_size(max_size + 1);
  std::set<std::string> seen;
  auto admit = [&](const SPtr& t) {
    if (t->dim <= max_dim && t->size <= max_size && seen.insert(t->text).second)
      by_size[t->size].push_back(t);
  };
  auto a = std::make_shared<STerm>();
  a->text = "a";
  auto b = std::make_shared<STerm>();
  b->text = "b";
  auto e = std::make_shared<STerm>();
  e->text = "e";
  e->dim = 1;
  e->src = a;
  e->tgt = b;
  e->base = "a";
  e->word = {1};
  admit(a);
  admit(b);
  admit(e);
  auto larger = [](const SPtr& x, const SPtr& y) {
    return x->size != y->size ? x->size > y->size : x->text > y->text;
  };
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const SPtr& t : by_size[s - 1]) {
      if (t->dim < max_dim) admit(s_refl(t));
      for (unsigned p = n; p < t->dim; ++p) admit(s_rev(p, t));
    }
    for (std::size_t s1 = 1; s1 + 2 <= s; ++s1) {
      const std::size_t s2 = s - 1 - s1;
      for (const SPtr& y : by_size[s1])
        for (const SPtr& x : by_size[s2]) {
          if (x->dim != y->dim) continue;
          for (unsigned p = 0; p < x->dim; ++p)
            if (face(y, p, false)->text == face(x, p, true)->text) admit(s_comp(p, y, x));
          if (x->dim < max_dim && x->text != y->text && s_parallel(y, x) &&
              y->pi() == x->pi() && larger(y, x))
            admit(s_bracket(y, x));
        }
    }
  }
  StretchEnumeration out;
  out.counts.assign(max_dim + 1, 0);
  for (const auto& grade : by_size)
    for (const SPtr& t : grade) {
      ++out.counts[t->dim];
      out.cells.insert(t->text);
    }
  return out;
}

// ---- closure of the strict 2-category axioms ----------------------------------

/// Terms over a (0-cell), f: a -> a, al, be: f => f built from one-step
/// reflexors and composites. Every 1-cell is f^k and every 2-cell is an
/// endomorphism of some f^k, so typing only tracks k.
struct CTerm {
  char op;  // 'a' 'f' 'A' 'B' gens, 'I' reflexor, '0' '1' composites
  int x = -1, y = -1;  // I: x; composites: y after x
  unsigned dim = 0;
  int len = 0;  // dim 1: k of f^k; dim 2: k of the boundary
  std::size_t size = 1;
};

class Closure {
 public:
  explicit Closure(std::size_t cap) {
    by_size_.resize(cap + 1);
    add({'a', -1, -1, 0, 0, 1});
    add({'f', -1, -1, 1, 1, 1});
    add({'A', -1, -1, 2, 1, 1});
    add({'B', -1, -1, 2, 1, 1});
    for (std::size_t s = 2; s <= cap; ++s) {
      for (int t : std::vector<int>(by_size_[s - 1]))
        if (terms_[t].dim < 2) add({'I', t, -1, terms_[t].dim + 1, terms_[t].len, s});
      for (std::size_t s1 = 1; s1 + 2 <= s; ++s1)
        for (int y : std::vector<int>(by_size_[s1]))
          for (int x : std::vector<int>(by_size_[s - 1 - s1])) {
            const CTerm ty = terms_[y], tx = terms_[x];
            if (ty.dim != tx.dim || ty.dim == 0) continue;
            add({'0', x, y, ty.dim, ty.len + tx.len, s});
            if (ty.dim == 2 && ty.len == tx.len) add({'1', x, y, 2, ty.len, s});
          }
    }
    parent_.resize(terms_.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    for (int t = 0; t < static_cast<int>(terms_.size()); ++t)
      for (int r : rewrites(t)) unite(t, r);
  }

  const std::vector<CTerm>& terms() const { return terms_; }
  int cls(int t) { return find(t); }

 private:
  using Key = std::tuple<char, int, int>;

  int add(CTerm t) {
    auto [it, inserted] = index_.emplace(Key{t.op, t.x, t.y}, static_cast<int>(terms_.size()));
    if (inserted) {
      terms_.push_back(t);
      by_size_[t.size].push_back(it->second);
    }
    return it->second;
  }

  /// -1 when the term is outside the enumerated set.
  int lookup(char op, int x, int y) const {
    auto it = index_.find(Key{op, x, y});
    return it == index_.end() ? -1 : it->second;
  }

  bool is_unit(int t, unsigned dim, unsigned level) const {
    // I applied (dim - level) times to a cell of dimension `level`
    const CTerm& c = terms_[t];
    if (dim == level) return c.dim == level;
    return c.op == 'I' && c.dim == dim && is_unit(c.x, dim - 1, level);
  }

  /// One-step rewrites of t at the root and under every position.
  std::vector<int> rewrites(int t) const {
    std::vector<int> out;
    const CTerm& c = terms_[t];
    auto push = [&](int r) {
      if (r >= 0) out.push_back(r);
    };
    if (c.op == '0' || c.op == '1') {
      const char op = c.op;
      const unsigned p = op - '0';
      const CTerm &y = terms_[c.y], &x = terms_[c.x];
      // associativity
      if (y.op == op) {
        const int inner = lookup(op, c.x, y.x);
        if (inner >= 0) push(lookup(op, inner, y.y));
      }
      // units: the identity on a p-cell, raised to the term's dimension;
      // typing already matches its boundary
      if (is_unit(c.y, c.dim, p)) push(c.x);
      if (is_unit(c.x, c.dim, p)) push(c.y);
      // interchange
      if (op == '0' && c.dim == 2 && y.op == '1' && x.op == '1') {
        const int left = lookup('0', x.y, y.y);
        const int right = lookup('0', x.x, y.x);
        if (left >= 0 && right >= 0) push(lookup('1', right, left));
      }
      // congruence
      for (int r : rewrites(c.y)) push(lookup(op, c.x, r));
      for (int r : rewrites(c.x)) push(lookup(op, r, c.y));
    } else if (c.op == 'I') {
      const CTerm& a = terms_[c.x];
      // reflexor functoriality on 1-cells
      if (a.op == '0' && a.dim == 1) {
        const int iy = lookup('I', a.y, -1), ix = lookup('I', a.x, -1);
        if (iy >= 0 && ix >= 0) push(lookup('0', ix, iy));
      }
      for (int r : rewrites(c.x)) push(lookup('I', r, -1));
    }
    return out;
  }

  int find(int t) {
    while (parent_[t] != t) t = parent_[t] = parent_[parent_[t]];
    return t;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

  std::vector<CTerm> terms_;
  std::vector<std::vector<int>> by_size_;
  std::map<Key, int> index_;
  std::vector<int> parent_;
};

}  // namespace oracle
