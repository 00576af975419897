#include "globforge/stretching.hpp"

#include <algorithm>

#include "globforge/error.hpp"

namespace globforge {

StretchArena::StretchArena(const GlobularSet& g, bool check_types)
    : g_(&g), check_types_(check_types) {}

TermId StretchArena::intern(StretchNode n) {
  Key key{static_cast<int>(n.op), n.dim, n.level, n.gen, n.a, n.b};
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  n.size = 1;
  if (n.op != StretchOp::Gen) n.size += nodes_.at(n.a).size;
  if (n.op == StretchOp::Comp || n.op == StretchOp::Bracket)
    n.size += nodes_.at(n.b).size;
  const TermId id = nodes_.size();
  nodes_.push_back(n);
  index_.emplace(key, id);
  return id;
}

TermId StretchArena::gen(Dim m, CellIndex x) {
  if (m > g_->max_dim() || x >= g_->size(m))
    throw Error(ErrorKind::UnknownCell, "no generator of that dimension");
  StretchNode n;
  n.op = StretchOp::Gen;
  n.dim = m;
  n.gen = x;
  if (m > 0) {
    n.src = gen(m - 1, g_->source(m, x));
    n.tgt = gen(m - 1, g_->target(m, x));
  }
  return intern(n);
}

TermId StretchArena::comp(Dim p, TermId y, TermId x) {
  const Dim m = dim(x);
  if (dim(y) != m || p >= m)
    throw Error(ErrorKind::IllTypedTerm, "composite of mismatched dimensions");
  if (check_types_ && face(y, p, Side::Source) != face(x, p, Side::Target))
    throw Error(ErrorKind::IllTypedTerm,
                "composite of non-composable terms " + print(y) + " and " +
                    print(x));
  StretchNode n;
  n.op = StretchOp::Comp;
  n.dim = m;
  n.level = p;
  n.a = y;
  n.b = x;
  if (m - 1 > p) {
    n.src = comp(p, source(y), source(x));
    n.tgt = comp(p, target(y), target(x));
  } else {
    n.src = source(x);
    n.tgt = target(y);
  }
  return intern(n);
}

TermId StretchArena::refl(TermId t) {
  StretchNode n;
  n.op = StretchOp::Refl;
  n.dim = dim(t) + 1;
  n.a = t;
  n.src = n.tgt = t;
  return intern(n);
}

TermId StretchArena::refl(TermId t, Dim m) {
  while (dim(t) < m) t = refl(t);
  return t;
}

TermId StretchArena::rev(Dim p, TermId t) {
  const Dim m = dim(t);
  if (p >= m)
    throw Error(ErrorKind::IllTypedTerm, "reversor level above the term");
  StretchNode n;
  n.op = StretchOp::Rev;
  n.dim = m;
  n.level = p;
  n.a = t;
  if (m == p + 1) {
    n.src = target(t);
    n.tgt = source(t);
  } else {
    n.src = rev(p, source(t));
    n.tgt = rev(p, target(t));
  }
  return intern(n);
}

TermId StretchArena::bracket(TermId c1, TermId c0) {
  if (!parallel(c1, c0))
    throw Error(ErrorKind::IllTypedTerm,
                "bracket of non-parallel terms " + print(c1) + " and " +
                    print(c0));
  StretchNode n;
  n.op = StretchOp::Bracket;
  n.dim = dim(c1) + 1;
  n.a = c1;
  n.b = c0;
  n.src = c0;
  n.tgt = c1;
  return intern(n);
}

TermId StretchArena::face(TermId t, Dim q, Side side) const {
  if (q >= dim(t))
    throw Error(ErrorKind::DimensionOutOfRange, "face above the term");
  while (dim(t) > q) t = side == Side::Source ? source(t) : target(t);
  return t;
}

bool StretchArena::parallel(TermId x, TermId y) const {
  if (dim(x) != dim(y)) return false;
  return dim(x) == 0 || (source(x) == source(y) && target(x) == target(y));
}

std::string StretchArena::print(TermId t) const {
  const StretchNode& n = node(t);
  switch (n.op) {
    case StretchOp::Gen: return g_->name(n.dim, n.gen);
    case StretchOp::Comp:
      return "(" + print(n.a) + " *" + std::to_string(n.level) + " " +
             print(n.b) + ")";
    case StretchOp::Refl: return "1(" + print(n.a) + ")";
    case StretchOp::Rev:
      return "j" + std::to_string(n.level) + "(" + print(n.a) + ")";
    case StretchOp::Bracket:
      return "[" + print(n.a) + ", " + print(n.b) + "]";
  }
  return {};
}

StrictCell strictify(const StrictModel& model, const StretchArena& arena,
                     TermId t) {
  const StretchNode& n = arena.node(t);
  switch (n.op) {
    case StretchOp::Gen: return model.gen(n.dim, n.gen);
    case StretchOp::Comp:
      return model.comp(n.level, strictify(model, arena, n.a),
                        strictify(model, arena, n.b));
    case StretchOp::Refl: return model.refl(strictify(model, arena, n.a));
    case StretchOp::Rev: return model.rev(n.level, strictify(model, arena, n.a));
    case StretchOp::Bracket: return model.refl(strictify(model, arena, n.a));
  }
  return {};
}

namespace {

void reject_invertible(const StretchArena& arena, TermId t) {
  const StretchNode& n = arena.node(t);
  if (n.op == StretchOp::Rev || n.op == StretchOp::Bracket)
    throw Error(ErrorKind::IllTypedTerm,
                "normalize2 takes terms without reversors or brackets");
  if (n.a != kNoTerm) reject_invertible(arena, n.a);
  if (n.b != kNoTerm) reject_invertible(arena, n.b);
}

}  // namespace

StrictCell normalize2(const GlobularSet& g, const StretchArena& arena,
                      TermId t) {
  if (g.max_dim() > 2)
    throw Error(ErrorKind::UnsupportedDimension,
                "normalize2 needs generators of dimension at most 2");
  reject_invertible(arena, t);
  const StrictModel model(g, 2);
  return strictify(model, arena, t);
}

ValidationReport validate_stretching(const Stretching& e) {
  constexpr const char* kPi = "stretching projection";
  constexpr const char* kBracket = "bracketing structure";
  ValidationReport report;
  report.subject = "stretching";
  const GlobularSet& m = e.m.magma.gs;
  const GlobularSet& c = e.c.gs;
  auto name = [&](Dim d, CellIndex x) {
    return std::to_string(d) + ":" + m.name(d, x);
  };
  auto pi = [&](Dim d, CellIndex x) -> CellIndex {
    if (x == kNoCell || d >= e.pi.size() || x >= e.pi[d].size()) return kNoCell;
    const CellIndex y = e.pi[d][x];
    return y < c.size(d) ? y : kNoCell;
  };

  for (Dim d = 0; d <= m.max_dim(); ++d) {
    for (CellIndex x = 0; x < m.size(d); ++x) {
      const CellIndex px = pi(d, x);
      if (px == kNoCell) {
        report.add("stretch.pi-morphism", kPi, {name(d, x)},
                   "projection undefined");
        continue;
      }
      if (d > 0 && (pi(d - 1, m.source(d, x)) != c.source(d, px) ||
                    pi(d - 1, m.target(d, x)) != c.target(d, px)))
        report.add("stretch.pi-morphism", kPi, {name(d, x)},
                   "projection does not commute with faces");
    }
  }
  for (const auto& [key, table] : e.m.magma.comp.tables()) {
    const auto [d, p] = key;
    for (const auto& [k, r] : table) {
      const CellIndex y = CompositionStructure::key_y(k);
      const CellIndex x = CompositionStructure::key_x(k);
      const CellIndex expect = e.c.compose(d, p, pi(d, y), pi(d, x));
      if (expect == kNoCell || expect != pi(d, r))
        report.add("stretch.pi-morphism", kPi, {name(d, y), name(d, x)},
                   "projection does not preserve comp[" + std::to_string(d) +
                       "][" + std::to_string(p) + "]");
    }
  }
  for (const auto& [key, table] : e.m.magma.refl.refl.tables()) {
    const auto [p, d] = key;
    for (CellIndex a = 0; a < table.size(); ++a) {
      if (table[a] == kNoCell) continue;
      const CellIndex expect = e.c.refl(p, d, pi(p, a));
      if (expect == kNoCell || expect != pi(d, table[a]))
        report.add("stretch.pi-morphism", kPi, {name(p, a)},
                   "projection does not preserve reflexors");
    }
  }
  for (const auto& [key, table] : e.m.rev.j.tables()) {
    const auto [d, p] = key;
    for (CellIndex x = 0; x < table.size(); ++x) {
      if (table[x] == kNoCell) continue;
      const CellIndex px = pi(d, x);
      const CellIndex expect = px == kNoCell ? kNoCell : e.c_rev(d, p, px);
      if (expect == kNoCell || expect != pi(d, table[x]))
        report.add("stretch.pi-morphism", kPi, {name(d, x)},
                   "projection does not preserve reversors");
    }
  }

  for (Dim d = 0; d < e.bracket.size(); ++d) {
    for (const auto& [pair, k] : e.bracket[d]) {
      const auto [c1, c0] = pair;
      const std::vector<std::string> cells{name(d, c1), name(d, c0)};
      if (d + 1 > m.max_dim() || k >= m.size(d + 1)) {
        report.add("stretch.bracket-domain", kBracket, cells,
                   "bracket cell missing");
        continue;
      }
      if (!parallel(m, d, c1, c0) || pi(d, c1) != pi(d, c0))
        report.add("stretch.bracket-domain", kBracket, cells,
                   "bracketed cells are not parallel with equal projections");
      if (m.target(d + 1, k) != c1 || m.source(d + 1, k) != c0)
        report.add("stretch.bracket-boundary", kBracket, cells,
                   "bracket must run from c0 to c1");
      const CellIndex pc1 = pi(d, c1);
      const CellIndex unit = pc1 == kNoCell ? kNoCell : e.c.refl(d, d + 1, pc1);
      if (unit == kNoCell || pi(d + 1, k) != unit)
        report.add("stretch.bracket-projection", kBracket, cells,
                   "bracket does not project to an identity");
      if (c1 == c0 && e.m.magma.refl(d, d + 1, c1) != k)
        report.add("stretch.bracket-diagonal", kBracket, cells,
                   "diagonal bracket is not the reflexor");
    }
  }
  return report;
}

Stretching identity_stretching(const InfinityMagma& c, Dim n) {
  Stretching e;
  e.m.magma = c;
  e.m.rev = derive_canonical_reversors(c, n);
  e.c = c;
  e.c_rev = e.m.rev;
  const GlobularSet& gs = c.gs;
  e.pi.resize(gs.max_dim() + 1);
  e.bracket.resize(gs.max_dim());
  for (Dim d = 0; d <= gs.max_dim(); ++d) {
    for (CellIndex x = 0; x < gs.size(d); ++x) {
      e.pi[d].push_back(x);
      if (d < gs.max_dim()) {
        const CellIndex r = c.refl(d, d + 1, x);
        if (r != kNoCell) e.bracket[d][{x, x}] = r;
      }
    }
  }
  return e;
}

namespace {

struct Generator {
  const GlobularSet& g;
  Dim n, max_dim;
  std::size_t max_size;
  StrictModel model;
  StretchArena& arena;

  std::map<StrictCell, std::size_t> strict_ids;
  std::vector<StrictCell> strict_cells;
  std::vector<std::size_t> pi_of;       // by TermId
  std::vector<char> in_m;               // by TermId
  std::vector<std::vector<TermId>> by_size;
  std::vector<std::string> names;       // by TermId, cached print

  std::vector<std::tuple<Dim, TermId, TermId, TermId>> comps;  // p, y, x, r
  std::vector<std::pair<TermId, TermId>> refls;                // t, r
  std::vector<std::tuple<Dim, TermId, TermId>> revs;           // p, t, r
  std::vector<std::tuple<TermId, TermId, TermId>> brackets;    // c1, c0, r

  // (size, dim, p, p-face) -> terms
  std::map<std::tuple<std::size_t, Dim, Dim, TermId>, std::vector<TermId>> by_target;
  // (size, dim, src, tgt, pi) -> terms
  std::map<std::tuple<std::size_t, Dim, TermId, TermId, std::size_t>,
           std::vector<TermId>>
      by_shape;

  Generator(const GlobularSet& g, Dim n, Dim d, std::size_t s,
            StretchArena& arena)
      : g(g), n(n), max_dim(d), max_size(s), model(g, n), arena(arena),
        by_size(s + 1) {}

  std::size_t strict_id(const StrictCell& c) {
    auto [it, inserted] = strict_ids.emplace(c, strict_cells.size());
    if (inserted) strict_cells.push_back(c);
    return it->second;
  }

  void grow(TermId t) {
    if (pi_of.size() <= t) {
      pi_of.resize(t + 1, 0);
      in_m.resize(t + 1, 0);
      names.resize(t + 1);
    }
  }

  const std::string& name(TermId t) { return names[t]; }

  // Adds t to M if new, with projection pi; returns false if already present.
  bool admit(TermId t, const StrictCell& pi) {
    grow(t);
    if (in_m[t]) return false;
    in_m[t] = 1;
    pi_of[t] = strict_id(pi);
    names[t] = arena.print(t);
    const std::size_t s = arena.size(t);
    const Dim d = arena.dim(t);
    by_size[s].push_back(t);
    for (Dim p = 0; p < d; ++p)
      by_target[{s, d, p, arena.face(t, p, Side::Target)}].push_back(t);
    by_shape[{s, d, arena.source(t), arena.target(t), pi_of[t]}].push_back(t);
    return true;
  }

  bool greater(TermId a, TermId b) {
    const std::size_t sa = arena.size(a), sb = arena.size(b);
    if (sa != sb) return sa > sb;
    return name(a) > name(b);
  }

  void run() {
    for (std::size_t s = 1; s <= max_size; ++s) {
      if (s == 1) {
        for (Dim m = 0; m <= std::min(max_dim, g.max_dim()); ++m)
          for (CellIndex x = 0; x < g.size(m); ++x)
            admit(arena.gen(m, x), model.gen(m, x));
        continue;
      }
      // snapshot: terms admitted in this layer must not feed it
      for (TermId t : std::vector<TermId>(by_size[s - 1])) {
        const Dim d = arena.dim(t);
        const StrictCell& pt = strict_cells[pi_of[t]];
        if (d < max_dim) {
          const TermId r = arena.refl(t);
          admit(r, model.refl(pt));
          refls.emplace_back(t, r);
        }
        for (Dim p = n; p < d; ++p) {
          const TermId r = arena.rev(p, t);
          admit(r, model.rev(p, pt));
          revs.emplace_back(p, t, r);
        }
      }
      for (std::size_t s1 = 1; s1 + 2 <= s; ++s1) {
        const std::size_t s2 = s - 1 - s1;
        for (TermId y : std::vector<TermId>(by_size[s1])) {
          const Dim d = arena.dim(y);
          for (Dim p = 0; p < d; ++p) {
            auto it = by_target.find({s2, d, p, arena.face(y, p, Side::Source)});
            if (it == by_target.end()) continue;
            for (TermId x : std::vector<TermId>(it->second)) {
              const TermId r = arena.comp(p, y, x);
              admit(r, model.comp(p, strict_cells[pi_of[y]],
                                  strict_cells[pi_of[x]]));
              comps.emplace_back(p, y, x, r);
            }
          }
        }
        for (TermId c1 : std::vector<TermId>(by_size[s1])) {
          const Dim d = arena.dim(c1);
          if (d >= max_dim) continue;
          auto it = by_shape.find(
              {s2, d, arena.source(c1), arena.target(c1), pi_of[c1]});
          if (it == by_shape.end()) continue;
          for (TermId c0 : std::vector<TermId>(it->second)) {
            if (c0 == c1 || !greater(c1, c0)) continue;
            const TermId r = arena.bracket(c1, c0);
            admit(r, model.refl(strict_cells[pi_of[c1]]));
            brackets.emplace_back(c1, c0, r);
          }
        }
      }
    }
  }
};

}  // namespace

FreeStretching generate_free_stretching(const GlobularSet& g, Dim n,
                                        Dim max_dim, std::size_t max_size) {
  if (max_dim > 3)
    throw Error(ErrorKind::UnsupportedDimension,
                "free stretchings are generated up to dimension 3");
  FreeStretching out{Stretching{}, StretchArena(g), {}, {}};
  Generator gen(g, n, max_dim, max_size, out.arena);
  gen.run();
  const StretchArena& arena = out.arena;

  // M cells in canonical order per grade
  out.terms.assign(max_dim + 1, {});
  for (std::size_t s = 1; s <= max_size; ++s)
    for (TermId t : gen.by_size[s]) out.terms[arena.dim(t)].push_back(t);
  std::vector<CellIndex> cell_of(arena.node_count(), kNoCell);
  GlobularSet& mgs = out.stretching.m.magma.gs;
  mgs = GlobularSet(max_dim);
  for (Dim d = 0; d <= max_dim; ++d) {
    auto& grade = out.terms[d];
    std::stable_sort(grade.begin(), grade.end(), [&](TermId a, TermId b) {
      if (arena.size(a) != arena.size(b)) return arena.size(a) < arena.size(b);
      return gen.name(a) < gen.name(b);
    });
    for (TermId t : grade) cell_of[t] = mgs.add_cell(d, gen.name(t));
    if (d > 0)
      for (TermId t : grade) {
        mgs.set_source(d, cell_of[t], cell_of[arena.source(t)]);
        mgs.set_target(d, cell_of[t], cell_of[arena.target(t)]);
      }
  }

  // C: the projections, closed under faces by construction
  std::vector<std::vector<std::size_t>> strict_by_grade(max_dim + 1);
  for (std::size_t i = 0; i < gen.strict_cells.size(); ++i)
    strict_by_grade[gen.strict_cells[i].dim].push_back(i);
  std::vector<CellIndex> c_cell_of(gen.strict_cells.size(), kNoCell);
  std::map<StrictCell, CellIndex> c_lookup;
  InfinityMagma& c = out.stretching.c;
  c.gs = GlobularSet(max_dim);
  out.strict.assign(max_dim + 1, {});
  for (Dim d = 0; d <= max_dim; ++d) {
    auto& ids = strict_by_grade[d];
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return gen.strict_cells[a] < gen.strict_cells[b];
    });
    for (std::size_t i : ids) {
      const StrictCell& sc = gen.strict_cells[i];
      c_cell_of[i] = c.gs.add_cell(d, gen.model.name(sc));
      c_lookup.emplace(sc, c_cell_of[i]);
      out.strict[d].push_back(sc);
    }
    if (d > 0)
      for (CellIndex x = 0; x < out.strict[d].size(); ++x) {
        c.gs.set_source(d, x, c_lookup.at(gen.model.source(out.strict[d][x])));
        c.gs.set_target(d, x, c_lookup.at(gen.model.target(out.strict[d][x])));
      }
  }
  auto find_c = [&](const StrictCell& sc) {
    auto it = c_lookup.find(sc);
    return it == c_lookup.end() ? kNoCell : it->second;
  };
  c.comp.partial = true;
  c.refl.partial = true;
  ReversorStructure& c_rev = out.stretching.c_rev;
  c_rev.threshold = n;
  c_rev.partial = true;
  for (Dim d = 0; d <= max_dim; ++d) {
    const auto& cells = out.strict[d];
    for (CellIndex x = 0; x < cells.size(); ++x) {
      if (d < max_dim) {
        const CellIndex r = find_c(gen.model.refl(cells[x]));
        if (r != kNoCell) c.refl.set(d, d + 1, x, r);
      }
      for (Dim p = n; p < d; ++p) {
        const CellIndex r = find_c(gen.model.rev(p, cells[x]));
        if (r != kNoCell) c_rev.set(d, p, x, r);
      }
    }
    for (Dim p = 0; p < d; ++p) {
      std::map<StrictCell, std::vector<CellIndex>> by_target;
      for (CellIndex x = 0; x < cells.size(); ++x)
        by_target[gen.model.face(cells[x], p, Side::Target)].push_back(x);
      for (CellIndex y = 0; y < cells.size(); ++y) {
        auto it = by_target.find(gen.model.face(cells[y], p, Side::Source));
        if (it == by_target.end()) continue;
        for (CellIndex x : it->second) {
          const CellIndex r = find_c(gen.model.comp(p, cells[y], cells[x]));
          if (r != kNoCell) c.comp.set(d, p, y, x, r);
        }
      }
    }
  }

  // M tables and projection
  NMagma& m = out.stretching.m;
  m.magma.comp.partial = true;
  m.magma.refl.partial = true;
  m.rev.threshold = n;
  m.rev.partial = true;
  for (const auto& [p, y, x, r] : gen.comps)
    m.magma.comp.set(arena.dim(r), p, cell_of[y], cell_of[x], cell_of[r]);
  for (const auto& [t, r] : gen.refls)
    m.magma.refl.set(arena.dim(t), arena.dim(r), cell_of[t], cell_of[r]);
  for (const auto& [p, t, r] : gen.revs)
    m.rev.set(arena.dim(t), p, cell_of[t], cell_of[r]);
  out.stretching.pi.assign(max_dim + 1, {});
  for (Dim d = 0; d <= max_dim; ++d)
    for (TermId t : out.terms[d])
      out.stretching.pi[d].push_back(c_cell_of[gen.pi_of[t]]);
  out.stretching.bracket.assign(max_dim, {});
  for (const auto& [c1, c0, r] : gen.brackets)
    out.stretching.bracket[arena.dim(c1)][{cell_of[c1], cell_of[c0]}] =
        cell_of[r];
  for (const auto& [t, r] : gen.refls)
    out.stretching.bracket[arena.dim(t)][{cell_of[t], cell_of[t]}] = cell_of[r];
  return out;
}

NMagma induced_algebra_magma(const Stretching& e, const GlobularSet& g,
                             const std::vector<std::vector<CellIndex>>& v,
                             const std::vector<std::vector<CellIndex>>& lambda) {
  const InfinityMagma& mm = e.m.magma;
  const Dim top = g.max_dim();
  auto vm = [&](Dim d, CellIndex x) -> CellIndex {
    if (x == kNoCell || d >= v.size() || x >= v[d].size()) return kNoCell;
    return v[d][x];
  };
  auto lam = [&](Dim d, CellIndex a) -> CellIndex {
    if (d >= lambda.size() || a >= lambda[d].size()) return kNoCell;
    return lambda[d][a];
  };
  for (Dim d = 0; d <= top; ++d)
    for (CellIndex a = 0; a < g.size(d); ++a)
      if (vm(d, lam(d, a)) != a)
        throw Error(ErrorKind::SectionViolation,
                    "v does not undo lambda on " + g.name(d, a));

  NMagma out;
  out.magma.gs = g;
  out.magma.comp.partial = mm.comp.partial;
  out.magma.refl.partial = mm.refl.partial;
  out.rev.threshold = e.m.rev.threshold;
  out.rev.partial = e.m.rev.partial;
  for (Dim d = 0; d <= top; ++d) {
    for (CellIndex a = 0; a < g.size(d); ++a) {
      const CellIndex la = lam(d, a);
      if (d < top) {
        const CellIndex r = vm(d + 1, mm.refl(d, d + 1, la));
        if (r != kNoCell) out.magma.refl.set(d, d + 1, a, r);
      }
      for (Dim p = e.m.rev.threshold; p < d; ++p) {
        const CellIndex r = vm(d, e.m.rev(d, p, la));
        if (r != kNoCell) out.rev.set(d, p, a, r);
      }
      for (Dim p = 0; p < d; ++p) {
        for (CellIndex b = 0; b < g.size(d); ++b) {
          if (!composable(g, d, p, a, b)) continue;
          const CellIndex r = vm(d, mm.compose(d, p, la, lam(d, b)));
          if (r != kNoCell) out.magma.comp.set(d, p, a, b, r);
        }
      }
    }
  }
  return out;
}

}  // namespace globforge
