#include "globforge/magma.hpp"

#include "globforge/error.hpp"

namespace globforge {

namespace {

constexpr const char* kCompCitation = "composition tables";
constexpr const char* kPositionalCitation = "positional axioms";
constexpr const char* kStrictCitation = "strict category axioms";
constexpr const char* kFunctorCitation = "strict functors";

std::string cell(const GlobularSet& gs, Dim m, CellIndex x) {
  return std::to_string(m) + ":" + gs.name(m, x);
}

std::string at(Dim m, Dim p) {
  return "comp[" + std::to_string(m) + "][" + std::to_string(p) + "]";
}

bool in_grade(const GlobularSet& gs, Dim m, CellIndex x) {
  return x != kNoCell && x < gs.size(m);
}

// m-cells grouped by their p-dimensional source and target.
struct Faces {
  std::vector<std::vector<CellIndex>> by_source, by_target;

  Faces(const GlobularSet& gs, Dim m, Dim p)
      : by_source(gs.size(p)), by_target(gs.size(p)) {
    for (CellIndex x = 0; x < gs.size(m); ++x) {
      by_source[boundary(gs, m, x, p, Side::Source)].push_back(x);
      by_target[boundary(gs, m, x, p, Side::Target)].push_back(x);
    }
  }
};

template <class F>
void for_each_composable(const GlobularSet& gs, Dim m, Dim p, F&& f) {
  Faces faces(gs, m, p);
  for (CellIndex c = 0; c < gs.size(p); ++c)
    for (CellIndex y : faces.by_source[c])
      for (CellIndex x : faces.by_target[c]) f(y, x);
}

}  // namespace

CellIndex CompositionStructure::get(Dim m, Dim p, CellIndex y,
                                    CellIndex x) const {
  auto it = tables_.find({m, p});
  if (it == tables_.end()) return kNoCell;
  auto e = it->second.find(key(y, x));
  return e == it->second.end() ? kNoCell : e->second;
}

void CompositionStructure::set(Dim m, Dim p, CellIndex y, CellIndex x,
                               CellIndex r) {
  tables_[{m, p}][key(y, x)] = r;
}

bool composable(const GlobularSet& gs, Dim m, Dim p, CellIndex y, CellIndex x) {
  return boundary(gs, m, y, p, Side::Source) ==
         boundary(gs, m, x, p, Side::Target);
}

ValidationReport validate_magma(const InfinityMagma& mag) {
  ValidationReport report;
  report.subject = "magma";
  const GlobularSet& gs = mag.gs;

  for (const auto& [key, table] : mag.comp.tables()) {
    const auto [m, p] = key;
    for (const auto& [k, r] : table) {
      const CellIndex y = CompositionStructure::key_y(k);
      const CellIndex x = CompositionStructure::key_x(k);
      if (p >= m || m > gs.max_dim() || !in_grade(gs, m, y) ||
          !in_grade(gs, m, x) || !composable(gs, m, p, y, x) ||
          !in_grade(gs, m, r)) {
        report.add("comp.domain", kCompCitation, {at(m, p)},
                   "entry outside the compatibility domain or grade");
      }
    }
  }
  if (!report.valid()) return report;

  for (Dim m = 1; m <= gs.max_dim(); ++m) {
    for (Dim p = 0; p < m; ++p) {
      for_each_composable(gs, m, p, [&](CellIndex y, CellIndex x) {
        const CellIndex r = mag.compose(m, p, y, x);
        const std::vector<std::string> cells{cell(gs, m, y), cell(gs, m, x)};
        if (r == kNoCell) {
          if (!mag.comp.partial)
            report.add("comp.total", kCompCitation, cells,
                       at(m, p) + " undefined on a composable pair");
          return;
        }
        for (Dim q = p + 1; q < m; ++q) {
          for (Side side : {Side::Source, Side::Target}) {
            const CellIndex yq = boundary(gs, m, y, q, side);
            const CellIndex xq = boundary(gs, m, x, q, side);
            const CellIndex expect = mag.compose(q, p, yq, xq);
            if (expect == kNoCell && mag.comp.partial) continue;
            if (boundary(gs, m, r, q, side) != expect)
              report.add("positional.a", kPositionalCitation, cells,
                         std::string(side == Side::Source ? "source" : "target") +
                             " at level " + std::to_string(q) +
                             " is not the composite of the faces");
          }
        }
        if (boundary(gs, m, r, p, Side::Source) !=
            boundary(gs, m, x, p, Side::Source))
          report.add("positional.b", kPositionalCitation, cells,
                     "source at level " + std::to_string(p) +
                         " is not the source of the right factor");
        if (boundary(gs, m, r, p, Side::Target) !=
            boundary(gs, m, y, p, Side::Target))
          report.add("positional.b", kPositionalCitation, cells,
                     "target at level " + std::to_string(p) +
                         " is not the target of the left factor");
        for (Dim q = 0; q < p; ++q) {
          for (Side side : {Side::Source, Side::Target}) {
            const CellIndex xq = boundary(gs, m, x, q, side);
            const CellIndex yq = boundary(gs, m, y, q, side);
            if (boundary(gs, m, r, q, side) != xq || xq != yq)
              report.add("positional.c", kPositionalCitation, cells,
                         std::string(side == Side::Source ? "source" : "target") +
                             " at level " + std::to_string(q) +
                             " differs from the factors'");
          }
        }
      });
    }
  }
  return report;
}

ValidationReport validate_strict(const InfinityMagma& mag) {
  ValidationReport report;
  report.subject = "strict";
  const GlobularSet& gs = mag.gs;
  auto comp = [&](Dim m, Dim p, CellIndex y, CellIndex x) {
    if (y == kNoCell || x == kNoCell) return kNoCell;
    return mag.compose(m, p, y, x);
  };

  for (Dim m = 1; m <= gs.max_dim(); ++m) {
    for (Dim p = 0; p < m; ++p) {
      Faces faces(gs, m, p);
      // associativity: z ∘ (y ∘ x) = (z ∘ y) ∘ x
      for (CellIndex y = 0; y < gs.size(m); ++y) {
        const CellIndex ys = boundary(gs, m, y, p, Side::Source);
        const CellIndex yt = boundary(gs, m, y, p, Side::Target);
        for (CellIndex x : faces.by_target[ys]) {
          const CellIndex yx = comp(m, p, y, x);
          if (yx == kNoCell) continue;
          for (CellIndex z : faces.by_source[yt]) {
            const CellIndex zy = comp(m, p, z, y);
            const CellIndex lhs = comp(m, p, z, yx);
            const CellIndex rhs = comp(m, p, zy, x);
            if (lhs == kNoCell || rhs == kNoCell) continue;
            if (lhs != rhs)
              report.add("strict.assoc", kStrictCitation,
                         {cell(gs, m, z), cell(gs, m, y), cell(gs, m, x)},
                         at(m, p) + " is not associative on this triple");
          }
        }
      }
      // units
      for (CellIndex x = 0; x < gs.size(m); ++x) {
        const CellIndex us = mag.refl(p, m, boundary(gs, m, x, p, Side::Source));
        const CellIndex ut = mag.refl(p, m, boundary(gs, m, x, p, Side::Target));
        const CellIndex right = comp(m, p, x, us);
        const CellIndex left = comp(m, p, ut, x);
        if (right != kNoCell && right != x)
          report.add("strict.units", kStrictCitation, {cell(gs, m, x)},
                     "right unit law fails for " + at(m, p));
        if (left != kNoCell && left != x)
          report.add("strict.units", kStrictCitation, {cell(gs, m, x)},
                     "left unit law fails for " + at(m, p));
      }
      // refl-idempotent: comp_q(1^p_m a, 1^p_m a) = 1^p_m a, p <= q < m
      for (CellIndex a = 0; a < gs.size(p); ++a) {
        const CellIndex u = mag.refl(p, m, a);
        if (u == kNoCell) continue;
        for (Dim q = p; q < m; ++q) {
          const CellIndex uu = comp(m, q, u, u);
          if (uu != kNoCell && uu != u)
            report.add("strict.refl-idempotent", kStrictCitation,
                       {cell(gs, p, a)},
                       "composite of an identity with itself at level " +
                           std::to_string(q) + " is not that identity");
        }
      }
    }
  }

  // interchange, p < q < m
  for (Dim m = 2; m <= gs.max_dim(); ++m) {
    for (Dim q = 1; q < m; ++q) {
      auto it = mag.comp.tables().find({m, q});
      if (it == mag.comp.tables().end()) continue;
      std::vector<std::pair<std::uint64_t, CellIndex>> entries(
          it->second.begin(), it->second.end());
      for (Dim p = 0; p < q; ++p) {
        for (const auto& [ka, top] : entries) {
          const CellIndex y2 = CompositionStructure::key_y(ka);
          const CellIndex y = CompositionStructure::key_x(ka);
          for (const auto& [kb, bottom] : entries) {
            const CellIndex x2 = CompositionStructure::key_y(kb);
            const CellIndex x = CompositionStructure::key_x(kb);
            const CellIndex left = comp(m, p, y2, x2);
            const CellIndex right = comp(m, p, y, x);
            if (left == kNoCell || right == kNoCell) continue;
            const CellIndex lhs = comp(m, p, top, bottom);
            const CellIndex rhs = comp(m, q, left, right);
            if (lhs == kNoCell || rhs == kNoCell) continue;
            if (lhs != rhs)
              report.add("strict.interchange", kStrictCitation,
                         {cell(gs, m, y2), cell(gs, m, y), cell(gs, m, x2),
                          cell(gs, m, x)},
                         "interchange fails for levels " + std::to_string(p) +
                             " < " + std::to_string(q));
          }
        }
      }
    }
  }

  // reflexor functoriality: refl[p][m](y ∘_q x) = refl(y) ∘_q refl(x), q < p < m
  for (Dim m = 2; m <= gs.max_dim(); ++m) {
    for (Dim p = 1; p < m; ++p) {
      for (Dim q = 0; q < p; ++q) {
        auto it = mag.comp.tables().find({p, q});
        if (it == mag.comp.tables().end()) continue;
        for (const auto& [k, r] : it->second) {
          const CellIndex y = CompositionStructure::key_y(k);
          const CellIndex x = CompositionStructure::key_x(k);
          const CellIndex lhs = mag.refl(p, m, r);
          const CellIndex rhs = comp(m, q, mag.refl(p, m, y), mag.refl(p, m, x));
          if (lhs == kNoCell || rhs == kNoCell) continue;
          if (lhs != rhs)
            report.add("strict.refl-functor", kStrictCitation,
                       {cell(gs, p, y), cell(gs, p, x)},
                       "refl[" + std::to_string(p) + "][" + std::to_string(m) +
                           "] does not preserve " + at(p, q));
        }
      }
    }
  }
  return report;
}

std::size_t count_inverses(const InfinityMagma& mag, Dim m, Dim p,
                           CellIndex a) {
  const GlobularSet& gs = mag.gs;
  const CellIndex sa = boundary(gs, m, a, p, Side::Source);
  const CellIndex ta = boundary(gs, m, a, p, Side::Target);
  const CellIndex us = mag.refl(p, m, sa), ut = mag.refl(p, m, ta);
  std::size_t found = 0;
  for (CellIndex b = 0; b < gs.size(m); ++b) {
    if (boundary(gs, m, b, p, Side::Source) != ta ||
        boundary(gs, m, b, p, Side::Target) != sa)
      continue;
    const CellIndex ab = mag.compose(m, p, a, b);
    const CellIndex ba = mag.compose(m, p, b, a);
    if (ab != kNoCell && ab == ut && ba != kNoCell && ba == us) ++found;
  }
  return found;
}

namespace {

struct LevelFailure {
  Dim m = 0;
  CellIndex cell = kNoCell;
  std::size_t found = 1;
};

// Fills rev with j[m][p] for one level p; reports the first cell without a
// unique inverse.
LevelFailure inverses_at_level(const InfinityMagma& mag, Dim p,
                               ReversorStructure* rev) {
  const GlobularSet& gs = mag.gs;
  for (Dim m = p + 1; m <= gs.max_dim(); ++m) {
    for (CellIndex a = 0; a < gs.size(m); ++a) {
      const CellIndex sa = boundary(gs, m, a, p, Side::Source);
      const CellIndex ta = boundary(gs, m, a, p, Side::Target);
      const CellIndex us = mag.refl(p, m, sa), ut = mag.refl(p, m, ta);
      CellIndex inverse = kNoCell;
      std::size_t found = 0;
      for (CellIndex b = 0; b < gs.size(m); ++b) {
        if (boundary(gs, m, b, p, Side::Source) != ta ||
            boundary(gs, m, b, p, Side::Target) != sa)
          continue;
        const CellIndex ab = mag.compose(m, p, a, b);
        const CellIndex ba = mag.compose(m, p, b, a);
        if (ab != kNoCell && ab == ut && ba != kNoCell && ba == us) {
          inverse = b;
          ++found;
        }
      }
      if (found != 1) return {m, a, found};
      if (rev) rev->set(m, p, a, inverse);
    }
  }
  return {};
}

}  // namespace

ReversorStructure derive_canonical_reversors(const InfinityMagma& mag, Dim n) {
  ReversorStructure rev;
  rev.threshold = n;
  const GlobularSet& gs = mag.gs;
  for (Dim p = n; p < gs.max_dim(); ++p) {
    ReversorStructure level;
    const LevelFailure fail = inverses_at_level(mag, p, &level);
    if (fail.cell != kNoCell) {
      const std::string where = "(" + gs.name(fail.m, fail.cell) + ", " +
                                std::to_string(fail.m) + ", " +
                                std::to_string(p) + ")";
      if (fail.found == 0)
        throw Error(ErrorKind::NoInverse, "NoInverse" + where);
      throw Error(ErrorKind::AmbiguousInverse, "AmbiguousInverse" + where);
    }
    for (const auto& [key, table] : level.j.tables())
      for (CellIndex x = 0; x < table.size(); ++x)
        rev.set(key.first, key.second, x, table[x]);
  }
  return rev;
}

Dim compute_index(const InfinityMagma& mag) {
  const Dim d = mag.gs.max_dim();
  for (Dim p = d; p-- > 0;)
    if (inverses_at_level(mag, p, nullptr).cell != kNoCell) return p + 1;
  return 0;
}

ValidationReport validate_functor(const GlobularMorphism& f,
                                  const InfinityMagma& c,
                                  const InfinityMagma& c2) {
  ValidationReport report = validate_morphism(f);
  report.subject = "functor";
  if (!report.valid()) return report;
  const GlobularSet& gs = c.gs;
  for (const auto& [key, table] : c.comp.tables()) {
    const auto [m, p] = key;
    for (const auto& [k, r] : table) {
      const CellIndex y = CompositionStructure::key_y(k);
      const CellIndex x = CompositionStructure::key_x(k);
      const CellIndex image = c2.compose(m, p, f(m, y), f(m, x));
      if (image == kNoCell && c2.comp.partial) continue;
      if (image != f(m, r))
        report.add("functor.comp", kFunctorCitation,
                   {cell(gs, m, y), cell(gs, m, x)},
                   "image of " + at(m, p) + " is not the composite of images");
    }
  }
  for (Dim m = 1; m <= gs.max_dim(); ++m) {
    for (Dim p = 0; p < m; ++p) {
      for (CellIndex a = 0; a < gs.size(p); ++a) {
        const CellIndex r = c.refl(p, m, a);
        const CellIndex image = c2.refl(p, m, f(p, a));
        if (r == kNoCell || image == kNoCell) continue;
        if (f(m, r) != image)
          report.add("functor.refl", kFunctorCitation, {cell(gs, p, a)},
                     "reflexor not preserved");
      }
    }
  }
  return report;
}

ValidationReport check_functor_reversors(const GlobularMorphism& f,
                                         const InfinityMagma& c,
                                         const InfinityMagma& c2, Dim n) {
  ValidationReport report;
  report.subject = "functor-reversors";
  const ReversorStructure j = derive_canonical_reversors(c, n);
  const ReversorStructure j2 = derive_canonical_reversors(c2, n);
  const GlobularSet& gs = c.gs;
  for (Dim m = n + 1; m <= gs.max_dim(); ++m) {
    for (Dim p = n; p < m; ++p) {
      for (CellIndex a = 0; a < gs.size(m); ++a) {
        if (f(m, j(m, p, a)) != j2(m, p, f(m, a)))
          report.add("functor.reversors", kFunctorCitation, {cell(gs, m, a)},
                     "image of j[" + std::to_string(m) + "][" +
                         std::to_string(p) + "] is not j of the image");
      }
    }
  }
  return report;
}

}  // namespace globforge
