#include "globforge/layers.hpp"

namespace globforge {

namespace {

constexpr const char* kReversorCitation = "reversor boundary axioms";
constexpr const char* kReflexorCitation = "reflexor axioms";
constexpr const char* kInvolutiveCitation = "involutive reversors";
constexpr const char* kCompatCitation = "reflexive-reversor compatibility";

std::string cell(const GlobularSet& gs, Dim m, CellIndex x) {
  return std::to_string(m) + ":" + gs.name(m, x);
}

std::string op(const char* name, Dim a, Dim b) {
  return std::string(name) + "[" + std::to_string(a) + "][" +
         std::to_string(b) + "]";
}

bool in_grade(const GlobularSet& gs, Dim m, CellIndex x) {
  return x != kNoCell && x < gs.size(m);
}

}  // namespace

CellIndex GradedTables::get(Dim a, Dim b, CellIndex x) const {
  auto it = tables_.find({a, b});
  if (it == tables_.end() || x >= it->second.size()) return kNoCell;
  return it->second[x];
}

void GradedTables::set(Dim a, Dim b, CellIndex x, CellIndex y) {
  auto& table = tables_[{a, b}];
  if (x >= table.size()) table.resize(x + 1, kNoCell);
  table[x] = y;
}

CellIndex ReflexorStructure::operator()(Dim p, Dim m, CellIndex x) const {
  if (p == m) return x;
  if (p > m) return kNoCell;
  const CellIndex y = refl.get(p, m, x);
  return y != kNoCell ? y : composite(p, m, x);
}

CellIndex ReflexorStructure::composite(Dim p, Dim m, CellIndex x) const {
  for (Dim k = p; k < m && x != kNoCell; ++k) x = refl.get(k, k + 1, x);
  return x;
}

ValidationReport validate_reversors(const GlobularSet& gs,
                                    const ReversorStructure& rev) {
  ValidationReport report;
  report.subject = "reversors";
  const Dim n = rev.threshold;
  for (Dim m = n + 1; m <= gs.max_dim(); ++m) {
    for (Dim p = n; p < m; ++p) {
      for (CellIndex x = 0; x < gs.size(m); ++x) {
        const CellIndex y = rev(m, p, x);
        if (!in_grade(gs, m, y)) {
          if (!rev.partial || y != kNoCell)
            report.add("reversor.total", kReversorCitation, {cell(gs, m, x)},
                       op("j", m, p) + " undefined or outside grade");
          continue;
        }
        const CellIndex sx = gs.source(m, x), tx = gs.target(m, x);
        const CellIndex sy = gs.source(m, y), ty = gs.target(m, y);
        if (m == p + 1) {
          if (sy != tx || ty != sx)
            report.add("reversor.b", kReversorCitation, {cell(gs, m, x)},
                       op("j", m, p) + " does not swap source and target");
          continue;
        }
        const CellIndex js = rev(m - 1, p, sx), jt = rev(m - 1, p, tx);
        if (rev.partial && (js == kNoCell || jt == kNoCell)) continue;
        if (sy != js)
          report.add("reversor.a", kReversorCitation, {cell(gs, m, x)},
                     "source of " + op("j", m, p) + " differs from " +
                         op("j", m - 1, p) + " of the source");
        if (ty != jt)
          report.add("reversor.a", kReversorCitation, {cell(gs, m, x)},
                     "target of " + op("j", m, p) + " differs from " +
                         op("j", m - 1, p) + " of the target");
      }
    }
  }
  return report;
}

ValidationReport validate_reflexors(const GlobularSet& gs,
                                    const ReflexorStructure& refl) {
  ValidationReport report;
  report.subject = "reflexors";
  for (Dim p = 0; p < gs.max_dim(); ++p) {
    for (CellIndex x = 0; x < gs.size(p); ++x) {
      const CellIndex y = refl.stored(p, p + 1, x);
      if (!in_grade(gs, p + 1, y)) {
        if (!refl.partial || y != kNoCell)
          report.add("reflexor.total", kReflexorCitation, {cell(gs, p, x)},
                     op("refl", p, p + 1) + " undefined or outside grade");
        continue;
      }
      if (gs.source(p + 1, y) != x || gs.target(p + 1, y) != x)
        report.add("reflexor.unit", kReflexorCitation, {cell(gs, p, x)},
                   op("refl", p, p + 1) + " is not a loop on its argument");
    }
  }
  for (const auto& [key, table] : refl.refl.tables()) {
    const auto [p, m] = key;
    if (m <= p + 1 || m > gs.max_dim()) continue;
    for (CellIndex x = 0; x < table.size() && x < gs.size(p); ++x) {
      const CellIndex y = table[x];
      if (y == kNoCell) continue;
      const CellIndex c = refl.composite(p, m, x);
      if (c == kNoCell && refl.partial) continue;
      if (y != c)
        report.add("reflexor.composite", kReflexorCitation, {cell(gs, p, x)},
                   "stored " + op("refl", p, m) +
                       " differs from the composite of one-step reflexors");
    }
  }
  return report;
}

ValidationReport validate_involutive(const GlobularSet& gs,
                                     const ReversorStructure& rev) {
  ValidationReport report;
  report.subject = "involutive";
  for (Dim m = rev.threshold + 1; m <= gs.max_dim(); ++m) {
    for (Dim p = rev.threshold; p < m; ++p) {
      for (CellIndex x = 0; x < gs.size(m); ++x) {
        const CellIndex y = rev(m, p, x);
        const CellIndex z = y == kNoCell ? kNoCell : rev(m, p, y);
        if (rev.partial && z == kNoCell) continue;
        if (z != x)
          report.add("involutive", kInvolutiveCitation, {cell(gs, m, x)},
                     op("j", m, p) + " applied twice is not the identity");
      }
    }
  }
  return report;
}

ValidationReport validate_reflexive_compat(const GlobularSet& gs,
                                           const ReflexorStructure& refl,
                                           const ReversorStructure& rev) {
  ValidationReport report;
  report.subject = "reflexive-compat";
  const Dim n = rev.threshold;
  for (Dim m = n + 1; m <= gs.max_dim(); ++m) {
    for (Dim q = n; q < m; ++q) {
      for (Dim p = 0; p < m; ++p) {
        for (CellIndex a = 0; a < gs.size(p); ++a) {
          const CellIndex r = refl(p, m, a);
          if (r == kNoCell) continue;
          const CellIndex lhs = rev(m, q, r);
          if (p <= q) {
            if (rev.partial && lhs == kNoCell) continue;
            if (lhs != r)
              report.add("reflexive-compat.i", kCompatCitation,
                         {cell(gs, p, a)},
                         op("j", m, q) + " does not fix " + op("refl", p, m));
          } else {
            const CellIndex ja = rev(p, q, a);
            const CellIndex rhs = ja == kNoCell ? kNoCell : refl(p, m, ja);
            if (rev.partial && (lhs == kNoCell || rhs == kNoCell)) continue;
            if (lhs != rhs)
              report.add("reflexive-compat.ii", kCompatCitation,
                         {cell(gs, p, a)},
                         op("j", m, q) + " does not commute with " +
                             op("refl", p, m));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace globforge
