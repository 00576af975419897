#pragma once

#include <map>
#include <utility>
#include <vector>

#include "globforge/globular.hpp"
#include "globforge/report.hpp"

namespace globforge {

/// Finite table of one graded operation X_a -> X_b, keyed by a pair of
/// dimensions. Absent entries read as kNoCell.
class GradedTables {
 public:
  CellIndex get(Dim a, Dim b, CellIndex x) const;
  void set(Dim a, Dim b, CellIndex x, CellIndex y);
  bool has_table(Dim a, Dim b) const { return tables_.count({a, b}) != 0; }
  const std::map<std::pair<Dim, Dim>, std::vector<CellIndex>>& tables() const {
    return tables_;
  }

  friend bool operator==(const GradedTables&, const GradedTables&) = default;

 private:
  std::map<std::pair<Dim, Dim>, std::vector<CellIndex>> tables_;
};

/// Reversors j[m][p]: X_m -> X_m for threshold <= p < m.
struct ReversorStructure {
  Dim threshold = 0;
  /// Partial structures only promise the entries they store; validators
  /// skip checks that touch an absent entry instead of reporting them.
  bool partial = false;
  GradedTables j;  // keyed (m, p)

  CellIndex operator()(Dim m, Dim p, CellIndex x) const { return j.get(m, p, x); }
  void set(Dim m, Dim p, CellIndex x, CellIndex y) { j.set(m, p, x, y); }

  friend bool operator==(const ReversorStructure&,
                         const ReversorStructure&) = default;
};

/// Reflexors refl[p][m]: X_p -> X_m. One-step maps are required; a stored
/// multi-step map is checked against the composite of one-step maps, and
/// an absent one is read as that composite.
struct ReflexorStructure {
  bool partial = false;
  GradedTables refl;  // keyed (p, m)

  /// Stored entry only.
  CellIndex stored(Dim p, Dim m, CellIndex x) const { return refl.get(p, m, x); }
  /// refl[p][m](x); identity when p == m; kNoCell when undefined.
  CellIndex operator()(Dim p, Dim m, CellIndex x) const;
  /// Composite of one-step maps, ignoring any stored multi-step entry.
  CellIndex composite(Dim p, Dim m, CellIndex x) const;
  void set(Dim p, Dim m, CellIndex x, CellIndex y) { refl.set(p, m, x, y); }

  friend bool operator==(const ReflexorStructure&,
                         const ReflexorStructure&) = default;
};

/// Boundary axioms (a) and (b) plus totality of every j[m][p].
ValidationReport validate_reversors(const GlobularSet& gs,
                                    const ReversorStructure& rev);

/// One-step totality, unit faces, and stored composites.
ValidationReport validate_reflexors(const GlobularSet& gs,
                                    const ReflexorStructure& refl);

/// j[m][p] ∘ j[m][p] = id.
ValidationReport validate_involutive(const GlobularSet& gs,
                                     const ReversorStructure& rev);

/// (i) j[m][q](refl[p][m](a)) = refl[p][m](a) for p <= q,
/// (ii) j[m][q](refl[p][m](a)) = refl[p][m](j[p][q](a)) for q < p.
ValidationReport validate_reflexive_compat(const GlobularSet& gs,
                                           const ReflexorStructure& refl,
                                           const ReversorStructure& rev);

}  // namespace globforge
