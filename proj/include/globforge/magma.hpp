#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "globforge/globular.hpp"
#include "globforge/layers.hpp"
#include "globforge/report.hpp"

namespace globforge {

/// Partial maps comp[m][p]: X_m ×_{X_p} X_m -> X_m, stored as explicit
/// tables. comp(y, x) is "y after x": s_p(y) = t_p(x).
class CompositionStructure {
 public:
  using Table = std::unordered_map<std::uint64_t, CellIndex>;

  /// Partial tables are only required to hold some composable pairs.
  bool partial = false;

  CellIndex get(Dim m, Dim p, CellIndex y, CellIndex x) const;
  void set(Dim m, Dim p, CellIndex y, CellIndex x, CellIndex r);
  const std::map<std::pair<Dim, Dim>, Table>& tables() const { return tables_; }

  static std::uint64_t key(CellIndex y, CellIndex x) {
    return (static_cast<std::uint64_t>(y) << 32) | static_cast<std::uint32_t>(x);
  }
  static CellIndex key_y(std::uint64_t k) { return static_cast<CellIndex>(k >> 32); }
  static CellIndex key_x(std::uint64_t k) {
    return static_cast<CellIndex>(k & 0xffffffffu);
  }

  friend bool operator==(const CompositionStructure&,
                         const CompositionStructure&) = default;

 private:
  std::map<std::pair<Dim, Dim>, Table> tables_;  // keyed (m, p)
};

/// s_p(y) = t_p(x).
bool composable(const GlobularSet& gs, Dim m, Dim p, CellIndex y, CellIndex x);

struct InfinityMagma {
  GlobularSet gs;
  ReflexorStructure refl;
  CompositionStructure comp;

  CellIndex compose(Dim m, Dim p, CellIndex y, CellIndex x) const {
    return comp.get(m, p, y, x);
  }
};

/// A magma with one chosen reversible structure; the two need not interact.
struct NMagma {
  InfinityMagma magma;
  ReversorStructure rev;
};

struct StrictNCategory {
  InfinityMagma magma;
  Dim threshold = 0;
};

/// Composition totality on the compatibility domain and the positional
/// axioms (a) q > p, (b) q = p, (c) q < p.
ValidationReport validate_magma(const InfinityMagma& mag);

/// Associativity, units, interchange, reflexor functoriality and
/// refl-idempotence. Equations with an undefined side are skipped.
ValidationReport validate_strict(const InfinityMagma& mag);

/// Unique two-sided ∘_p-inverses for every m-cell, n <= p < m.
/// Throws Error(NoInverse) or Error(AmbiguousInverse).
ReversorStructure derive_canonical_reversors(const InfinityMagma& mag, Dim n);

/// Number of two-sided ∘_p-inverses of an m-cell.
std::size_t count_inverses(const InfinityMagma& mag, Dim m, Dim p, CellIndex a);

/// Least threshold at which every cell above it is invertible. Equals
/// max_dim when reversibility holds only vacuously.
Dim compute_index(const InfinityMagma& mag);

/// Naturality plus preservation of compositions and reflexors.
ValidationReport validate_functor(const GlobularMorphism& f,
                                  const InfinityMagma& c,
                                  const InfinityMagma& c2);

/// F(j(a)) = j(F(a)) for the canonical reversors of both sides at
/// threshold n. Throws like derive_canonical_reversors.
ValidationReport check_functor_reversors(const GlobularMorphism& f,
                                         const InfinityMagma& c,
                                         const InfinityMagma& c2, Dim n);

}  // namespace globforge
