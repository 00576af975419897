#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "globforge/report.hpp"

namespace globforge {

/// Cell dimension.
using Dim = unsigned;

/// Position of a cell inside its grade. Names are per-grade, so the same
/// name may denote different cells in different grades.
using CellIndex = std::size_t;
inline constexpr CellIndex kNoCell = std::numeric_limits<CellIndex>::max();

struct CellRef {
  Dim dim = 0;
  CellIndex index = kNoCell;

  friend bool operator==(const CellRef&, const CellRef&) = default;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

enum class Side { Source, Target };

/// A globular set truncated at `max_dim`: graded finite cell sets with
/// source and target maps X_m -> X_{m-1}. Maps may be partially filled
/// while building; validate_globular reports what is missing.
class GlobularSet {
 public:
  GlobularSet() : GlobularSet(0) {}
  explicit GlobularSet(Dim max_dim);

  Dim max_dim() const noexcept { return max_dim_; }
  /// Grows (or shrinks, dropping grades) the truncation bound.
  void set_max_dim(Dim max_dim);

  std::size_t size(Dim m) const;
  std::size_t total_size() const;

  /// Adds a cell to grade m. Throws on duplicate name or m > max_dim.
  CellIndex add_cell(Dim m, std::string name);
  std::optional<CellIndex> find(Dim m, std::string_view name) const;
  CellIndex index_of(Dim m, std::string_view name) const;
  const std::string& name(Dim m, CellIndex i) const;
  const std::string& name(CellRef c) const { return name(c.dim, c.index); }

  void set_source(Dim m, CellIndex x, CellIndex y);
  void set_target(Dim m, CellIndex x, CellIndex y);
  /// kNoCell when undefined.
  CellIndex source(Dim m, CellIndex x) const;
  CellIndex target(Dim m, CellIndex x) const;
  CellIndex face(Dim m, CellIndex x, Side side) const {
    return side == Side::Source ? source(m, x) : target(m, x);
  }

  friend bool operator==(const GlobularSet&, const GlobularSet&);

 private:
  void check_grade(Dim m) const;

  Dim max_dim_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::unordered_map<std::string, CellIndex>> lookup_;
  // src_[m][x] for 1 <= m <= max_dim; index 0 unused.
  std::vector<std::vector<CellIndex>> src_;
  std::vector<std::vector<CellIndex>> tgt_;
};

/// Reports missing or out-of-range faces and failures of the globular
/// identities ss = st and tt = ts.
ValidationReport validate_globular(const GlobularSet& gs);

/// Iterated face s^m_q (or t^m_q) of an m-cell. Throws
/// Error(DimensionOutOfRange) unless q < m.
CellIndex boundary(const GlobularSet& gs, Dim m, CellIndex x, Dim q, Side side);
CellRef boundary(const GlobularSet& gs, CellRef x, Dim q, Side side);

/// Same source and target one dimension down. 0-cells are always parallel.
bool parallel(const GlobularSet& gs, Dim m, CellIndex x, CellIndex y);
/// Throws Error(GradeMismatch) when the grades differ.
bool parallel(const GlobularSet& gs, CellRef x, CellRef y);

/// Graded map between two globular sets. Holds non-owning pointers to its
/// endpoints; they must outlive the morphism.
struct GlobularMorphism {
  const GlobularSet* source = nullptr;
  const GlobularSet* target = nullptr;
  std::vector<std::vector<CellIndex>> components;  // components[m][x]

  CellIndex operator()(Dim m, CellIndex x) const { return components[m][x]; }
};

GlobularMorphism identity_morphism(const GlobularSet& gs);
/// `after` after `before`.
GlobularMorphism compose(const GlobularMorphism& after,
                         const GlobularMorphism& before);
/// One cell per dimension up to D, every face the unique lower cell.
GlobularSet terminal_globular_set(Dim max_dim);
GlobularMorphism to_terminal(const GlobularSet& gs, const GlobularSet& terminal);

/// Empty iff every naturality square commutes.
ValidationReport validate_morphism(const GlobularMorphism& phi);

}  // namespace globforge
