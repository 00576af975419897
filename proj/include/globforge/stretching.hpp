#pragma once

#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "globforge/free.hpp"
#include "globforge/globular.hpp"
#include "globforge/layers.hpp"
#include "globforge/magma.hpp"
#include "globforge/report.hpp"

namespace globforge {

using TermId = std::size_t;
inline constexpr TermId kNoTerm = std::numeric_limits<TermId>::max();

enum class StretchOp { Gen, Comp, Refl, Rev, Bracket };

struct StretchNode {
  StretchOp op = StretchOp::Gen;
  Dim dim = 0;
  Dim level = 0;           // p of comp and rev
  CellIndex gen = kNoCell;
  TermId a = kNoTerm;      // comp: left factor y; refl, rev: argument; bracket: c1
  TermId b = kNoTerm;      // comp: right factor x; bracket: c0
  TermId src = kNoTerm, tgt = kNoTerm;
  std::size_t size = 1;    // constructor nodes
};

/// Hash-consed terms over gen, comp, one-step refl, rev and bracket, with
/// syntactic boundaries computed from the positional and bracket axioms.
/// Keeps a pointer to the generators, which must outlive the arena.
class StretchArena {
 public:
  /// With check_types off, comp skips the syntactic boundary test (callers
  /// that type terms semantically, such as normalize2, use this).
  explicit StretchArena(const GlobularSet& g, bool check_types = true);

  TermId gen(Dim m, CellIndex x);
  /// y ⋆_p x. Throws Error(IllTypedTerm) on incompatible boundaries.
  TermId comp(Dim p, TermId y, TermId x);
  TermId refl(TermId t);
  TermId refl(TermId t, Dim m);
  /// Level checks against the threshold are the caller's concern.
  TermId rev(Dim p, TermId t);
  /// [c1, c0], a cell from c0 to c1. Throws Error(IllTypedTerm) unless
  /// c1 and c0 are parallel.
  TermId bracket(TermId c1, TermId c0);

  const StretchNode& node(TermId t) const { return nodes_.at(t); }
  std::size_t node_count() const { return nodes_.size(); }
  Dim dim(TermId t) const { return node(t).dim; }
  std::size_t size(TermId t) const { return node(t).size; }
  TermId source(TermId t) const { return node(t).src; }
  TermId target(TermId t) const { return node(t).tgt; }
  TermId face(TermId t, Dim q, Side side) const;
  bool parallel(TermId x, TermId y) const;

  std::string print(TermId t) const;
  const GlobularSet& generators() const { return *g_; }

 private:
  using Key = std::tuple<int, Dim, Dim, CellIndex, TermId, TermId>;
  TermId intern(StretchNode n);

  const GlobularSet* g_;
  bool check_types_;
  std::vector<StretchNode> nodes_;
  std::map<Key, TermId> index_;
};

/// Evaluates a term in the strict model; brackets become identities.
StrictCell strictify(const StrictModel& model, const StretchArena& arena,
                     TermId t);

/// Normal form in the free strict 2-category (no reversors). Throws
/// Error(IllTypedTerm) on rev/bracket nodes or non-composable factors.
StrictCell normalize2(const GlobularSet& g, const StretchArena& arena, TermId t);

/// A magma M over a strict category C with projection and brackets.
struct Stretching {
  NMagma m;
  InfinityMagma c;
  ReversorStructure c_rev;
  std::vector<std::vector<CellIndex>> pi;  // pi[m][x] in grade m of C
  /// bracket[m][{c1, c0}] is an (m+1)-cell of M.
  std::vector<std::map<std::pair<CellIndex, CellIndex>, CellIndex>> bracket;
};

ValidationReport validate_stretching(const Stretching& e);

/// π = id, brackets only on the diagonal. Reversors are the canonical ones
/// at threshold n.
Stretching identity_stretching(const InfinityMagma& c, Dim n);

struct FreeStretching {
  Stretching stretching;
  StretchArena arena;
  std::vector<std::vector<TermId>> terms;         // M cell -> term
  std::vector<std::vector<StrictCell>> strict;    // C cell -> normal form
};

/// Terms of size <= max_size and dimension <= max_dim over g, with brackets
/// on distinct parallel π-equal pairs (target the larger term). Throws
/// Error(UnsupportedDimension) for max_dim > 3.
FreeStretching generate_free_stretching(const GlobularSet& g, Dim n,
                                        Dim max_dim, std::size_t max_size);

/// Magma on G with operations v(op(λa, ...)). v maps M cells to G cells per
/// grade, lambda maps G cells to M cells. Throws Error(SectionViolation)
/// unless v ∘ lambda = id.
NMagma induced_algebra_magma(const Stretching& e, const GlobularSet& g,
                             const std::vector<std::vector<CellIndex>>& v,
                             const std::vector<std::vector<CellIndex>>& lambda);

}  // namespace globforge
