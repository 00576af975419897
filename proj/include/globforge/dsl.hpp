#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "globforge/globular.hpp"
#include "globforge/layers.hpp"
#include "globforge/magma.hpp"
#include "globforge/stretching.hpp"

namespace globforge {

struct PiEntry {
  Dim m;
  CellIndex x, y;  // x in this structure, y in the base
};

struct BracketEntry {
  Dim m;
  CellIndex c1, c0, cell;  // cell has grade m+1
};

/// One `structure` block of a presentation.
struct Structure {
  std::string name;
  GlobularSet cells;
  bool has_threshold = false;
  Dim threshold = 0;
  bool has_rev = false, has_refl = false, has_comp = false;
  ReversorStructure rev;
  ReflexorStructure refl;
  CompositionStructure comp;
  std::string over;  // base structure of a stretching
  std::vector<PiEntry> pi;
  std::vector<BracketEntry> brackets;

  InfinityMagma magma() const { return {cells, refl, comp}; }
};

struct Presentation {
  std::vector<Structure> structures;

  /// nullptr when absent.
  const Structure* find(std::string_view name) const;
};

/// Parses the line-oriented presentation language:
///
///   structure <name>              starts a block (implicit first block)
///   dim <D>
///   threshold <n>
///   cells <m>: <id> <id> ...
///   src <id> = <id>               tgt <id> = <id>
///   refl <p> <m> <id> = <id>
///   comp <m> <p> (<id>, <id>) = <id>
///   rev <m> <p> <id> = <id>
///   partial rev|refl|comp ...
///   over <name>                   this block is a magma over <name>
///   pi <m> <id> = <id>            right-hand id lives in the base
///   bracket <m> (<id>, <id>) = <id>
///   # comment
///
/// Cell names are unique within a block. Without `dim`, D is the highest
/// declared grade. Errors carry "line L, column C" and have kind
/// ParseError, UnresolvedIdentifier, GradeMismatch, DuplicateDeclaration
/// or DimensionOutOfRange.
Presentation parse_presentation(std::string_view text);

/// Assembles a stretching from block `m` over its base. Base reversors are
/// the declared ones, else the canonical ones at the base threshold when
/// they exist. Throws Error(UnresolvedIdentifier) for a missing base.
Stretching to_stretching(const Presentation& p, const Structure& m);

/// Runs the validators of one layer ("globular", "reversors", "reflexors",
/// "magma", "strict", "stretching"), every declared layer except strict
/// when `layer` is empty, or every declared layer for "all". Cells of a
/// named block are prefixed with "<name>/".
ValidationReport validate_structure(const Presentation& p, const Structure& s,
                                    const std::string& layer = "");

}  // namespace globforge
