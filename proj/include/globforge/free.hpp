#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "globforge/globular.hpp"
#include "globforge/layers.hpp"
#include "globforge/magma.hpp"

namespace globforge {

/// A generator 1-cell traversed forwards (e+) or backwards (e-).
struct Step {
  CellIndex edge = kNoCell;
  bool inverse = false;

  friend auto operator<=>(const Step&, const Step&) = default;
};

/// Path of signed edges in composition order: the rightmost step is
/// traversed first and starts at `base`.
struct Word {
  CellIndex base = kNoCell;
  std::vector<Step> steps;

  friend auto operator<=>(const Word&, const Word&) = default;
};

CellIndex step_tail(const GlobularSet& g, Step s);
CellIndex step_head(const GlobularSet& g, Step s);
CellIndex word_target(const GlobularSet& g, const Word& w);

/// Throws Error(MalformedWord) if consecutive steps do not meet.
void check_word(const GlobularSet& g, const Word& w);

/// Cancels adjacent e+ e- and e- e+ pairs until none remain.
Word reduce_word(const GlobularSet& g, const Word& w);

/// "1_a" for the empty word, otherwise steps like "e+.f-".
std::string word_name(const GlobularSet& g, const Word& w);

/// Parses "[@base] e+ f- ...". A bare edge name means e+. The base may be
/// omitted for nonempty words. Throws ParseError / UnknownCell /
/// MalformedWord.
Word parse_word(const GlobularSet& g, std::string_view text);

/// Dimension-1 truncation of the free groupoid on a graph, 1-cells being
/// the reduced words of length at most the bound.
struct FreeGroupoid {
  StrictNCategory category;
  ReversorStructure reversal;  // formal reversal of words
  std::vector<Word> words;     // indexed like grade 1
};

FreeGroupoid free_groupoid_cells(const GlobularSet& g, std::size_t max_len);

/// Signed 2-generator inside a vertical word.
struct VStep {
  CellIndex gen = kNoCell;
  bool inverse = false;

  friend auto operator<=>(const VStep&, const VStep&) = default;
};

/// One whiskering position of a 2-cell: a vertical composite of
/// 2-generators (composition order) from `src` to `tgt`.
struct Column {
  Step src, tgt;
  std::vector<VStep> word;

  friend auto operator<=>(const Column&, const Column&) = default;
};

/// Normal form of a cell of the free strict (∞,n)-category on a generator
/// set of dimension <= 2, truncated at dimension 3. 3-cells are identities
/// on their 2-cell.
struct StrictCell {
  Dim dim = 0;
  CellIndex base = kNoCell;     // the cell itself at dim 0, else its 0-source
  std::vector<Step> steps;      // dim 1
  std::vector<Column> columns;  // dim 2 and 3

  friend auto operator<=>(const StrictCell&, const StrictCell&) = default;
};

/// Operations on StrictCell normal forms. Threshold 0 reduces words of
/// 1-cells, thresholds <= 1 reduce vertical words, above that nothing is
/// invertible.
class StrictModel {
 public:
  /// Throws Error(UnsupportedDimension) when the generators have dimension
  /// above 2, or have 2-cells while threshold is 0.
  StrictModel(const GlobularSet& g, Dim threshold);

  const GlobularSet& generators() const { return *g_; }
  Dim threshold() const { return n_; }

  StrictCell gen(Dim m, CellIndex x) const;
  /// One-step reflexor.
  StrictCell refl(const StrictCell& c) const;
  StrictCell refl(const StrictCell& c, Dim m) const;
  /// y ∘_p x. Throws Error(IllTypedTerm) unless s_p(y) = t_p(x).
  StrictCell comp(Dim p, const StrictCell& y, const StrictCell& x) const;
  /// ∘_p-inverse. Throws Error(IllTypedTerm) unless threshold <= p < dim.
  StrictCell rev(Dim p, const StrictCell& x) const;

  StrictCell source(const StrictCell& c) const;
  StrictCell target(const StrictCell& c) const;
  StrictCell face(const StrictCell& c, Dim q, Side side) const;

  std::string name(const StrictCell& c) const;

 private:
  StrictCell face1(const StrictCell& c, bool target) const;
  void reduce_columns(StrictCell& c) const;

  const GlobularSet* g_;
  Dim n_;
};

}  // namespace globforge
