#include "globforge/globular.hpp"

#include "globforge/error.hpp"

namespace globforge {

namespace {

constexpr const char* kGlobularCitation = "globular set identities";
constexpr const char* kMorphismCitation = "globular morphism naturality";

std::string at_cell(const GlobularSet& gs, Dim m, CellIndex x) {
  return std::to_string(m) + ":" + gs.name(m, x);
}

}  // namespace

GlobularSet::GlobularSet(Dim max_dim) : max_dim_(0) {
  names_.resize(1);
  lookup_.resize(1);
  src_.resize(1);
  tgt_.resize(1);
  set_max_dim(max_dim);
}

void GlobularSet::set_max_dim(Dim max_dim) {
  max_dim_ = max_dim;
  names_.resize(max_dim + 1);
  lookup_.resize(max_dim + 1);
  src_.resize(max_dim + 1);
  tgt_.resize(max_dim + 1);
}

void GlobularSet::check_grade(Dim m) const {
  if (m > max_dim_)
    throw Error(ErrorKind::DimensionOutOfRange,
                "grade " + std::to_string(m) + " exceeds truncation bound " +
                    std::to_string(max_dim_));
}

std::size_t GlobularSet::size(Dim m) const {
  return m > max_dim_ ? 0 : names_[m].size();
}

std::size_t GlobularSet::total_size() const {
  std::size_t n = 0;
  for (const auto& grade : names_) n += grade.size();
  return n;
}

CellIndex GlobularSet::add_cell(Dim m, std::string name) {
  check_grade(m);
  if (lookup_[m].count(name))
    throw Error(ErrorKind::DuplicateDeclaration,
                "cell '" + name + "' declared twice in grade " +
                    std::to_string(m));
  const CellIndex i = names_[m].size();
  lookup_[m].emplace(name, i);
  names_[m].push_back(std::move(name));
  if (m > 0) {
    src_[m].push_back(kNoCell);
    tgt_[m].push_back(kNoCell);
  }
  return i;
}

std::optional<CellIndex> GlobularSet::find(Dim m, std::string_view name) const {
  if (m > max_dim_) return std::nullopt;
  auto it = lookup_[m].find(std::string(name));
  if (it == lookup_[m].end()) return std::nullopt;
  return it->second;
}

CellIndex GlobularSet::index_of(Dim m, std::string_view name) const {
  if (auto i = find(m, name)) return *i;
  throw Error(ErrorKind::UnknownCell, "no cell '" + std::string(name) +
                                          "' in grade " + std::to_string(m));
}

const std::string& GlobularSet::name(Dim m, CellIndex i) const {
  check_grade(m);
  if (i >= names_[m].size())
    throw Error(ErrorKind::UnknownCell, "cell index " + std::to_string(i) +
                                            " out of range in grade " +
                                            std::to_string(m));
  return names_[m][i];
}

void GlobularSet::set_source(Dim m, CellIndex x, CellIndex y) {
  check_grade(m);
  if (m == 0)
    throw Error(ErrorKind::DimensionOutOfRange, "0-cells have no source");
  src_[m].at(x) = y;
}

void GlobularSet::set_target(Dim m, CellIndex x, CellIndex y) {
  check_grade(m);
  if (m == 0)
    throw Error(ErrorKind::DimensionOutOfRange, "0-cells have no target");
  tgt_[m].at(x) = y;
}

CellIndex GlobularSet::source(Dim m, CellIndex x) const {
  if (m == 0 || m > max_dim_ || x >= src_[m].size()) return kNoCell;
  return src_[m][x];
}

CellIndex GlobularSet::target(Dim m, CellIndex x) const {
  if (m == 0 || m > max_dim_ || x >= tgt_[m].size()) return kNoCell;
  return tgt_[m][x];
}

bool operator==(const GlobularSet& a, const GlobularSet& b) {
  return a.max_dim_ == b.max_dim_ && a.names_ == b.names_ &&
         a.src_ == b.src_ && a.tgt_ == b.tgt_;
}

ValidationReport validate_globular(const GlobularSet& gs) {
  ValidationReport report;
  report.subject = "globular";
  for (Dim m = 1; m <= gs.max_dim(); ++m) {
    for (CellIndex x = 0; x < gs.size(m); ++x) {
      for (Side side : {Side::Source, Side::Target}) {
        const CellIndex y = gs.face(m, x, side);
        if (y == kNoCell || y >= gs.size(m - 1)) {
          report.add("globular.total", kGlobularCitation, {at_cell(gs, m, x)},
                     std::string(side == Side::Source ? "source" : "target") +
                         " missing or outside grade " + std::to_string(m - 1));
        }
      }
    }
  }
  if (!report.valid()) return report;

  for (Dim m = 2; m <= gs.max_dim(); ++m) {
    for (CellIndex x = 0; x < gs.size(m); ++x) {
      const CellIndex s = gs.source(m, x), t = gs.target(m, x);
      if (gs.source(m - 1, s) != gs.source(m - 1, t))
        report.add("globular.ss", kGlobularCitation, {at_cell(gs, m, x)},
                   "globular identity src∘src = src∘tgt fails");
      if (gs.target(m - 1, t) != gs.target(m - 1, s))
        report.add("globular.tt", kGlobularCitation, {at_cell(gs, m, x)},
                   "globular identity tgt∘tgt = tgt∘src fails");
    }
  }
  return report;
}

CellIndex boundary(const GlobularSet& gs, Dim m, CellIndex x, Dim q,
                   Side side) {
  if (q >= m)
    throw Error(ErrorKind::DimensionOutOfRange,
                "boundary to grade " + std::to_string(q) + " of a " +
                    std::to_string(m) + "-cell");
  for (Dim k = m; k > q; --k) {
    x = gs.face(k, x, side);
    if (x == kNoCell)
      throw Error(ErrorKind::UnknownCell, "undefined face in grade " +
                                              std::to_string(k));
  }
  return x;
}

CellRef boundary(const GlobularSet& gs, CellRef x, Dim q, Side side) {
  return {q, boundary(gs, x.dim, x.index, q, side)};
}

bool parallel(const GlobularSet& gs, Dim m, CellIndex x, CellIndex y) {
  if (m == 0) return true;
  return gs.source(m, x) == gs.source(m, y) &&
         gs.target(m, x) == gs.target(m, y);
}

bool parallel(const GlobularSet& gs, CellRef x, CellRef y) {
  if (x.dim != y.dim)
    throw Error(ErrorKind::GradeMismatch,
                "parallel: cells of grades " + std::to_string(x.dim) + " and " +
                    std::to_string(y.dim));
  return parallel(gs, x.dim, x.index, y.index);
}

GlobularMorphism identity_morphism(const GlobularSet& gs) {
  GlobularMorphism phi{&gs, &gs, {}};
  phi.components.resize(gs.max_dim() + 1);
  for (Dim m = 0; m <= gs.max_dim(); ++m)
    for (CellIndex x = 0; x < gs.size(m); ++x) phi.components[m].push_back(x);
  return phi;
}

GlobularMorphism compose(const GlobularMorphism& after,
                         const GlobularMorphism& before) {
  GlobularMorphism phi{before.source, after.target, {}};
  phi.components.resize(before.components.size());
  for (Dim m = 0; m < before.components.size(); ++m) {
    for (CellIndex y : before.components[m]) {
      const bool defined = y != kNoCell && m < after.components.size() &&
                           y < after.components[m].size();
      phi.components[m].push_back(defined ? after.components[m][y] : kNoCell);
    }
  }
  return phi;
}

GlobularSet terminal_globular_set(Dim max_dim) {
  GlobularSet gs(max_dim);
  for (Dim m = 0; m <= max_dim; ++m) {
    gs.add_cell(m, "*");
    if (m > 0) {
      gs.set_source(m, 0, 0);
      gs.set_target(m, 0, 0);
    }
  }
  return gs;
}

GlobularMorphism to_terminal(const GlobularSet& gs,
                             const GlobularSet& terminal) {
  GlobularMorphism phi{&gs, &terminal, {}};
  phi.components.resize(gs.max_dim() + 1);
  for (Dim m = 0; m <= gs.max_dim(); ++m)
    phi.components[m].assign(gs.size(m), 0);
  return phi;
}

ValidationReport validate_morphism(const GlobularMorphism& phi) {
  ValidationReport report;
  report.subject = "morphism";
  const GlobularSet& x = *phi.source;
  const GlobularSet& y = *phi.target;
  auto image = [&](Dim m, CellIndex c) -> CellIndex {
    if (m >= phi.components.size() || c >= phi.components[m].size())
      return kNoCell;
    const CellIndex d = phi.components[m][c];
    return d < y.size(m) ? d : kNoCell;
  };
  for (Dim m = 0; m <= x.max_dim(); ++m) {
    for (CellIndex c = 0; c < x.size(m); ++c) {
      const CellIndex d = image(m, c);
      if (d == kNoCell) {
        report.add("morphism.total", kMorphismCitation, {at_cell(x, m, c)},
                   "component undefined or outside the target grade");
        continue;
      }
      if (m == 0) continue;
      for (Side side : {Side::Source, Side::Target}) {
        const CellIndex lower = image(m - 1, x.face(m, c, side));
        if (lower == kNoCell || lower != y.face(m, d, side)) {
          report.add("morphism.naturality", kMorphismCitation,
                     {at_cell(x, m, c)},
                     std::string(side == Side::Source ? "source" : "target") +
                         " square does not commute");
        }
      }
    }
  }
  return report;
}

}  // namespace globforge
