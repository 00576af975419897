#include "doctest.h"
#include "fixtures.hpp"
#include "globforge/error.hpp"
#include "globforge/free.hpp"
#include "globforge/magma.hpp"
#include "globforge/stretching.hpp"

using namespace globforge;

namespace {

const std::string kPath = R"(
dim 1
threshold 0
cells 0: a b c
cells 1: ida idb idc f g gf
src ida = a
tgt ida = a
src idb = b
tgt idb = b
src idc = c
tgt idc = c
src f = a
tgt f = b
src g = b
tgt g = c
src gf = a
tgt gf = c
refl 0 1 a = ida
refl 0 1 b = idb
refl 0 1 c = idc
comp 1 0 (g, f) = gf
comp 1 0 (f, ida) = f
comp 1 0 (idb, f) = f
comp 1 0 (g, idb) = g
comp 1 0 (idc, g) = g
comp 1 0 (gf, ida) = gf
comp 1 0 (idc, gf) = gf
comp 1 0 (ida, ida) = ida
comp 1 0 (idb, idb) = idb
comp 1 0 (idc, idc) = idc
)";

InfinityMagma z2() {
  return fixtures::magma_of(fixtures::one_object(
      {"e", "u"}, [](std::size_t y, std::size_t x) { return (x + y) % 2; }));
}

}  // namespace

TEST_SUITE("magma") {
  TEST_CASE("path category") {
    const InfinityMagma p = fixtures::magma_of(kPath);
    CHECK(validate_magma(p).valid());
    CHECK(validate_strict(p).valid());
    const InfinityMagma bad = fixtures::magma_of(
        fixtures::mutate(kPath, {{"comp 1 0 (g, f) = gf", "comp 1 0 (g, f) = f"}}));
    const auto r = validate_magma(bad);
    CHECK(r.names("positional.b"));
    bool at_gf = false;
    for (const auto& v : r.violations)
      at_gf |= v.axiom == "positional.b" && v.cells == std::vector<std::string>{"1:g", "1:f"};
    CHECK(at_gf);
  }

  TEST_CASE("composites outside the domain") {
    InfinityMagma p = fixtures::magma_of(kPath);
    p.comp.set(1, 0, p.gs.index_of(1, "f"), p.gs.index_of(1, "g"), 0);
    CHECK(validate_magma(p).axioms() == std::vector<std::string>{"comp.domain"});
  }

  TEST_CASE("missing composites") {
    InfinityMagma p = fixtures::magma_of(fixtures::mutate(kPath, {{"comp 1 0 (g, f) = gf", ""}}));
    CHECK(validate_magma(p).axioms() == std::vector<std::string>{"comp.total"});
    p.comp.partial = true;
    CHECK(validate_magma(p).valid());
  }

  TEST_CASE("Z/2 is strict and self-inverse") {
    const InfinityMagma m = z2();
    CHECK(validate_magma(m).valid());
    CHECK(validate_strict(m).valid());
    const ReversorStructure j = derive_canonical_reversors(m, 0);
    CHECK(j(1, 0, 0) == 0);
    CHECK(j(1, 0, 1) == 1);
    CHECK(compute_index(m) == 0);
  }

  TEST_CASE("broken associativity names the triple") {
    const InfinityMagma m = fixtures::magma_of(fixtures::mutate(
        fixtures::cyclic3(), {{"comp 1 0 (g1, g1) = g2", "comp 1 0 (g1, g1) = g1"}}));
    const auto r = validate_strict(m);
    REQUIRE(r.names("strict.assoc"));
    bool has_triple = false;
    for (const auto& v : r.violations) has_triple |= v.cells.size() == 3;
    CHECK(has_triple);
  }

  TEST_CASE("walking isomorphism") {
    const InfinityMagma w = fixtures::magma_of(fixtures::kWalkingIso);
    CHECK(validate_strict(w).valid());
    const ReversorStructure j = derive_canonical_reversors(w, 0);
    const auto idx = [&](const char* n) { return w.gs.index_of(1, n); };
    CHECK(j(1, 0, idx("f")) == idx("g"));
    CHECK(j(1, 0, idx("g")) == idx("f"));
    CHECK(j(1, 0, idx("ida")) == idx("ida"));
    CHECK(j(1, 0, idx("idb")) == idx("idb"));
    CHECK(compute_index(w) == 0);
    for (CellIndex x = 0; x < w.gs.size(1); ++x) CHECK(count_inverses(w, 1, 0, x) == 1);
  }

  TEST_CASE("poset 2 has no inverse for f") {
    const InfinityMagma p = fixtures::magma_of(fixtures::kWalkingArrow);
    try {
      derive_canonical_reversors(p, 0);
      FAIL("expected NoInverse");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoInverse);
      CHECK(std::string(e.what()).find("f") != std::string::npos);
    }
    CHECK(compute_index(p) == 1);
    CHECK(derive_canonical_reversors(p, 1).j.tables().empty());
  }

  TEST_CASE("discrete 0-dimensional set has index 0") {
    InfinityMagma d;
    d.gs = GlobularSet(0);
    d.gs.add_cell(0, "x");
    d.gs.add_cell(0, "y");
    CHECK(compute_index(d) == 0);
  }

  TEST_CASE("free 2-truncated strict category validates") {
    GlobularSet g(2);
    g.add_cell(0, "a");
    g.add_cell(1, "f");
    g.set_source(1, 0, 0);
    g.set_target(1, 0, 0);
    g.add_cell(2, "al");
    g.set_source(2, 0, 0);
    g.set_target(2, 0, 0);
    const FreeStretching fs = generate_free_stretching(g, 2, 2, 5);
    CHECK(validate_magma(fs.stretching.c).valid());
    CHECK(validate_strict(fs.stretching.c).valid());
  }

  TEST_CASE("functors preserve reversors") {
    const InfinityMagma w = fixtures::magma_of(fixtures::kWalkingIso);
    const GlobularMorphism id = identity_morphism(w.gs);
    CHECK(validate_functor(id, w, w).valid());
    CHECK(check_functor_reversors(id, w, w, 0).valid());

    // quotient of the free groupoid on one edge onto Z/2
    const FreeGroupoid fg = free_groupoid_cells(fixtures::graph(2, {{0, 1}}), 1);
    const InfinityMagma& c = fg.category.magma;
    const InfinityMagma q = z2();
    GlobularMorphism f{&c.gs, &q.gs, {{0, 0}, {}}};
    for (const auto& w : fg.words) f.components[1].push_back(w.steps.size() % 2);
    CHECK(validate_functor(f, c, q).valid());
    CHECK(check_functor_reversors(f, c, q, 0).valid());

    // g1, g2 |-> g1 on Z/3 does not preserve composition
    const InfinityMagma z3 = fixtures::magma_of(fixtures::cyclic3());
    GlobularMorphism bad{&z3.gs, &z3.gs, {{0}, {0, 1, 1}}};
    CHECK(validate_functor(bad, z3, z3).names("functor.comp"));
    CHECK_FALSE(check_functor_reversors(bad, z3, z3, 0).valid());
  }

  TEST_CASE("derived reversors satisfy the reversible-structure theorems") {
    for (const auto& [name, m] : fixtures::strict_groupoids()) {
      CAPTURE(name);
      const ReversorStructure j = derive_canonical_reversors(m, 0);
      CHECK(validate_involutive(m.gs, j).valid());
      CHECK(validate_reflexive_compat(m.gs, m.refl, j).valid());
      for (Dim d = 1; d <= m.gs.max_dim(); ++d)
        for (Dim p = 0; p < d; ++p)
          for (CellIndex x = 0; x < m.gs.size(d); ++x) CHECK(count_inverses(m, d, p, x) == 1);
    }
  }
}
