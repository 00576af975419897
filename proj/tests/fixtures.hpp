#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "globforge/dsl.hpp"
#include "globforge/free.hpp"
#include "globforge/magma.hpp"

namespace fixtures {

using Edit = std::pair<std::string, std::string>;  // line -> replacement

/// Replaces whole lines. Each `from` must occur exactly once.
inline std::string mutate(const std::string& src, const std::vector<Edit>& edits) {
  std::string out = src;
  for (const auto& [from, to] : edits) {
    const std::string needle = "\n" + from + "\n";
    const auto at = out.find(needle);
    if (at == std::string::npos || out.find(needle, at + 1) != std::string::npos)
      throw std::logic_error("mutation line not found exactly once: " + from);
    out.replace(at + 1, from.size(), to);
  }
  return out;
}

struct AxiomCase {
  std::string family;
  std::string axiom;  // the id the mutant must name
  std::string valid;
  std::vector<Edit> edits;
  bool strict = false;  // also run the strict-category layer
  std::string mutant() const { return mutate(valid, edits); }
};

// Two parallel 1-cells and a 2-cell between them.
inline const std::string kGlobe = R"(
dim 2
cells 0: a b
cells 1: f g
cells 2: al
src f = a
tgt f = b
src g = a
tgt g = b
src al = f
tgt al = g
)";

// Loops u, u' swapped by j10; 2-cells over each.
inline const std::string kReversorA = R"(
dim 2
threshold 0
cells 0: a
cells 1: u u'
cells 2: al be
src u = a
tgt u = a
src u' = a
tgt u' = a
src al = u
tgt al = u
src be = u'
tgt be = u'
rev 1 0 u = u'
rev 1 0 u' = u
rev 2 1 al = al
rev 2 1 be = be
rev 2 0 al = be
rev 2 0 be = al
)";

inline const std::string kWalkingIsoCells = R"(
dim 1
threshold 0
cells 0: a b
cells 1: f g ida idb
src f = a
tgt f = b
src g = b
tgt g = a
src ida = a
tgt ida = a
src idb = b
tgt idb = b
refl 0 1 a = ida
refl 0 1 b = idb
)";

inline const std::string kWalkingIsoComp = R"(comp 1 0 (g, f) = ida
comp 1 0 (f, g) = idb
comp 1 0 (f, ida) = f
comp 1 0 (idb, f) = f
comp 1 0 (g, idb) = g
comp 1 0 (ida, g) = g
comp 1 0 (ida, ida) = ida
comp 1 0 (idb, idb) = idb
)";

inline const std::string kWalkingIsoRev = R"(rev 1 0 f = g
rev 1 0 g = f
rev 1 0 ida = ida
rev 1 0 idb = idb
)";

inline const std::string kWalkingIso = kWalkingIsoCells + kWalkingIsoComp + kWalkingIsoRev;

inline const std::string kReflexorComposite = R"(
dim 2
cells 0: a
cells 1: ida
cells 2: idida other
src ida = a
tgt ida = a
src idida = ida
tgt idida = ida
src other = ida
tgt other = ida
refl 0 1 a = ida
refl 1 2 ida = idida
refl 0 2 a = idida
)";

inline const std::string kThreeLoops = R"(
dim 1
threshold 0
cells 0: a
cells 1: x y z
src x = a
tgt x = a
src y = a
tgt y = a
src z = a
tgt z = a
rev 1 0 x = y
rev 1 0 y = x
rev 1 0 z = z
)";

inline const std::string kCompatI = R"(
dim 1
threshold 0
cells 0: a
cells 1: ida k
src ida = a
tgt ida = a
src k = a
tgt k = a
refl 0 1 a = ida
rev 1 0 ida = ida
rev 1 0 k = k
)";

// One object, loops e u v with j10 swapping u and v, identity 2-cells and
// two spare 2-cells X: v => v, Y: u => u.
inline const std::string kCompatII = R"(
dim 2
threshold 0
cells 0: a
cells 1: e u v
cells 2: 1e 1u 1v X Y
src e = a
tgt e = a
src u = a
tgt u = a
src v = a
tgt v = a
src 1e = e
tgt 1e = e
src 1u = u
tgt 1u = u
src 1v = v
tgt 1v = v
src X = v
tgt X = v
src Y = u
tgt Y = u
refl 0 1 a = e
refl 1 2 e = 1e
refl 1 2 u = 1u
refl 1 2 v = 1v
rev 1 0 e = e
rev 1 0 u = v
rev 1 0 v = u
rev 2 1 1e = 1e
rev 2 1 1u = 1u
rev 2 1 1v = 1v
rev 2 1 X = X
rev 2 1 Y = Y
rev 2 0 1e = 1e
rev 2 0 1u = 1v
rev 2 0 1v = 1u
rev 2 0 X = Y
rev 2 0 Y = X
)";

// One object, Z/2 = {1, z} on 1-cells, identity 2-cells E1, Ez.
inline const std::string kPositionalA = R"(
dim 2
cells 0: a
cells 1: 1 z
cells 2: E1 Ez
src 1 = a
tgt 1 = a
src z = a
tgt z = a
src E1 = 1
tgt E1 = 1
src Ez = z
tgt Ez = z
comp 1 0 (1, 1) = 1
comp 1 0 (1, z) = z
comp 1 0 (z, 1) = z
comp 1 0 (z, z) = 1
comp 2 1 (E1, E1) = E1
comp 2 1 (Ez, Ez) = Ez
comp 2 0 (E1, E1) = E1
comp 2 0 (E1, Ez) = Ez
comp 2 0 (Ez, E1) = Ez
comp 2 0 (Ez, Ez) = E1
)";

inline const std::string kWalkingArrow = R"(
dim 1
cells 0: a b
cells 1: ida idb f
src ida = a
tgt ida = a
src idb = b
tgt idb = b
src f = a
tgt f = b
refl 0 1 a = ida
refl 0 1 b = idb
comp 1 0 (f, ida) = f
comp 1 0 (idb, f) = f
comp 1 0 (ida, ida) = ida
comp 1 0 (idb, idb) = idb
)";

/// One-object category from a multiplication table on named elements;
/// element 0 is the identity.
inline std::string one_object(const std::vector<std::string>& names,
                              const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::string s = "\ndim 1\nthreshold 0\ncells 0: o\ncells 1:";
  for (const auto& n : names) s += " " + n;
  s += "\n";
  for (const auto& n : names) s += "src " + n + " = o\ntgt " + n + " = o\n";
  s += "refl 0 1 o = " + names[0] + "\n";
  for (std::size_t y = 0; y < names.size(); ++y)
    for (std::size_t x = 0; x < names.size(); ++x)
      s += "comp 1 0 (" + names[y] + ", " + names[x] + ") = " + names[mul(y, x)] + "\n";
  return s;
}

inline std::string cyclic3() {
  return one_object({"g0", "g1", "g2"}, [](std::size_t y, std::size_t x) { return (x + y) % 3; });
}

// {one, zero} under multiplication.
inline std::string two_element_monoid() {
  return one_object({"one", "zero"}, [](std::size_t y, std::size_t x) { return std::max(x, y); });
}

/// One object and one 1-cell; 2-cells E A B. `c1` and `c0` give the
/// vertical and horizontal products on {E, A, B} as index tables.
inline std::string three_two_cells(const std::size_t c1[3][3], const std::size_t c0[3][3]) {
  const char* n[3] = {"E", "A", "B"};
  std::string s =
      "\ndim 2\ncells 0: o\ncells 1: i\ncells 2: E A B\nsrc i = o\ntgt i = o\n";
  for (const char* x : n) s += std::string("src ") + x + " = i\ntgt " + x + " = i\n";
  s += "refl 0 1 o = i\nrefl 1 2 i = E\ncomp 1 0 (i, i) = i\n";
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) {
      s += std::string("comp 2 1 (") + n[y] + ", " + n[x] + ") = " + n[c1[y][x]] + "\n";
      s += std::string("comp 2 0 (") + n[y] + ", " + n[x] + ") = " + n[c0[y][x]] + "\n";
    }
  return s;
}

// E top, B bottom: the meet semilattice E > A > B.
inline constexpr std::size_t kMeet[3][3] = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
// Left-zero band {A, B} with E adjoined as identity.
inline constexpr std::size_t kLeftZero[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};

/// 2-cells (k, s) with k in {E, U} joined vertically, s in Z/2 on 1-cells.
/// Horizontal composition joins k, k' and phi(s, s'), with phi(z, z) = U
/// when `twisted`.
inline std::string joined_pairs(bool twisted) {
  const char* one[2] = {"s1", "sz"};
  const char* two[2][2] = {{"E1", "Ez"}, {"U1", "Uz"}};
  std::string s = "\ndim 2\ncells 0: o\ncells 1: s1 sz\ncells 2: E1 Ez U1 Uz\n";
  for (const char* x : one) s += std::string("src ") + x + " = o\ntgt " + x + " = o\n";
  for (int k = 0; k < 2; ++k)
    for (int t = 0; t < 2; ++t)
      s += std::string("src ") + two[k][t] + " = " + one[t] + "\ntgt " + two[k][t] + " = " +
           one[t] + "\n";
  s += "refl 0 1 o = s1\nrefl 1 2 s1 = E1\nrefl 1 2 sz = Ez\n";
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x)
      s += std::string("comp 1 0 (") + one[y] + ", " + one[x] + ") = " + one[y ^ x] + "\n";
  for (int ky = 0; ky < 2; ++ky)
    for (int kx = 0; kx < 2; ++kx)
      for (int ty = 0; ty < 2; ++ty)
        for (int tx = 0; tx < 2; ++tx) {
          if (ty == tx)
            s += std::string("comp 2 1 (") + two[ky][ty] + ", " + two[kx][tx] + ") = " +
                 two[ky | kx][ty] + "\n";
          const int phi = twisted && ty == 1 && tx == 1;
          s += std::string("comp 2 0 (") + two[ky][ty] + ", " + two[kx][tx] + ") = " +
               two[ky | kx | phi][ty ^ tx] + "\n";
        }
  return s;
}

// Strict 2-groupoid C: 1-cells Z/2, 2-cells Z/2 x Z/2. M over C has
// two parallel lifts uz, w of cz bracketed in both directions.
inline const std::string kStretching = R"(
structure C
dim 2
threshold 0
cells 0: o
cells 1: c1 cz
cells 2: E1 Ez V1 Vz
src c1 = o
tgt c1 = o
src cz = o
tgt cz = o
src E1 = c1
tgt E1 = c1
src V1 = c1
tgt V1 = c1
src Ez = cz
tgt Ez = cz
src Vz = cz
tgt Vz = cz
refl 0 1 o = c1
refl 1 2 c1 = E1
refl 1 2 cz = Ez
comp 1 0 (c1, c1) = c1
comp 1 0 (c1, cz) = cz
comp 1 0 (cz, c1) = cz
comp 1 0 (cz, cz) = c1
comp 2 1 (E1, E1) = E1
comp 2 1 (E1, V1) = V1
comp 2 1 (V1, E1) = V1
comp 2 1 (V1, V1) = E1
comp 2 1 (Ez, Ez) = Ez
comp 2 1 (Ez, Vz) = Vz
comp 2 1 (Vz, Ez) = Vz
comp 2 1 (Vz, Vz) = Ez
comp 2 0 (E1, E1) = E1
comp 2 0 (E1, Ez) = Ez
comp 2 0 (E1, V1) = V1
comp 2 0 (E1, Vz) = Vz
comp 2 0 (Ez, E1) = Ez
comp 2 0 (Ez, Ez) = E1
comp 2 0 (Ez, V1) = Vz
comp 2 0 (Ez, Vz) = V1
comp 2 0 (V1, E1) = V1
comp 2 0 (V1, Ez) = Vz
comp 2 0 (V1, V1) = E1
comp 2 0 (V1, Vz) = Ez
comp 2 0 (Vz, E1) = Vz
comp 2 0 (Vz, Ez) = V1
comp 2 0 (Vz, V1) = Ez
comp 2 0 (Vz, Vz) = E1

structure M
over C
dim 2
cells 0: a
cells 1: u1 uz w
cells 2: i1 iz iw k1 k2 k3
src u1 = a
tgt u1 = a
src uz = a
tgt uz = a
src w = a
tgt w = a
src i1 = u1
tgt i1 = u1
src iz = uz
tgt iz = uz
src iw = w
tgt iw = w
src k1 = w
tgt k1 = uz
src k2 = uz
tgt k2 = w
src k3 = uz
tgt k3 = uz
refl 0 1 a = u1
refl 1 2 u1 = i1
refl 1 2 uz = iz
refl 1 2 w = iw
partial comp
comp 1 0 (u1, u1) = u1
comp 1 0 (u1, uz) = uz
comp 1 0 (u1, w) = uz
comp 1 0 (uz, u1) = uz
comp 1 0 (uz, uz) = u1
comp 1 0 (uz, w) = u1
comp 1 0 (w, u1) = uz
comp 1 0 (w, uz) = u1
comp 1 0 (w, w) = u1
pi 0 a = o
pi 1 u1 = c1
pi 1 uz = cz
pi 1 w = cz
pi 2 i1 = E1
pi 2 iz = Ez
pi 2 iw = Ez
pi 2 k1 = Ez
pi 2 k2 = Ez
pi 2 k3 = Ez
bracket 0 (a, a) = u1
bracket 1 (u1, u1) = i1
bracket 1 (uz, uz) = iz
bracket 1 (w, w) = iw
bracket 1 (uz, w) = k1
bracket 1 (w, uz) = k2
)";

/// One valid fixture and one mutant per axiom family. Positional (c) has
/// no entry: no mutant names it alone (see positional_c_search).
inline std::vector<AxiomCase> axiom_cases() {
  std::vector<AxiomCase> cases;
  cases.push_back({"globular identities", "globular.tt", kGlobe, {{"tgt g = b", "tgt g = a"}}});
  cases.push_back({"globular identities", "globular.ss", kGlobe, {{"src g = a", "src g = b"}}});
  cases.push_back({"reversor (a)", "reversor.a", kReversorA,
                   {{"rev 2 0 al = be", "rev 2 0 al = al"}, {"rev 2 0 be = al", "rev 2 0 be = be"}}});
  cases.push_back({"reversor (b)", "reversor.b", kWalkingIso,
                   {{"rev 1 0 f = g", "rev 1 0 f = f"}, {"rev 1 0 g = f", "rev 1 0 g = g"}}});
  cases.push_back({"reflexor unit", "reflexor.unit", kWalkingIsoCells,
                   {{"refl 0 1 a = ida", "refl 0 1 a = f"}}});
  cases.push_back({"reflexor composite", "reflexor.composite", kReflexorComposite,
                   {{"refl 0 2 a = idida", "refl 0 2 a = other"}}});
  cases.push_back({"involutivity", "involutive", kThreeLoops,
                   {{"rev 1 0 y = x", "rev 1 0 y = z"}, {"rev 1 0 z = z", "rev 1 0 z = x"}}});
  cases.push_back({"reflexor compatibility (i)", "reflexive-compat.i", kCompatI,
                   {{"rev 1 0 ida = ida", "rev 1 0 ida = k"}, {"rev 1 0 k = k", "rev 1 0 k = ida"}}});
  cases.push_back({"reflexor compatibility (ii)", "reflexive-compat.ii", kCompatII,
                   {{"rev 2 0 1u = 1v", "rev 2 0 1u = X"},
                    {"rev 2 0 X = Y", "rev 2 0 X = 1u"},
                    {"rev 2 0 1v = 1u", "rev 2 0 1v = Y"},
                    {"rev 2 0 Y = X", "rev 2 0 Y = 1v"}}});
  cases.push_back({"positional (a)", "positional.a", kPositionalA,
                   {{"comp 2 0 (Ez, E1) = Ez", "comp 2 0 (Ez, E1) = E1"}}});
  cases.push_back({"positional (b)", "positional.b", kWalkingArrow,
                   {{"comp 1 0 (f, ida) = f", "comp 1 0 (f, ida) = ida"}}});
  cases.push_back({"associativity", "strict.assoc", cyclic3(),
                   {{"comp 1 0 (g1, g1) = g2", "comp 1 0 (g1, g1) = g1"}}, true});
  cases.push_back({"units", "strict.units", two_element_monoid(),
                   {{"refl 0 1 o = one", "refl 0 1 o = zero"}}, true});
  cases.push_back({"interchange", "strict.interchange", three_two_cells(kMeet, kMeet),
                   {{"comp 2 0 (A, B) = B", "comp 2 0 (A, B) = A"}}, true});
  cases.push_back({"reflexor functoriality", "strict.refl-functor", joined_pairs(false),
                   {{"comp 2 0 (Ez, Ez) = E1", "comp 2 0 (Ez, Ez) = U1"}}, true});
  cases.push_back({"bracket boundary", "stretch.bracket-boundary", kStretching,
                   {{"src k1 = w", "src k1 = uz"}, {"tgt k1 = uz", "tgt k1 = w"}}});
  cases.push_back({"bracket projection", "stretch.bracket-projection", kStretching,
                   {{"pi 2 k1 = Ez", "pi 2 k1 = Vz"}}});
  cases.push_back({"bracket diagonal", "stretch.bracket-diagonal", kStretching,
                   {{"bracket 1 (uz, uz) = iz", "bracket 1 (uz, uz) = k3"}}});
  return cases;
}

/// Every declared layer of every block; the strict layer only on request.
inline globforge::ValidationReport validate_all(const std::string& src, bool strict = false) {
  globforge::Presentation p = globforge::parse_presentation(src);
  globforge::ValidationReport r;
  for (const auto& s : p.structures)
    r.merge(globforge::validate_structure(p, s, strict ? "all" : ""));
  return r;
}

/// Cayley-style table of a finite group given as permutations of
/// {0..k-1}; element 0 must be the identity.
inline std::vector<std::vector<std::size_t>> perm_group_table(
    const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t y = 0; y < perms.size(); ++y)
    for (std::size_t x = 0; x < perms.size(); ++x) {
      std::vector<std::size_t> yx(perms[x].size());
      for (std::size_t i = 0; i < yx.size(); ++i) yx[i] = perms[y][perms[x][i]];
      t[y][x] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), yx) - perms.begin());
    }
  return t;
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t k) {
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  for (std::size_t y = 0; y < k; ++y)
    for (std::size_t x = 0; x < k; ++x) t[y][x] = (x + y) % k;
  return t;
}

inline std::vector<std::vector<std::size_t>> s3_table() {
  return perm_group_table(
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}});
}

// Symmetries of a square acting on its corners.
inline std::vector<std::vector<std::size_t>> d4_table() {
  return perm_group_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
                           {3, 2, 1, 0}, {1, 0, 3, 2}, {0, 3, 2, 1}, {2, 1, 0, 3}});
}

inline std::vector<std::string> element_names(const std::string& prefix, std::size_t k) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < k; ++i) n.push_back(prefix + std::to_string(i));
  return n;
}

inline std::string group_source(const std::vector<std::vector<std::size_t>>& t) {
  return one_object(element_names("g", t.size()),
                    [&](std::size_t y, std::size_t x) { return t[y][x]; });
}

/// One object, group elements as 1-cells, only identity 2-cells.
inline std::string discrete_2_source(const std::vector<std::vector<std::size_t>>& t) {
  const auto g = element_names("g", t.size());
  std::string s = group_source(t);
  s.replace(s.find("dim 1"), 5, "dim 2");
  s += "cells 2:";
  for (const auto& x : g) s += " 1" + x;
  s += "\n";
  for (const auto& x : g) s += "src 1" + x + " = " + x + "\ntgt 1" + x + " = " + x + "\n";
  for (const auto& x : g) s += "refl 1 2 " + x + " = 1" + x + "\n";
  for (std::size_t y = 0; y < g.size(); ++y) {
    s += "comp 2 1 (1" + g[y] + ", 1" + g[y] + ") = 1" + g[y] + "\n";
    for (std::size_t x = 0; x < g.size(); ++x)
      s += "comp 2 0 (1" + g[y] + ", 1" + g[x] + ") = 1" + g[t[y][x]] + "\n";
  }
  return s;
}

/// One object, one 1-cell, an abelian group of 2-cells under both
/// compositions.
inline std::string abelian_2_group_source(const std::vector<std::vector<std::size_t>>& t) {
  const auto g = element_names("h", t.size());
  std::string s = "\ndim 2\nthreshold 0\ncells 0: o\ncells 1: i\ncells 2:";
  for (const auto& x : g) s += " " + x;
  s += "\nsrc i = o\ntgt i = o\n";
  for (const auto& x : g) s += "src " + x + " = i\ntgt " + x + " = i\n";
  s += "refl 0 1 o = i\nrefl 1 2 i = " + g[0] + "\ncomp 1 0 (i, i) = i\n";
  for (std::size_t y = 0; y < g.size(); ++y)
    for (std::size_t x = 0; x < g.size(); ++x) {
      s += "comp 2 1 (" + g[y] + ", " + g[x] + ") = " + g[t[y][x]] + "\n";
      s += "comp 2 0 (" + g[y] + ", " + g[x] + ") = " + g[t[y][x]] + "\n";
    }
  return s;
}

inline globforge::InfinityMagma magma_of(const std::string& src, const std::string& block = "") {
  globforge::Presentation p = globforge::parse_presentation(src);
  return (block.empty() ? p.structures.front() : *p.find(block)).magma();
}

/// Componentwise product of two magmas of equal dimension.
inline globforge::InfinityMagma product(const globforge::InfinityMagma& a,
                                        const globforge::InfinityMagma& b) {
  using namespace globforge;
  const Dim d = a.gs.max_dim();
  if (b.gs.max_dim() != d) throw std::logic_error("product of magmas of different dimension");
  InfinityMagma out;
  out.gs = GlobularSet(d);
  auto pair = [&](Dim m, CellIndex x, CellIndex y) { return x * b.gs.size(m) + y; };
  for (Dim m = 0; m <= d; ++m)
    for (CellIndex x = 0; x < a.gs.size(m); ++x)
      for (CellIndex y = 0; y < b.gs.size(m); ++y) {
        out.gs.add_cell(m, "(" + a.gs.name(m, x) + "," + b.gs.name(m, y) + ")");
        if (m > 0) {
          out.gs.set_source(m, pair(m, x, y),
                            pair(m - 1, a.gs.source(m, x), b.gs.source(m, y)));
          out.gs.set_target(m, pair(m, x, y),
                            pair(m - 1, a.gs.target(m, x), b.gs.target(m, y)));
        }
      }
  for (Dim m = 0; m < d; ++m)
    for (CellIndex x = 0; x < a.gs.size(m); ++x)
      for (CellIndex y = 0; y < b.gs.size(m); ++y) {
        const CellIndex rx = a.refl(m, m + 1, x), ry = b.refl(m, m + 1, y);
        if (rx != kNoCell && ry != kNoCell)
          out.refl.set(m, m + 1, pair(m, x, y), pair(m + 1, rx, ry));
      }
  for (const auto& [key, ta] : a.comp.tables()) {
    const auto [m, p] = key;
    auto it = b.comp.tables().find(key);
    if (it == b.comp.tables().end()) continue;
    for (const auto& [ka, ra] : ta)
      for (const auto& [kb, rb] : it->second)
        out.comp.set(m, p,
                     pair(m, CompositionStructure::key_y(ka), CompositionStructure::key_y(kb)),
                     pair(m, CompositionStructure::key_x(ka), CompositionStructure::key_x(kb)),
                     pair(m, ra, rb));
  }
  return out;
}

/// Graph with vertices v0.. and the given directed edges.
inline globforge::GlobularSet graph(std::size_t vertices,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  globforge::GlobularSet g(1);
  for (std::size_t v = 0; v < vertices; ++v) g.add_cell(0, "v" + std::to_string(v));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto e = g.add_cell(1, "e" + std::to_string(i));
    g.set_source(1, e, edges[i].first);
    g.set_target(1, e, edges[i].second);
  }
  return g;
}

struct NamedMagma {
  std::string name;
  globforge::InfinityMagma magma;
};

/// Strict (oo,0)-categories of dimension <= 2: finite groups, products,
/// free groupoids on forests (finite, so no truncation) and 2-groups.
inline std::vector<NamedMagma> strict_groupoids() {
  std::vector<NamedMagma> out;
  for (std::size_t k = 1; k <= 6; ++k)
    out.push_back({"Z/" + std::to_string(k), magma_of(group_source(cyclic_table(k)))});
  out.push_back({"S3", magma_of(group_source(s3_table()))});
  out.push_back({"D4", magma_of(group_source(d4_table()))});
  const auto z2 = magma_of(group_source(cyclic_table(2)));
  const auto z3 = magma_of(group_source(cyclic_table(3)));
  const auto s3 = magma_of(group_source(s3_table()));
  out.push_back({"Z/2 x Z/2", product(z2, z2)});
  out.push_back({"Z/2 x Z/3", product(z2, z3)});
  out.push_back({"Z/3 x Z/3", product(z3, z3)});
  out.push_back({"Z/2 x S3", product(z2, s3)});
  const std::vector<std::pair<std::string, globforge::GlobularSet>> forests = {
      {"point", graph(1, {})},
      {"edge", graph(2, {{0, 1}})},
      {"path", graph(3, {{0, 1}, {1, 2}})},
      {"cospan", graph(3, {{0, 1}, {2, 1}})},
      {"star", graph(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"edge + point", graph(3, {{0, 1}})},
  };
  for (const auto& [name, g] : forests)
    out.push_back({"free groupoid on " + name,
                   globforge::free_groupoid_cells(g, g.size(1)).category.magma});
  const auto edge = globforge::free_groupoid_cells(graph(2, {{0, 1}}), 1).category.magma;
  out.push_back({"edge x Z/2", product(edge, z2)});
  out.push_back({"discrete 2-cells over Z/3", magma_of(discrete_2_source(cyclic_table(3)))});
  out.push_back({"discrete 2-cells over S3", magma_of(discrete_2_source(s3_table()))});
  const auto h2 = magma_of(abelian_2_group_source(cyclic_table(2)));
  const auto h3 = magma_of(abelian_2_group_source(cyclic_table(3)));
  out.push_back({"2-group Z/2", h2});
  out.push_back({"2-group Z/3", h3});
  out.push_back({"2-group Z/2 x Z/2", product(h2, h2)});
  out.push_back({"2-group Z/2 x discrete Z/3", product(h2, magma_of(discrete_2_source(cyclic_table(3))))});
  out.push_back({"Z/2 x Z/2 2-groupoid", magma_of(kStretching, "C")});
  return out;
}

}  // namespace fixtures
