#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "globforge/dsl.hpp"
#include "globforge/engine/derivation.hpp"
#include "globforge/error.hpp"
#include "globforge/free.hpp"
#include "globforge/layers.hpp"
#include "globforge/magma.hpp"
#include "globforge/report.hpp"
#include "globforge/stretching.hpp"

using namespace globforge;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Structure& pick(const Presentation& p, const std::string& name) {
  if (name.empty()) return p.structures.front();
  const Structure* s = p.find(name);
  if (!s) throw Error(ErrorKind::UnresolvedIdentifier, "no structure named '" + name + "'");
  return *s;
}

nlohmann::ordered_json reversor_table(const GlobularSet& gs, const ReversorStructure& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, table] : r.j.tables()) {
    auto [m, p] = key;
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (CellIndex x = 0; x < table.size(); ++x)
      if (table[x] != kNoCell) t[gs.name(m, x)] = gs.name(m, table[x]);
    out["j[" + std::to_string(m) + "][" + std::to_string(p) + "]"] = t;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globforge: finite higher-categorical structures and proof replay"};
  app.require_subcommand(1);
  std::string report_path, file, layer, structure, word, suite = "all";
  Dim n = 0, dim = 2;
  std::size_t max_len = 0, size = 5;
  bool has_n = false;

  auto add_common = [&](CLI::App* c, bool with_file) {
    if (with_file) {
      c->add_option("file", file, "presentation file")->required();
      c->add_option("--structure", structure, "block to use (default: first)");
    }
    c->add_option("--report", report_path, "write the report here instead of stdout");
  };
  auto* validate = app.add_subcommand("validate", "validate the declared layers");
  add_common(validate, true);
  validate->add_option("--layer", layer)->check(
      CLI::IsMember({"globular", "reversors", "reflexors", "magma", "strict", "stretching", "all"}));
  auto* derive = app.add_subcommand("derive-reversors", "canonical reversors from inverses");
  add_common(derive, true);
  derive->add_option("--n", n, "threshold (default: declared)")->each([&](const std::string&) {
    has_n = true;
  });
  auto* index = app.add_subcommand("index", "least threshold with all inverses");
  add_common(index, true);
  auto* groupoid = app.add_subcommand("free-groupoid", "reduced words over a graph");
  add_common(groupoid, true);
  groupoid->add_option("--max-len", max_len)->required();
  groupoid->add_option("--reduce", word, "word to reduce, e.g. \"@a e+ e-\"");
  auto* stretch = app.add_subcommand("stretch", "bounded free stretching");
  add_common(stretch, true);
  stretch->add_option("--n", n)->required();
  stretch->add_option("--dim", dim)->required();
  stretch->add_option("--size", size)->required();
  auto* proofs = app.add_subcommand("check-proofs", "replay the built-in derivations");
  add_common(proofs, false);
  proofs->add_option("--suite", suite)
      ->check(CLI::IsMember({"S1", "S2", "S3a", "S3b", "S4", "S5a", "S5b", "S5c", "S6", "S7",
                             "all"}));

  CLI11_PARSE(app, argc, argv);

  ValidationReport report;
  try {
    if (proofs->parsed()) {
      report.subject = "proofs:" + suite;
      for (const auto& s : engine::builtin_suites())
        if (suite == "all" || s.name == suite) {
          ValidationReport r = engine::check_suite(s);
          std::cerr << s.name << ": " << (r.valid() ? "ok" : "FAILED") << "\n";
          report.merge(r);
        }
    } else {
      Presentation p = parse_presentation(read_file(file));
      const Structure& s = pick(p, structure);
      report.subject = file;
      if (validate->parsed()) {
        if (structure.empty()) {
          for (const auto& each : p.structures) report.merge(validate_structure(p, each, layer));
        } else {
          report.merge(validate_structure(p, s, layer));
        }
      } else if (derive->parsed()) {
        Dim threshold = has_n ? n : s.threshold;
        try {
          ReversorStructure r = derive_canonical_reversors(s.magma(), threshold);
          report.data = {{"threshold", threshold}, {"reversors", reversor_table(s.cells, r)}};
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NoInverse && e.kind() != ErrorKind::AmbiguousInverse) throw;
          report.add("reversor.derivation", "canonical reversors", {}, e.what());
        }
      } else if (index->parsed()) {
        report.data = {{"index", compute_index(s.magma())}};
      } else if (groupoid->parsed()) {
        FreeGroupoid g = free_groupoid_cells(s.cells, max_len);
        report.merge(validate_magma(g.category.magma));
        report.merge(validate_strict(g.category.magma));
        nlohmann::ordered_json words = nlohmann::ordered_json::array();
        for (const auto& w : g.words) words.push_back(word_name(s.cells, w));
        report.data = {{"max_len", max_len}, {"words", words}};
        if (!word.empty()) {
          Word w = parse_word(s.cells, word);
          report.data["reduced"] = word_name(s.cells, reduce_word(s.cells, w));
        }
      } else if (stretch->parsed()) {
        FreeStretching fs = generate_free_stretching(s.cells, n, dim, size);
        report.merge(validate_stretching(fs.stretching));
        nlohmann::ordered_json m = nlohmann::ordered_json::array(), c = m;
        for (Dim d = 0; d <= dim; ++d) {
          m.push_back(fs.stretching.m.magma.gs.size(d));
          c.push_back(fs.stretching.c.gs.size(d));
        }
        report.data = {{"n", n}, {"dim", dim}, {"size", size}, {"magma_cells", m},
                       {"category_cells", c}};
      }
      report.subject = file;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }

  std::string text = emit_report(report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    out << text;
    std::cerr << (report.valid() ? "valid" : "invalid") << ": " << report.violations.size()
              << " violation(s)\n";
  }
  return report.valid() ? 0 : 1;
}
