#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace globforge {

/// One failed axiom instance.
struct Violation {
  std::string axiom;               // stable id, e.g. "reversor.b"
  std::string citation;            // which axiom family it belongs to
  std::vector<std::string> cells;  // involved cells or derivation steps
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of a validator. Violations are data; `valid()` is derived from them.
struct ValidationReport {
  std::string subject;
  std::vector<Violation> violations;
  /// Optional structured payload (stretching dumps, derived tables). Null
  /// when absent and then omitted from the serialized form.
  nlohmann::ordered_json data;

  bool valid() const noexcept { return violations.empty(); }

  void add(std::string axiom, std::string citation,
           std::vector<std::string> cells, std::string detail);
  void merge(const ValidationReport& other);

  /// True if some violation carries `axiom`.
  bool names(std::string_view axiom) const;
  std::vector<std::string> axioms() const;  // distinct, sorted

  /// Sorts violations by axiom id, then cells, then detail.
  void canonicalize();

  friend bool operator==(const ValidationReport&, const ValidationReport&);
};

/// Canonical text form: two-space indented JSON, keys in fixed order
/// (subject, valid, violations[, data]), violations canonically sorted,
/// trailing newline.
std::string emit_report(ValidationReport report);

/// Inverse of emit_report. Throws Error(ParseError) on malformed input.
ValidationReport parse_report(std::string_view text);

}  // namespace globforge
