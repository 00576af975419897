#include "globforge/report.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "globforge/error.hpp"

namespace globforge {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionOutOfRange: return "dimension-out-of-range";
    case ErrorKind::GradeMismatch: return "grade-mismatch";
    case ErrorKind::UnknownCell: return "unknown-cell";
    case ErrorKind::DuplicateDeclaration: return "duplicate-declaration";
    case ErrorKind::NoInverse: return "no-inverse";
    case ErrorKind::AmbiguousInverse: return "ambiguous-inverse";
    case ErrorKind::MalformedWord: return "malformed-word";
    case ErrorKind::IllTypedTerm: return "ill-typed-term";
    case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::SectionViolation: return "section-violation";
    case ErrorKind::NoMatch: return "no-match";
    case ErrorKind::SideConditionViolated: return "side-condition-violated";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::UnresolvedIdentifier: return "unresolved-identifier";
  }
  return "unknown";
}

void ValidationReport::add(std::string axiom, std::string citation,
                           std::vector<std::string> cells,
                           std::string detail) {
  violations.push_back(Violation{std::move(axiom), std::move(citation),
                                 std::move(cells), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

bool ValidationReport::names(std::string_view axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::vector<std::string> ValidationReport::axioms() const {
  std::set<std::string> ids;
  for (const auto& v : violations) ids.insert(v.axiom);
  return {ids.begin(), ids.end()};
}

void ValidationReport::canonicalize() {
  std::stable_sort(violations.begin(), violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return std::tie(a.axiom, a.cells, a.detail, a.citation) <
                            std::tie(b.axiom, b.cells, b.detail, b.citation);
                   });
}

bool operator==(const ValidationReport& a, const ValidationReport& b) {
  ValidationReport ca = a, cb = b;
  ca.canonicalize();
  cb.canonicalize();
  return ca.subject == cb.subject && ca.violations == cb.violations &&
         ca.data == cb.data;
}

std::string emit_report(ValidationReport report) {
  report.canonicalize();
  nlohmann::ordered_json out;
  out["subject"] = report.subject;
  out["valid"] = report.valid();
  out["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json entry;
    entry["axiom"] = v.axiom;
    entry["citation"] = v.citation;
    entry["cells"] = v.cells;
    entry["detail"] = v.detail;
    out["violations"].push_back(std::move(entry));
  }
  if (!report.data.is_null()) out["data"] = report.data;
  return out.dump(2) + "\n";
}

ValidationReport parse_report(std::string_view text) {
  nlohmann::ordered_json in;
  try {
    in = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
  try {
    ValidationReport report;
    report.subject = in.at("subject").get<std::string>();
    for (const auto& entry : in.at("violations")) {
      report.add(entry.at("axiom").get<std::string>(),
                 entry.at("citation").get<std::string>(),
                 entry.at("cells").get<std::vector<std::string>>(),
                 entry.at("detail").get<std::string>());
    }
    if (in.contains("data")) report.data = in.at("data");
    if (in.at("valid").get<bool>() != report.valid())
      throw Error(ErrorKind::ParseError,
                  "report: valid flag disagrees with violations");
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
}

}  // namespace globforge
