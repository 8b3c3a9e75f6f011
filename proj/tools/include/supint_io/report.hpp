#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supint_io/json_io.hpp"

namespace supint::io {

inline constexpr int kReportVersion = 1;

struct FactorEntry {
  std::string form;
  std::string orbit;
  int multiplicity = 1;
  bool exact = true;
  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct NormalFormEntry {
  std::string status;  // "exact" or "irrational_orbit"
  std::string e_label;
  int row = -1;
  json isometry;  // exact {"c","d","lambda"} strings, or floats
  std::string deviation;
  friend bool operator==(const NormalFormEntry&, const NormalFormEntry&) = default;
};

struct FibreEntry {
  int order = 0;
  std::string base_z;
  std::string base_w;
  int rank = 0;
  bool consistent = false;
  int mismatches = 0;
  friend bool operator==(const FibreEntry&, const FibreEntry&) = default;
};

struct ClassificationReport {
  int version = kReportVersion;
  json input;
  json point;  // canonical representative
  json sic;
  bool on_variety = false;
  std::string label;    // empty when off the variety
  std::string e_label;  // empty when off the variety
  std::vector<FactorEntry> factors;
  std::string scalar;
  std::vector<std::string> components;
  bool singular_locus = false;
  std::vector<std::string> vanishing;
  std::vector<std::pair<std::string, bool>> relations;
  std::vector<std::string> matching_rows;
  bool euclidean = false;
  bool minkowski = false;
  std::optional<NormalFormEntry> normal_form;
  std::optional<FibreEntry> fibre;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ReportOptions {
  bool normal_form = false;
  /// Series order for the fibre check; 0 disables it.
  int fibre_order = 0;
};

/// Runs the full pipeline on a point. Never throws NotOnVariety; check on_variety.
ClassificationReport classify_point(const PlueckerPoint& p, const json& input, const ReportOptions& opt);

json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const json& j);

/// Human-readable summary.
std::string to_text(const ClassificationReport& r);

}  // namespace supint::io
