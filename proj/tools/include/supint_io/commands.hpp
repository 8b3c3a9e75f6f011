#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "supint/classification.hpp"
#include "supint_io/json_io.hpp"

namespace supint::io {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDependentPair = 2,
  kNotOnVariety = 3,
  kCheckFailed = 4,
};

struct GlobalOptions {
  double tol = 1e-9;
  std::string format = "json";  // or "text"
  unsigned long seed = 1;
  int jobs = 1;
};

/// A point from: an array of ten coordinates; {"point": [...]};
/// {"tensors": [t1, t2]} or {"t1": ..., "t2": ...}; {"D", "A", "B"} sparse polynomials.
PlueckerPoint read_point(const json& j);

int cmd_wedge(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err);

struct ClassifyOptions {
  bool normal_form = false;
  int fibre_order = 0;
  std::string svg_path;
  RealForm svg_form = RealForm::euclidean;
};

/// Several inputs are classified independently, up to g.jobs at a time.
int cmd_classify(const GlobalOptions& g, const std::vector<std::string>& inputs, const ClassifyOptions& opt,
                 std::ostream& out, std::ostream& err);

int cmd_enumerate(const GlobalOptions& g, const std::string& label, int samples, std::ostream& out,
                  std::ostream& err);

int cmd_normal_form(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err);

struct FibreOptions {
  int order = 8;
  std::string base;  // "z0,w0"; empty picks a base off D = 0
  std::vector<std::string> potentials;
};

int cmd_fibre_check(const GlobalOptions& g, const std::string& input, const FibreOptions& opt, std::ostream& out,
                    std::ostream& err);

struct PoissonOptions {
  std::string potential;  // overrides the "potential" key of the input
  int samples = 50;
};

/// Input: {"tensors": [t1, t2], "potential": "(prod z w)"}.
int cmd_poisson_check(const GlobalOptions& g, const std::string& input, const PoissonOptions& opt,
                      std::ostream& out, std::ostream& err);

int cmd_tables_audit(const GlobalOptions& g, std::ostream& out, std::ostream& err);

/// Audit data shared with the tests and the acceptance runner.
struct NormalFormAuditRow {
  std::string e_label;
  std::string label;
  std::string lifted_a30;
  std::string lifted_a03;
  bool matches = false;     // unique lifted slots equal the row's constant terms
  bool on_variety = false;  // the (corrected) row point
  bool printed_on_variety = true;
  std::string flag;         // non-empty for audited deviations
};
std::vector<NormalFormAuditRow> audit_normal_forms();

struct PotentialAuditEntry {
  std::string e_label;
  std::string printed;
  double prolongation = 0;
  double series = 0;
  bool passes = false;
  std::string flag;
};
std::vector<PotentialAuditEntry> audit_potentials(double tol, unsigned long seed);

}  // namespace supint::io
