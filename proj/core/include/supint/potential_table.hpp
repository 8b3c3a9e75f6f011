#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supint/classification.hpp"
#include "supint/expression.hpp"
#include "supint/pluecker.hpp"
#include "supint/potential.hpp"

namespace supint {

struct TablePotential {
  /// As printed, e.g. "1/sqrt(zw)".
  std::string printed;
  /// The expression that is verified; differs from `printed` only for audited rows.
  Expr expr;
  /// Empty unless the printed entry fails and a corrected one is used.
  std::string deviation;
  /// The printed entry as an expression, when it differs from `expr`.
  std::optional<Expr> printed_expr;
};

/// A row of the potential table with the representative point it is checked against.
struct PotentialRow {
  /// Class as printed in the table.
  ClassLabel label;
  std::string e_label;
  /// Representative of the class orbit (possibly conjugated) whose fibre holds the potentials.
  TernaryTriple rep;
  std::vector<TablePotential> potentials;
  /// How `rep` relates to the normal-form row.
  std::string adjustment;
  /// Sampling box, away from branch cuts and singular lines.
  std::complex<double> z_lo, z_hi, w_lo, w_hi;

  PlueckerPoint point() const { return to_point(rep); }
  std::vector<Sample> samples(int n, unsigned seed) const;
};

/// The twelve rows in table order.
const std::vector<PotentialRow>& potential_table();

}  // namespace supint
