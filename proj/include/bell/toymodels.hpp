// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bell {

/// How the four table rows are read: as the four joint choices of two binary
/// inputs, or as four values of a single input.
enum class TableInterpretation { kTwoInput, kSingleInput };

/// Conditional probabilities p(outcome pair | setting). Rows are settings,
/// columns the outcome pairs (++, +-, -+, --). Every entry lies in [0, 1]
/// and each row sums to 1 within 1e-12.
struct CondProbTable {
  Eigen::Matrix4d p;
  std::array<std::string, 4> row_labels;
};

/// Row pattern shared by both toy tables: rows 1-3 put mass (q, 1-q) on the
/// equal-outcome cells, row 4 puts it on the opposite-outcome cells. table1
/// labels the rows by the two binary inputs, table2 by a single four-valued
/// input.
CondProbTable table1(double p1, double p2, double p3, double p4);
CondProbTable table2(double p1, double p2, double p3, double p4);

/// Validates the table invariants; throws std::invalid_argument otherwise.
void validate_table(const CondProbTable& t);

/// Per-row correlation p(++) + p(--) - p(+-) - p(-+).
Eigen::Vector4d row_correlations(const CondProbTable& t);

/// Marginals of each party independent of the other party's setting
/// (meaningful for the two-input reading), within 1e-9.
bool is_no_signaling(const CondProbTable& t);

/// A violated CHSH-type facet: sum of signs[i] * E_row[i] with an odd number
/// of minus signs, exceeding 2 in magnitude.
struct ChshCertificate {
  std::array<int, 4> signs;
  double value;
};

/// Explicit finite hidden-variable model for the single-input reading: a
/// product space over the four settings, each factor choosing one of the
/// row's two support cells.
struct SingleInputModel {
  std::vector<double> weights;                    // 16 configuration weights
  std::vector<std::array<int, 4>> outcome_cells;  // per configuration, per setting: column 0..3

  /// Conditionals reconstructed by marginalizing the model.
  Eigen::Matrix4d reconstruct() const;
};

struct FeasibilityVerdict {
  bool feasible;
  bool no_signaling;
  /// Mixture over the 16 deterministic two-input strategies (when feasible
  /// under the two-input reading).
  std::optional<std::array<double, 16>> strategy_weights;
  /// Witness model (when feasible under the single-input reading).
  std::optional<SingleInputModel> model;
  /// Violated facet (when infeasible and the table is no-signaling).
  std::optional<ChshCertificate> certificate;
};

/// Deterministic two-input strategy number s in 0..15, as the table it
/// induces. Bit layout of s: a(A=+1), a(A=-1), b(B=+1), b(B=-1), with bit
/// set meaning outcome +1.
Eigen::Matrix4d deterministic_strategy_table(int s);

/// Decides whether the table admits a local hidden-variable model under the
/// given reading. Two-input: exact linear feasibility over the 16
/// deterministic strategies; infeasible no-signaling tables carry a violated
/// CHSH facet as certificate. Single-input: always feasible, witnessed by
/// realize_table2.
FeasibilityVerdict local_feasibility(const CondProbTable& t, TableInterpretation interpretation);

/// The explicit model behind table2: independent binary choices per setting
/// with probabilities (p_i, 1 - p_i) on the row's two support cells.
SingleInputModel realize_table2(double p1, double p2, double p3, double p4);

}  // namespace bell
