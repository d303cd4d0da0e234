// SPDX-License-Identifier: Apache-2.0
#include "bell/toymodels.hpp"

#include <cmath>
#include <stdexcept>

namespace bell {

namespace {

constexpr double kFeasTol = 1e-9;

void check_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probabilities must lie in [0, 1]");
  }
}

Eigen::Matrix4d support_pattern(double p1, double p2, double p3, double p4) {
  for (double p : {p1, p2, p3, p4}) check_unit_interval(p, "toy table");
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = p1; m(0, 3) = 1.0 - p1;
  m(1, 0) = p2; m(1, 3) = 1.0 - p2;
  m(2, 0) = p3; m(2, 3) = 1.0 - p3;
  m(3, 1) = p4; m(3, 2) = 1.0 - p4;
  return m;
}

// Phase-1 simplex with Bland's rule: minimize the sum of artificials for
// A w = b, w >= 0, where A is 16 entry-constraints by 16 strategy columns.
// Small and dense, so an explicit tableau is the simplest robust choice.
struct SimplexResult {
  bool feasible;
  std::array<double, 16> weights;
};

SimplexResult vertex_feasibility(const Eigen::Matrix4d& table) {
  constexpr int kRows = 16;          // one per table entry
  constexpr int kVars = 16;          // strategy weights
  constexpr int kCols = kVars + kRows;  // plus artificials

  Eigen::Matrix<double, kRows, kCols + 1> t = Eigen::Matrix<double, kRows, kCols + 1>::Zero();
  for (int s = 0; s < kVars; ++s) {
    const Eigen::Matrix4d v = deterministic_strategy_table(s);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) t(4 * r + c, s) = v(r, c);
    }
  }
  for (int i = 0; i < kRows; ++i) {
    t(i, kVars + i) = 1.0;
    t(i, kCols) = table(i / 4, i % 4);  // rhs, nonnegative by validation
  }

  std::array<int, kRows> basis;
  Eigen::RowVector<double, kCols + 1> obj = Eigen::RowVector<double, kCols + 1>::Zero();
  for (int i = 0; i < kRows; ++i) {
    basis[i] = kVars + i;
    obj -= t.row(i);  // reduced costs for the all-artificial basis
  }

  for (int iter = 0; iter < 4096; ++iter) {
    int entering = -1;
    for (int j = 0; j < kCols; ++j) {
      if (obj(j) < -kFeasTol) {
        entering = j;
        break;  // Bland: smallest eligible index, no cycling
      }
    }
    if (entering < 0) break;

    int leaving = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < kRows; ++i) {
      if (t(i, entering) > kFeasTol) {
        const double ratio = t(i, kCols) / t(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
    }
    if (leaving < 0) {
      throw std::logic_error("vertex_feasibility: unbounded phase-1 problem");
    }

    t.row(leaving) /= t(leaving, entering);
    for (int i = 0; i < kRows; ++i) {
      if (i != leaving && t(i, entering) != 0.0) {
        t.row(i) -= t(i, entering) * t.row(leaving);
      }
    }
    obj -= obj(entering) * t.row(leaving);
    basis[leaving] = entering;
  }

  double infeasibility = 0.0;
  std::array<double, 16> weights{};
  for (int i = 0; i < kRows; ++i) {
    if (basis[i] >= kVars) {
      infeasibility += t(i, kCols);
    } else {
      weights[static_cast<std::size_t>(basis[i])] = t(i, kCols);
    }
  }
  if (infeasibility > kFeasTol) {
    return {false, {}};
  }
  return {true, weights};
}

std::optional<ChshCertificate> violated_facet(const Eigen::Vector4d& e) {
  std::optional<ChshCertificate> best;
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> signs;
    int parity = 1;
    for (int i = 0; i < 4; ++i) {
      signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : +1;
      parity *= signs[static_cast<std::size_t>(i)];
    }
    if (parity != -1) continue;
    const double value = signs[0] * e(0) + signs[1] * e(1) + signs[2] * e(2) + signs[3] * e(3);
    if (std::abs(value) > 2.0 + kFeasTol &&
        (!best || std::abs(value) > std::abs(best->value))) {
      best = ChshCertificate{signs, value};
    }
  }
  return best;
}

}  // namespace

CondProbTable table1(double p1, double p2, double p3, double p4) {
  return {support_pattern(p1, p2, p3, p4),
          {"A=+1,B=+1", "A=+1,B=-1", "A=-1,B=+1", "A=-1,B=-1"}};
}

CondProbTable table2(double p1, double p2, double p3, double p4) {
  return {support_pattern(p1, p2, p3, p4), {"D=1", "D=2", "D=3", "D=4"}};
}

void validate_table(const CondProbTable& t) {
  for (int r = 0; r < 4; ++r) {
    double sum = 0.0;
    for (int c = 0; c < 4; ++c) {
      if (!(t.p(r, c) >= 0.0 && t.p(r, c) <= 1.0)) {
        throw std::invalid_argument("toy table: entries must lie in [0, 1]");
      }
      sum += t.p(r, c);
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("toy table: rows must sum to 1");
    }
  }
}

Eigen::Vector4d row_correlations(const CondProbTable& t) {
  validate_table(t);
  Eigen::Vector4d e;
  for (int r = 0; r < 4; ++r) {
    e(r) = t.p(r, 0) + t.p(r, 3) - t.p(r, 1) - t.p(r, 2);
  }
  return e;
}

bool is_no_signaling(const CondProbTable& t) {
  // Rows are (A,B) = (+,+), (+,-), (-,+), (-,-); columns (++, +-, -+, --).
  const auto marg_a = [&](int r) { return t.p(r, 0) + t.p(r, 1); };
  const auto marg_b = [&](int r) { return t.p(r, 0) + t.p(r, 2); };
  return std::abs(marg_a(0) - marg_a(1)) <= kFeasTol &&
         std::abs(marg_a(2) - marg_a(3)) <= kFeasTol &&
         std::abs(marg_b(0) - marg_b(2)) <= kFeasTol &&
         std::abs(marg_b(1) - marg_b(3)) <= kFeasTol;
}

Eigen::Matrix4d deterministic_strategy_table(int s) {
  if (s < 0 || s > 15) {
    throw std::invalid_argument("deterministic_strategy_table: index must be 0..15");
  }
  const int a_plus = (s >> 3) & 1 ? +1 : -1;
  const int a_minus = (s >> 2) & 1 ? +1 : -1;
  const int b_plus = (s >> 1) & 1 ? +1 : -1;
  const int b_minus = (s >> 0) & 1 ? +1 : -1;
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  const std::array<std::pair<int, int>, 4> settings = {
      std::pair{+1, +1}, std::pair{+1, -1}, std::pair{-1, +1}, std::pair{-1, -1}};
  for (int r = 0; r < 4; ++r) {
    const int a = settings[static_cast<std::size_t>(r)].first > 0 ? a_plus : a_minus;
    const int b = settings[static_cast<std::size_t>(r)].second > 0 ? b_plus : b_minus;
    const int col = (a > 0 ? 0 : 2) + (b > 0 ? 0 : 1);
    v(r, col) = 1.0;
  }
  return v;
}

FeasibilityVerdict local_feasibility(const CondProbTable& t, TableInterpretation interpretation) {
  validate_table(t);
  FeasibilityVerdict verdict{};
  verdict.no_signaling = is_no_signaling(t);

  if (interpretation == TableInterpretation::kSingleInput) {
    // A single four-valued input never forces joint response assignments:
    // a product model over independent per-setting choices reproduces any
    // table. Tables with the two-cell row pattern get the compact witness.
    verdict.feasible = true;
    const bool two_cell_pattern = t.p(0, 1) == 0.0 && t.p(0, 2) == 0.0 && t.p(1, 1) == 0.0 &&
                                  t.p(1, 2) == 0.0 && t.p(2, 1) == 0.0 && t.p(2, 2) == 0.0 &&
                                  t.p(3, 0) == 0.0 && t.p(3, 3) == 0.0;
    if (two_cell_pattern) {
      verdict.model = realize_table2(t.p(0, 0), t.p(1, 0), t.p(2, 0), t.p(3, 1));
    } else {
      SingleInputModel general;
      for (int c0 = 0; c0 < 4; ++c0)
        for (int c1 = 0; c1 < 4; ++c1)
          for (int c2 = 0; c2 < 4; ++c2)
            for (int c3 = 0; c3 < 4; ++c3) {
              const double w = t.p(0, c0) * t.p(1, c1) * t.p(2, c2) * t.p(3, c3);
              if (w > 0.0) {
                general.weights.push_back(w);
                general.outcome_cells.push_back({c0, c1, c2, c3});
              }
            }
      verdict.model = std::move(general);
    }
    return verdict;
  }

  const SimplexResult lp = vertex_feasibility(t.p);
  verdict.feasible = lp.feasible;
  if (lp.feasible) {
    verdict.strategy_weights = lp.weights;
  } else {
    // A violated facet separates the table from the local polytope whether or
    // not the table signals; for no-signaling tables one always exists.
    verdict.certificate = violated_facet(row_correlations(t));
  }
  return verdict;
}

SingleInputModel realize_table2(double p1, double p2, double p3, double p4) {
  for (double p : {p1, p2, p3, p4}) check_unit_interval(p, "realize_table2");
  const std::array<double, 4> first = {p1, p2, p3, p4};
  // Support cells per row: rows 0-2 use columns (0, 3), row 3 uses (1, 2).
  const std::array<std::array<int, 2>, 4> cells = {{{0, 3}, {0, 3}, {0, 3}, {1, 2}}};

  SingleInputModel model;
  model.weights.reserve(16);
  model.outcome_cells.reserve(16);
  for (int code = 0; code < 16; ++code) {
    double w = 1.0;
    std::array<int, 4> outcome{};
    for (int d = 0; d < 4; ++d) {
      const int pick = (code >> d) & 1;
      const auto du = static_cast<std::size_t>(d);
      w *= pick == 0 ? first[du] : 1.0 - first[du];
      outcome[du] = cells[du][static_cast<std::size_t>(pick)];
    }
    model.weights.push_back(w);
    model.outcome_cells.push_back(outcome);
  }
  return model;
}

Eigen::Matrix4d SingleInputModel::reconstruct() const {
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (int d = 0; d < 4; ++d) {
      p(d, outcome_cells[k][static_cast<std::size_t>(d)]) += weights[k];
    }
  }
  return p;
}

}  // namespace bell
