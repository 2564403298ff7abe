// Copyright 2026 The VBP Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vbp/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vbp/check.h"
#include "vbp/simplex.h"

namespace vbp {
namespace {

// Rebuilds a clean row-stochastic scheme from raw LP variables, forcing
// honest recommendations on zero-prior states (their constraints are
// vacuous, so the LP leaves them arbitrary).
SignalingScheme SchemeFromVariables(const BpInstance& inst,
                                    const std::vector<double>& x) {
  const int num_actions = inst.num_actions();
  SignalingScheme scheme;
  scheme.mode = SchemeMode::kDirectRecommendation;
  scheme.matrix.assign(inst.num_states(),
                       std::vector<double>(num_actions, 0.0));
  for (int w = 0; w < inst.num_states(); ++w) {
    if (inst.prior[w] <= 0) {
      std::vector<double> point(inst.num_states(), 0.0);
      point[w] = 1.0;
      scheme.matrix[w][ReceiverBestResponse(inst, point)] = 1.0;
      continue;
    }
    double sum = 0;
    for (int a = 0; a < num_actions; ++a) {
      double v = std::max(0.0, x[w * num_actions + a]);
      scheme.matrix[w][a] = v;
      sum += v;
    }
    VBP_CHECK_GT(sum, 0.5);  // row sums to 1 up to solver noise
    for (int a = 0; a < num_actions; ++a) scheme.matrix[w][a] /= sum;
  }
  return scheme;
}

LpSolution SolutionFromScheme(const BpInstance& inst,
                              const SignalingScheme& scheme) {
  LpSolution sol;
  sol.scheme = scheme;
  sol.status = LpStatus::kOptimal;
  auto [sender, receiver] = ExpectedUtilities(inst, scheme,
                                              ObedientPolicy(inst));
  sol.sender_value = sender;
  sol.receiver_value = receiver;
  sol.max_violation = ObedienceViolation(inst, scheme);
  return sol;
}

// Enumerates deterministic direct schemes as mixed-radix state->action maps.
std::vector<std::vector<int>> DeterministicSchemes(const BpInstance& inst) {
  const int num_states = inst.num_states();
  const int num_actions = inst.num_actions();
  double count = std::pow(num_actions, num_states);
  if (count > 4096) {
    throw DomainError("saddle-point enumeration too large for this instance");
  }
  std::vector<std::vector<int>> maps;
  std::vector<int> current(num_states, 0);
  while (true) {
    maps.push_back(current);
    int pos = num_states - 1;
    while (pos >= 0 && ++current[pos] == num_actions) {
      current[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return maps;
}

std::pair<double, double> TableRange(const BpInstance& inst) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : inst.u_sender) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo, hi};
}

}  // namespace

nlohmann::json LpSolution::ToJson() const {
  return nlohmann::json{
      {"scheme", scheme.matrix},
      {"sender_value", sender_value},
      {"receiver_value", receiver_value},
      {"max_violation", max_violation},
      {"status", status == LpStatus::kOptimal ? "optimal" : "infeasible"}};
}

LpSolution SolveObedientLp(const BpInstance& inst,
                           const std::vector<std::vector<double>>& objective) {
  inst.Validate();
  if (!inst.IsDirectForm()) {
    throw DomainError("obedience LP needs a direct-recommendation instance");
  }
  const int num_states = inst.num_states();
  const int num_actions = inst.num_actions();
  const int num_vars = num_states * num_actions;

  std::vector<double> obj(num_vars, 0.0);
  for (int w = 0; w < num_states; ++w) {
    for (int a = 0; a < num_actions; ++a) {
      obj[w * num_actions + a] = inst.prior[w] * objective[w][a];
    }
  }

  std::vector<lp::Constraint> constraints;
  for (int w = 0; w < num_states; ++w) {
    lp::Constraint row_sum;
    row_sum.coeffs.assign(num_vars, 0.0);
    for (int a = 0; a < num_actions; ++a) row_sum.coeffs[w * num_actions + a] = 1.0;
    row_sum.rel = lp::Rel::kEq;
    row_sum.rhs = 1.0;
    constraints.push_back(std::move(row_sum));
  }
  for (int a = 0; a < num_actions; ++a) {
    for (int alt = 0; alt < num_actions; ++alt) {
      if (alt == a) continue;
      lp::Constraint obedience;
      obedience.coeffs.assign(num_vars, 0.0);
      for (int w = 0; w < num_states; ++w) {
        obedience.coeffs[w * num_actions + a] =
            inst.prior[w] * (inst.u_receiver[w][a] - inst.u_receiver[w][alt]);
      }
      obedience.rel = lp::Rel::kGe;
      obedience.rhs = 0.0;
      constraints.push_back(std::move(obedience));
    }
  }

  lp::Result res = lp::Maximize(obj, constraints);
  // Honest recommendation is always obedient, so the LP cannot be
  // infeasible; treat it as a solver bug if it ever is.
  VBP_CHECK(res.feasible);
  SignalingScheme scheme = SchemeFromVariables(inst, res.x);

  LpSolution sol = SolutionFromScheme(inst, scheme);
  // The reported sender value follows the caller's objective, which may
  // differ from the instance's own sender table.
  double value = 0;
  for (int w = 0; w < num_states; ++w) {
    for (int a = 0; a < num_actions; ++a) {
      value += inst.prior[w] * scheme.matrix[w][a] * objective[w][a];
    }
  }
  sol.sender_value = value;
  return sol;
}

LpSolution SolveDirectLp(const BpInstance& inst) {
  return SolveObedientLp(inst, inst.u_sender);
}

SaddleSolution SolveSaddlePoint(const BpInstance& inst, double tau) {
  inst.Validate();
  if (!inst.IsDirectForm()) {
    throw DomainError("saddle point needs a direct-recommendation instance");
  }
  auto [lo, hi] = TableRange(inst);
  if (tau < lo - kOptimizationTol || tau > hi + kOptimizationTol) {
    throw DomainError("tau outside the sender utility range");
  }

  const int num_states = inst.num_states();
  const int num_actions = inst.num_actions();
  std::vector<std::vector<int>> rows = DeterministicSchemes(inst);

  // Column 0 carries the thresholded objective; the rest are obedience
  // slacks, one per (recommended, deviation) action pair.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < num_actions; ++a) {
    for (int alt = 0; alt < num_actions; ++alt) {
      if (alt != a) pairs.emplace_back(a, alt);
    }
  }

  std::vector<std::vector<double>> game(
      rows.size(), std::vector<double>(1 + pairs.size(), 0.0));
  for (size_t r = 0; r < rows.size(); ++r) {
    double value = 0;
    for (int w = 0; w < num_states; ++w) {
      value += inst.prior[w] * inst.u_sender[w][rows[r][w]];
    }
    game[r][0] = value - tau;
    for (size_t c = 0; c < pairs.size(); ++c) {
      auto [a, alt] = pairs[c];
      double slack = 0;
      for (int w = 0; w < num_states; ++w) {
        if (rows[r][w] != a) continue;
        slack += inst.prior[w] *
                 (inst.u_receiver[w][a] - inst.u_receiver[w][alt]);
      }
      game[r][c + 1] = slack;
    }
  }

  MatrixGameSolution zs = SolveZeroSum(game);

  SaddleSolution out;
  out.value = zs.value;
  // The maximin row mixture over deterministic maps collapses to a scheme.
  out.scheme.mode = SchemeMode::kDirectRecommendation;
  out.scheme.matrix.assign(num_states, std::vector<double>(num_actions, 0.0));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (zs.row_strategy[r] == 0) continue;
    for (int w = 0; w < num_states; ++w) {
      out.scheme.matrix[w][rows[r][w]] += zs.row_strategy[r];
    }
  }
  out.dual.tau = tau;
  out.dual.lambda_objective = zs.col_strategy[0];
  out.dual.constraint_index = pairs;
  out.dual.lambda_constraint.assign(zs.col_strategy.begin() + 1,
                                    zs.col_strategy.end());
  return out;
}

double SaddlePointValue(const BpInstance& inst, double tau) {
  return SolveSaddlePoint(inst, tau).value;
}

LpSolution BinarySearchOptimal(const BpInstance& inst, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  inst.Validate();
  auto [lo, hi] = TableRange(inst);
  if (hi - lo <= 0) {
    // Constant sender utility: every obedient scheme achieves it exactly.
    return SolutionFromScheme(inst, HonestScheme(inst));
  }
  // tau = lo is always feasible (any scheme's value is at least lo and the
  // honest scheme is obedient), so the bracket invariant holds from the
  // start: feasible at lo, tracked solution obedient.
  SignalingScheme best = SolveSaddlePoint(inst, lo).scheme;
  while (hi - lo >= tol) {
    double mid = 0.5 * (lo + hi);
    SaddleSolution saddle = SolveSaddlePoint(inst, mid);
    if (saddle.value >= -kOptimizationTol) {
      lo = mid;
      best = saddle.scheme;
    } else {
      hi = mid;
    }
  }
  return SolutionFromScheme(inst, best);
}

MatrixGameSolution SolveZeroSum(
    const std::vector<std::vector<double>>& matrix) {
  if (matrix.empty() || matrix[0].empty()) {
    throw DomainError("zero-sum matrix must be non-empty");
  }
  const int num_rows = static_cast<int>(matrix.size());
  const int num_cols = static_cast<int>(matrix[0].size());
  double min_entry = std::numeric_limits<double>::infinity();
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != num_cols) {
      throw DomainError("zero-sum matrix is ragged");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw DomainError("zero-sum matrix entry not finite");
      min_entry = std::min(min_entry, v);
    }
  }
  // Shift entries positive so the game value is positive and the classic
  // normalization applies: maximize sum(q) s.t. M'q <= 1 solves the column
  // player, and the row player falls out of the duals.
  const double shift = 1.0 - min_entry;

  std::vector<double> obj(num_cols, 1.0);
  std::vector<lp::Constraint> constraints(num_rows);
  for (int i = 0; i < num_rows; ++i) {
    constraints[i].coeffs.resize(num_cols);
    for (int j = 0; j < num_cols; ++j) {
      constraints[i].coeffs[j] = matrix[i][j] + shift;
    }
    constraints[i].rel = lp::Rel::kLe;
    constraints[i].rhs = 1.0;
  }
  lp::Result res = lp::Maximize(obj, constraints);
  VBP_CHECK(res.feasible);
  VBP_CHECK_GT(res.value, 0);

  MatrixGameSolution sol;
  sol.value = 1.0 / res.value - shift;
  sol.col_strategy.resize(num_cols);
  for (int j = 0; j < num_cols; ++j) {
    sol.col_strategy[j] = std::max(0.0, res.x[j]) / res.value;
  }
  double dual_sum = 0;
  for (double d : res.dual) dual_sum += std::max(0.0, d);
  VBP_CHECK_GT(dual_sum, 0);
  sol.row_strategy.resize(num_rows);
  for (int i = 0; i < num_rows; ++i) {
    sol.row_strategy[i] = std::max(0.0, res.dual[i]) / dual_sum;
  }
  return sol;
}

}  // namespace vbp
