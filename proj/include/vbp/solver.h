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

#ifndef VBP_SOLVER_H_
#define VBP_SOLVER_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vbp/game_core.h"

namespace vbp {

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  SignalingScheme scheme;  // direct-recommendation mode
  double sender_value = 0;
  double receiver_value = 0;
  double max_violation = 0;
  LpStatus status = LpStatus::kOptimal;

  nlohmann::json ToJson() const;
};

// Optimal dual point of the threshold-tau saddle problem. Multipliers are
// indexed by obedience deviation pairs (recommended action, deviation
// action); lambda_objective + sum(lambda_constraint) = 1.
struct LagrangianPoint {
  double tau = 0;
  double lambda_objective = 0;
  std::vector<std::pair<int, int>> constraint_index;  // (a, a')
  std::vector<double> lambda_constraint;
};

struct MatrixGameSolution {
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
  double value = 0;
};

// Maximizes the sender's expected utility over direct-recommendation schemes
// subject to every obedience constraint. Deterministic: exact pivoting with
// Bland's rule. Honest recommendation is always feasible, so an infeasible
// status signals an internal error.
LpSolution SolveDirectLp(const BpInstance& inst);

// Same LP with a caller-supplied sender objective table [state][action];
// used by best-response oracles that face a responding receiver mixture.
LpSolution SolveObedientLp(const BpInstance& inst,
                           const std::vector<std::vector<double>>& objective);

// Value of the threshold-tau bilinear saddle problem: the scheme player
// maximizes the minimum of (sender value - tau) and all obedience slacks.
// Non-negative iff an obedient scheme with sender value >= tau exists.
// Solved as a zero-sum matrix game whose rows are deterministic direct
// schemes and whose columns are the objective plus deviation pairs.
double SaddlePointValue(const BpInstance& inst, double tau);

// As above but also returns the maximin scheme and the dual point.
struct SaddleSolution {
  double value = 0;
  SignalingScheme scheme;
  LagrangianPoint dual;
};
SaddleSolution SolveSaddlePoint(const BpInstance& inst, double tau);

// Bisects the threshold over [min u0, max u0] on the sign of the saddle
// value until the bracket is narrower than tol. Agrees with SolveDirectLp
// within 2 * tol.
LpSolution BinarySearchOptimal(const BpInstance& inst, double tol);

// Minimax-optimal mixed strategies and value of a finite zero-sum matrix
// game (row player maximizes). Deterministic given the matrix.
MatrixGameSolution SolveZeroSum(const std::vector<std::vector<double>>& matrix);

}  // namespace vbp

#endif  // VBP_SOLVER_H_
