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

#include "vbp/simplex.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vbp/check.h"

namespace vbp {
namespace lp {
namespace {

constexpr double kPivotTol = 1e-9;

class Tableau {
 public:
  Tableau(const std::vector<double>& objective,
          const std::vector<Constraint>& constraints)
      : num_vars_(static_cast<int>(objective.size())),
        num_rows_(static_cast<int>(constraints.size())) {
    // Column layout: structural | slack/surplus (one per inequality) |
    // artificial (one per >= or = row). unit_col_[i] is the column whose
    // original entries are +e_i; its reduced cost recovers the dual y_i.
    int num_slack = 0, num_art = 0;
    std::vector<Rel> rel(num_rows_);
    std::vector<double> rhs(num_rows_);
    for (int i = 0; i < num_rows_; ++i) {
      VBP_CHECK_EQ(static_cast<int>(constraints[i].coeffs.size()), num_vars_);
      rel[i] = constraints[i].rel;
      rhs[i] = constraints[i].rhs;
      if (rhs[i] < 0) {
        // Normalize to non-negative rhs by negating the row.
        rhs[i] = -rhs[i];
        rel[i] = rel[i] == Rel::kLe   ? Rel::kGe
                 : rel[i] == Rel::kGe ? Rel::kLe
                                      : Rel::kEq;
      }
      if (rel[i] != Rel::kEq) ++num_slack;
      if (rel[i] != Rel::kLe) ++num_art;
    }
    num_cols_ = num_vars_ + num_slack + num_art;
    rows_.assign(num_rows_, std::vector<double>(num_cols_ + 1, 0.0));
    basis_.assign(num_rows_, -1);
    unit_col_.assign(num_rows_, -1);
    artificial_.assign(num_cols_, false);

    int next_slack = num_vars_;
    int next_art = num_vars_ + num_slack;
    for (int i = 0; i < num_rows_; ++i) {
      double sign = constraints[i].rhs < 0 ? -1.0 : 1.0;
      for (int j = 0; j < num_vars_; ++j) {
        rows_[i][j] = sign * constraints[i].coeffs[j];
      }
      rows_[i][num_cols_] = rhs[i];
      if (rel[i] == Rel::kLe) {
        rows_[i][next_slack] = 1.0;
        basis_[i] = next_slack;
        unit_col_[i] = next_slack;
        ++next_slack;
      } else if (rel[i] == Rel::kGe) {
        rows_[i][next_slack] = -1.0;
        ++next_slack;
        rows_[i][next_art] = 1.0;
        artificial_[next_art] = true;
        basis_[i] = next_art;
        unit_col_[i] = next_art;
        ++next_art;
      } else {
        rows_[i][next_art] = 1.0;
        artificial_[next_art] = true;
        basis_[i] = next_art;
        unit_col_[i] = next_art;
        ++next_art;
      }
      // The dual read-off assumes the unit column was +e_i; account for the
      // row negation applied above.
      unit_sign_.push_back(sign);
    }

    obj_.assign(num_cols_, 0.0);
    for (int j = 0; j < num_vars_; ++j) obj_[j] = objective[j];
  }

  bool SolvePhase1() {
    std::vector<double> phase1(num_cols_, 0.0);
    bool any_art = false;
    for (int j = 0; j < num_cols_; ++j) {
      if (artificial_[j]) {
        phase1[j] = -1.0;
        any_art = true;
      }
    }
    if (!any_art) return true;
    Iterate(phase1, /*bar_artificials=*/false);
    if (Objective(phase1) < -kPivotTol) return false;
    DriveOutArtificials();
    return true;
  }

  void SolvePhase2() { Iterate(obj_, /*bar_artificials=*/true); }

  double Objective(const std::vector<double>& obj) const {
    double v = 0;
    for (int i = 0; i < num_rows_; ++i) {
      v += obj[basis_[i]] * rows_[i][num_cols_];
    }
    return v;
  }

  Result Extract() const {
    Result res;
    res.feasible = true;
    res.x.assign(num_vars_, 0.0);
    for (int i = 0; i < num_rows_; ++i) {
      if (basis_[i] < num_vars_) res.x[basis_[i]] = rows_[i][num_cols_];
    }
    res.value = Objective(obj_);
    res.dual.assign(num_rows_, 0.0);
    for (int i = 0; i < num_rows_; ++i) {
      // y_i = c_B . (B^-1 e_i) = reduced-cost complement of the unit column.
      double z = 0;
      for (int k = 0; k < num_rows_; ++k) {
        z += obj_[basis_[k]] * rows_[k][unit_col_[i]];
      }
      res.dual[i] = unit_sign_[i] * z;
    }
    return res;
  }

 private:
  // Reduced cost of column j under obj: obj_j - c_B . T[:, j].
  double ReducedCost(const std::vector<double>& obj, int j) const {
    double z = 0;
    for (int i = 0; i < num_rows_; ++i) z += obj[basis_[i]] * rows_[i][j];
    return obj[j] - z;
  }

  void Iterate(const std::vector<double>& obj, bool bar_artificials) {
    while (true) {
      // Bland: smallest improving column index.
      int entering = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (bar_artificials && artificial_[j]) continue;
        if (IsBasic(j)) continue;
        if (ReducedCost(obj, j) > kPivotTol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return;

      // Ratio test; ties resolved by smallest basic variable index (Bland).
      int leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < num_rows_; ++i) {
        if (rows_[i][entering] > kPivotTol) {
          double ratio = rows_[i][num_cols_] / rows_[i][entering];
          if (ratio < best_ratio - kPivotTol ||
              (ratio < best_ratio + kPivotTol &&
               (leaving < 0 || basis_[i] < basis_[leaving]))) {
            best_ratio = ratio;
            leaving = i;
          }
        }
      }
      if (leaving < 0) {
        throw std::logic_error("simplex: unbounded LP");
      }
      Pivot(leaving, entering);
    }
  }

  void DriveOutArtificials() {
    for (int i = 0; i < num_rows_; ++i) {
      if (!artificial_[basis_[i]]) continue;
      int pivot_col = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (!artificial_[j] && std::abs(rows_[i][j]) > kPivotTol) {
          pivot_col = j;
          break;
        }
      }
      // A fully zero row is redundant; the artificial stays basic at zero.
      if (pivot_col >= 0) Pivot(i, pivot_col);
    }
  }

  bool IsBasic(int j) const {
    for (int b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void Pivot(int row, int col) {
    double p = rows_[row][col];
    for (double& v : rows_[row]) v /= p;
    for (int i = 0; i < num_rows_; ++i) {
      if (i == row) continue;
      double f = rows_[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= num_cols_; ++j) {
        rows_[i][j] -= f * rows_[row][j];
      }
    }
    basis_[row] = col;
  }

  int num_vars_;
  int num_rows_;
  int num_cols_ = 0;
  std::vector<std::vector<double>> rows_;
  std::vector<int> basis_;
  std::vector<int> unit_col_;
  std::vector<double> unit_sign_;
  std::vector<bool> artificial_;
  std::vector<double> obj_;
};

}  // namespace

Result Maximize(const std::vector<double>& objective,
                const std::vector<Constraint>& constraints) {
  Tableau tableau(objective, constraints);
  if (!tableau.SolvePhase1()) {
    Result res;
    res.feasible = false;
    return res;
  }
  tableau.SolvePhase2();
  return tableau.Extract();
}

}  // namespace lp
}  // namespace vbp
