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

#ifndef VBP_SIMPLEX_H_
#define VBP_SIMPLEX_H_

#include <vector>

namespace vbp {
namespace lp {

enum class Rel { kLe, kGe, kEq };

struct Constraint {
  std::vector<double> coeffs;
  Rel rel = Rel::kLe;
  double rhs = 0;
};

struct Result {
  bool feasible = false;
  double value = 0;
  std::vector<double> x;
  // One multiplier per constraint, read from the optimal basis.
  std::vector<double> dual;
};

// Dense two-phase tableau simplex, maximizing objective . x over x >= 0.
// Bland's rule for both entering and leaving variables, so pivoting is
// cycle-free and fully deterministic. Sized for the tiny LPs in this
// workbench, not for performance.
Result Maximize(const std::vector<double>& objective,
                const std::vector<Constraint>& constraints);

}  // namespace lp
}  // namespace vbp

#endif  // VBP_SIMPLEX_H_
