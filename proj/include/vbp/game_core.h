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

#ifndef VBP_GAME_CORE_H_
#define VBP_GAME_CORE_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace vbp {

// Structural tolerance for distributions; optimization tolerance for solver
// certificates. Probabilities are plain doubles throughout.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kOptimizationTol = 1e-9;

// A finite persuasion game: states of the world, a signal alphabet, receiver
// actions, a common prior, and per-player utility tables indexed
// [state][action]. All members are immutable after construction by
// convention; every operation below is a pure function.
struct BpInstance {
  std::string label;
  std::vector<std::string> states;
  std::vector<std::string> signals;
  std::vector<std::string> actions;
  std::vector<double> prior;
  std::vector<std::vector<double>> u_sender;    // [state][action]
  std::vector<std::vector<double>> u_receiver;  // [state][action]

  int num_states() const { return static_cast<int>(states.size()); }
  int num_signals() const { return static_cast<int>(signals.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }

  // Signals coincide with actions, so a signal is an action recommendation.
  bool IsDirectForm() const { return signals == actions; }

  int StateIndex(const std::string& id) const;
  int SignalIndex(const std::string& id) const;
  int ActionIndex(const std::string& id) const;

  // Throws DomainError if the prior is not a distribution, the signal
  // alphabet is too small for the revelation principle, or a table is
  // malformed.
  void Validate() const;

  nlohmann::json ToJson() const;
  static BpInstance FromJson(const nlohmann::json& j);
};

enum class SchemeMode { kGeneral, kDirectRecommendation };

// Row-stochastic map from states to signal distributions. In
// direct-recommendation mode the columns are the instance's actions.
struct SignalingScheme {
  std::vector<std::vector<double>> matrix;  // [state][signal]
  SchemeMode mode = SchemeMode::kGeneral;

  void Validate(int num_states, int num_signals) const;
};

// One-shot behavioral receiver policy: a distribution over actions for each
// signal.
struct ReceiverPolicy {
  std::vector<std::vector<double>> action_dist;  // [signal][action]

  void Validate(int num_signals, int num_actions) const;
};

struct Posterior {
  int signal = -1;
  std::vector<double> belief;
  // False when the signal has zero marginal probability; the belief is then
  // the prior (off-path convention shared with the solver and simulator).
  bool reachable = true;
};

// Bayes update of the prior given an observed signal.
Posterior ComputePosterior(const BpInstance& inst,
                           const SignalingScheme& scheme, int signal_index);
Posterior ComputePosterior(const BpInstance& inst,
                           const SignalingScheme& scheme,
                           const std::string& signal_id);

// Marginal probability of each signal under the prior and the scheme.
std::vector<double> SignalMarginals(const BpInstance& inst,
                                    const SignalingScheme& scheme);

// Action maximizing expected receiver utility at `belief`. Ties break in the
// sender's favor (max expected sender utility), then by action index; the
// sender-favorable tie-break is what attains the optimum at binding
// obedience constraints.
int ReceiverBestResponse(const BpInstance& inst,
                         const std::vector<double>& belief);

// Exact expected (sender, receiver) utilities of the joint (state, signal,
// action) distribution induced by scheme and policy. No sampling.
std::pair<double, double> ExpectedUtilities(const BpInstance& inst,
                                            const SignalingScheme& scheme,
                                            const ReceiverPolicy& policy);

// Largest obedience-constraint violation of a direct-recommendation scheme:
// max over (a, a') of max(0, -sum_w P(w) pi(a|w) [u1(a,w) - u1(a',w)]).
// Zero means every recommendation is a best response to its posterior.
double ObedienceViolation(const BpInstance& inst,
                          const SignalingScheme& scheme);

// Direct scheme that recommends the belief-optimal action of each state.
SignalingScheme HonestScheme(const BpInstance& inst);

// Policy that follows recommendations (identity map; direct form only).
ReceiverPolicy ObedientPolicy(const BpInstance& inst);

// Pointwise convex combination of schemes / policies. Weights must form a
// distribution over the entries.
SignalingScheme MixSchemes(const std::vector<SignalingScheme>& schemes,
                           const std::vector<double>& weights);
ReceiverPolicy MixPolicies(const std::vector<ReceiverPolicy>& policies,
                           const std::vector<double>& weights);

bool SchemesEqual(const SignalingScheme& a, const SignalingScheme& b,
                  double tol = kOptimizationTol);
bool PoliciesEqual(const ReceiverPolicy& a, const ReceiverPolicy& b,
                   double tol = kOptimizationTol);

}  // namespace vbp

#endif  // VBP_GAME_CORE_H_
