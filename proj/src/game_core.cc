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

#include "vbp/game_core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vbp/check.h"

namespace vbp {
namespace {

int IndexOf(const std::vector<std::string>& ids, const std::string& id,
            const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw DomainError(std::string("unknown ") + what + " id: " + id);
  }
  return static_cast<int>(it - ids.begin());
}

void CheckDistribution(const std::vector<double>& p, const char* what) {
  double sum = 0;
  for (double v : p) {
    if (!(v >= 0)) throw DomainError(std::string(what) + " has negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kStructuralTol) {
    throw DomainError(std::string(what) + " does not sum to 1");
  }
}

}  // namespace

int BpInstance::StateIndex(const std::string& id) const {
  return IndexOf(states, id, "state");
}
int BpInstance::SignalIndex(const std::string& id) const {
  return IndexOf(signals, id, "signal");
}
int BpInstance::ActionIndex(const std::string& id) const {
  return IndexOf(actions, id, "action");
}

void BpInstance::Validate() const {
  if (states.empty() || signals.empty() || actions.empty()) {
    throw DomainError("instance needs non-empty states/signals/actions");
  }
  if (prior.size() != states.size()) {
    throw DomainError("prior size does not match states");
  }
  CheckDistribution(prior, "prior");
  // Revelation-principle sizing: |S| >= min(|A|, |Omega|).
  if (num_signals() < std::min(num_actions(), num_states())) {
    throw DomainError("signal alphabet smaller than min(|actions|, |states|)");
  }
  auto check_table = [&](const std::vector<std::vector<double>>& t,
                         const char* name) {
    if (static_cast<int>(t.size()) != num_states()) {
      throw DomainError(std::string(name) + " table has wrong row count");
    }
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != num_actions()) {
        throw DomainError(std::string(name) + " table has a short row");
      }
      for (double v : row) {
        if (!std::isfinite(v)) {
          throw DomainError(std::string(name) + " table has non-finite entry");
        }
      }
    }
  };
  check_table(u_sender, "u_sender");
  check_table(u_receiver, "u_receiver");
}

nlohmann::json BpInstance::ToJson() const {
  return nlohmann::json{{"label", label},       {"states", states},
                        {"signals", signals},   {"actions", actions},
                        {"prior", prior},       {"u_sender", u_sender},
                        {"u_receiver", u_receiver}};
}

BpInstance BpInstance::FromJson(const nlohmann::json& j) {
  BpInstance inst;
  inst.label = j.at("label").get<std::string>();
  inst.states = j.at("states").get<std::vector<std::string>>();
  inst.signals = j.at("signals").get<std::vector<std::string>>();
  inst.actions = j.at("actions").get<std::vector<std::string>>();
  inst.prior = j.at("prior").get<std::vector<double>>();
  inst.u_sender = j.at("u_sender").get<std::vector<std::vector<double>>>();
  inst.u_receiver = j.at("u_receiver").get<std::vector<std::vector<double>>>();
  inst.Validate();
  return inst;
}

void SignalingScheme::Validate(int num_states, int num_signals) const {
  if (static_cast<int>(matrix.size()) != num_states) {
    throw DomainError("scheme row count does not match states");
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != num_signals) {
      throw DomainError("scheme column count does not match signals");
    }
    CheckDistribution(row, "scheme row");
  }
}

void ReceiverPolicy::Validate(int num_signals, int num_actions) const {
  if (static_cast<int>(action_dist.size()) != num_signals) {
    throw DomainError("policy row count does not match signals");
  }
  for (const auto& row : action_dist) {
    if (static_cast<int>(row.size()) != num_actions) {
      throw DomainError("policy column count does not match actions");
    }
    CheckDistribution(row, "policy row");
  }
}

Posterior ComputePosterior(const BpInstance& inst,
                           const SignalingScheme& scheme, int signal_index) {
  if (signal_index < 0 || signal_index >= inst.num_signals()) {
    throw DomainError("signal index out of range");
  }
  scheme.Validate(inst.num_states(), inst.num_signals());
  Posterior post;
  post.signal = signal_index;
  double denom = 0;
  for (int w = 0; w < inst.num_states(); ++w) {
    denom += inst.prior[w] * scheme.matrix[w][signal_index];
  }
  if (denom <= 0) {
    post.reachable = false;
    post.belief = inst.prior;
    return post;
  }
  post.belief.resize(inst.num_states());
  for (int w = 0; w < inst.num_states(); ++w) {
    post.belief[w] = inst.prior[w] * scheme.matrix[w][signal_index] / denom;
  }
  return post;
}

Posterior ComputePosterior(const BpInstance& inst,
                           const SignalingScheme& scheme,
                           const std::string& signal_id) {
  return ComputePosterior(inst, scheme, inst.SignalIndex(signal_id));
}

std::vector<double> SignalMarginals(const BpInstance& inst,
                                    const SignalingScheme& scheme) {
  scheme.Validate(inst.num_states(), inst.num_signals());
  std::vector<double> marginal(inst.num_signals(), 0.0);
  for (int w = 0; w < inst.num_states(); ++w) {
    for (int s = 0; s < inst.num_signals(); ++s) {
      marginal[s] += inst.prior[w] * scheme.matrix[w][s];
    }
  }
  return marginal;
}

int ReceiverBestResponse(const BpInstance& inst,
                         const std::vector<double>& belief) {
  if (static_cast<int>(belief.size()) != inst.num_states()) {
    throw DomainError("belief size does not match states");
  }
  CheckDistribution(belief, "belief");
  int best = 0;
  double best_recv = -std::numeric_limits<double>::infinity();
  double best_send = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < inst.num_actions(); ++a) {
    double recv = 0, send = 0;
    for (int w = 0; w < inst.num_states(); ++w) {
      recv += belief[w] * inst.u_receiver[w][a];
      send += belief[w] * inst.u_sender[w][a];
    }
    if (recv > best_recv + kStructuralTol ||
        (std::abs(recv - best_recv) <= kStructuralTol &&
         send > best_send + kStructuralTol)) {
      best = a;
      best_recv = recv;
      best_send = send;
    }
  }
  return best;
}

std::pair<double, double> ExpectedUtilities(const BpInstance& inst,
                                            const SignalingScheme& scheme,
                                            const ReceiverPolicy& policy) {
  scheme.Validate(inst.num_states(), inst.num_signals());
  policy.Validate(inst.num_signals(), inst.num_actions());
  double sender = 0, receiver = 0;
  for (int w = 0; w < inst.num_states(); ++w) {
    for (int s = 0; s < inst.num_signals(); ++s) {
      double ps = inst.prior[w] * scheme.matrix[w][s];
      if (ps == 0) continue;
      for (int a = 0; a < inst.num_actions(); ++a) {
        double pa = ps * policy.action_dist[s][a];
        sender += pa * inst.u_sender[w][a];
        receiver += pa * inst.u_receiver[w][a];
      }
    }
  }
  return {sender, receiver};
}

double ObedienceViolation(const BpInstance& inst,
                          const SignalingScheme& scheme) {
  if (scheme.mode != SchemeMode::kDirectRecommendation) {
    throw DomainError(
        "obedience constraints are defined on direct-recommendation schemes");
  }
  if (!inst.IsDirectForm()) {
    throw DomainError("instance is not in direct-recommendation form");
  }
  scheme.Validate(inst.num_states(), inst.num_signals());
  double worst = 0;
  for (int a = 0; a < inst.num_actions(); ++a) {
    for (int alt = 0; alt < inst.num_actions(); ++alt) {
      if (alt == a) continue;
      double slack = 0;
      for (int w = 0; w < inst.num_states(); ++w) {
        slack += inst.prior[w] * scheme.matrix[w][a] *
                 (inst.u_receiver[w][a] - inst.u_receiver[w][alt]);
      }
      worst = std::max(worst, -slack);
    }
  }
  return worst;
}

SignalingScheme HonestScheme(const BpInstance& inst) {
  if (!inst.IsDirectForm()) {
    throw DomainError("honest recommendation needs direct form");
  }
  SignalingScheme scheme;
  scheme.mode = SchemeMode::kDirectRecommendation;
  scheme.matrix.assign(inst.num_states(),
                       std::vector<double>(inst.num_signals(), 0.0));
  for (int w = 0; w < inst.num_states(); ++w) {
    std::vector<double> point(inst.num_states(), 0.0);
    point[w] = 1.0;
    scheme.matrix[w][ReceiverBestResponse(inst, point)] = 1.0;
  }
  return scheme;
}

ReceiverPolicy ObedientPolicy(const BpInstance& inst) {
  if (!inst.IsDirectForm()) {
    throw DomainError("obedient policy needs direct form");
  }
  ReceiverPolicy policy;
  policy.action_dist.assign(inst.num_signals(),
                            std::vector<double>(inst.num_actions(), 0.0));
  for (int s = 0; s < inst.num_signals(); ++s) policy.action_dist[s][s] = 1.0;
  return policy;
}

SignalingScheme MixSchemes(const std::vector<SignalingScheme>& schemes,
                           const std::vector<double>& weights) {
  VBP_CHECK(!schemes.empty());
  VBP_CHECK_EQ(schemes.size(), weights.size());
  SignalingScheme out;
  out.mode = schemes[0].mode;
  out.matrix.assign(schemes[0].matrix.size(),
                    std::vector<double>(schemes[0].matrix[0].size(), 0.0));
  for (size_t k = 0; k < schemes.size(); ++k) {
    for (size_t w = 0; w < out.matrix.size(); ++w) {
      for (size_t s = 0; s < out.matrix[w].size(); ++s) {
        out.matrix[w][s] += weights[k] * schemes[k].matrix[w][s];
      }
    }
  }
  return out;
}

ReceiverPolicy MixPolicies(const std::vector<ReceiverPolicy>& policies,
                           const std::vector<double>& weights) {
  VBP_CHECK(!policies.empty());
  VBP_CHECK_EQ(policies.size(), weights.size());
  ReceiverPolicy out;
  out.action_dist.assign(
      policies[0].action_dist.size(),
      std::vector<double>(policies[0].action_dist[0].size(), 0.0));
  for (size_t k = 0; k < policies.size(); ++k) {
    for (size_t s = 0; s < out.action_dist.size(); ++s) {
      for (size_t a = 0; a < out.action_dist[s].size(); ++a) {
        out.action_dist[s][a] += weights[k] * policies[k].action_dist[s][a];
      }
    }
  }
  return out;
}

namespace {
bool MatricesEqual(const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
    }
  }
  return true;
}
}  // namespace

bool SchemesEqual(const SignalingScheme& a, const SignalingScheme& b,
                  double tol) {
  return a.mode == b.mode && MatricesEqual(a.matrix, b.matrix, tol);
}

bool PoliciesEqual(const ReceiverPolicy& a, const ReceiverPolicy& b,
                   double tol) {
  return MatricesEqual(a.action_dist, b.action_dist, tol);
}

}  // namespace vbp
