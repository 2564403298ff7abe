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

#include "vbp/environments.h"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "vbp/check.h"
#include "vbp/fixtures.h"
#include "vbp/rng.h"

namespace vbp {
namespace {

// Loads role prompts, state templates, slot corpus, and the prompt-action
// grids shared with the mock backend's rule tables.
void LoadVerbalAssets(VerbalizedEnv& env) {
  const std::string dir = EnvIdToString(env.id);
  env.sender_role_prompt = ReadFixtureFile(dir + "/roles/sender.txt");
  env.receiver_role_prompt = ReadFixtureFile(dir + "/roles/receiver.txt");

  nlohmann::json rules =
      nlohmann::json::parse(ReadFixtureFile(dir + "/mock_rules.json"));
  for (const auto& [state, files] : rules.at("templates").items()) {
    std::vector<std::string> texts;
    for (const auto& file : files) {
      texts.push_back(ReadFixtureFile(dir + "/" + file.get<std::string>()));
    }
    env.state_templates[state] = std::move(texts);
  }
  if (rules.contains("slots")) {
    for (const auto& [slot, values] : rules.at("slots").items()) {
      env.slot_corpus[slot] = values.get<std::vector<std::string>>();
    }
  }
  for (const auto& s : rules.at("sender_styles")) {
    env.sender_styles.push_back(
        {{s.at("category").get<std::string>(),
          s.at("content").get<std::string>()},
         s.at("lie_rate").get<double>()});
  }
  for (const auto& s : rules.at("receiver_styles")) {
    env.receiver_styles.push_back(
        {{s.at("category").get<std::string>(),
          s.at("content").get<std::string>()},
         s.at("threshold").get<double>(),
         s.value("invert", false)});
  }
}

}  // namespace

std::string EnvIdToString(EnvId id) {
  switch (id) {
    case EnvId::kRel:
      return "rel";
    case EnvId::kCor:
      return "cor";
    case EnvId::kLae:
      return "lae";
  }
  throw DomainError("unknown environment id");
}

EnvId EnvIdFromString(const std::string& s) {
  if (s == "rel") return EnvId::kRel;
  if (s == "cor") return EnvId::kCor;
  if (s == "lae") return EnvId::kLae;
  throw DomainError("unknown environment id: " + s);
}

void LaeParams::Validate() const {
  if (miles <= 0) throw DomainError("LAE: miles must be positive");
  if (officers <= 0 || officers >= miles) {
    throw DomainError("LAE: officers must satisfy 0 < G < Z");
  }
  if (!(speed_gain > 0)) throw DomainError("LAE: V must be positive");
  if (!(fine > speed_gain)) throw DomainError("LAE: fine must exceed V");
}

const SenderStyle& VerbalizedEnv::FindSenderStyle(
    const PromptAction& a) const {
  for (const auto& s : sender_styles) {
    if (s.action == a) return s;
  }
  throw DomainError("unknown sender style: " + a.ToString());
}

const ReceiverStyle& VerbalizedEnv::FindReceiverStyle(
    const PromptAction& a) const {
  for (const auto& s : receiver_styles) {
    if (s.action == a) return s;
  }
  throw DomainError("unknown receiver style: " + a.ToString());
}

void VerbalizedEnv::Validate() const {
  base.Validate();
  if (!base.IsDirectForm()) {
    throw DomainError("verbalized env must use direct-recommendation form");
  }
  if (signal_labels.size() != 2 || classification_labels != signal_labels) {
    throw DomainError("env needs exactly two polarization extremes");
  }
  for (const auto& state : base.states) {
    auto it = state_templates.find(state);
    if (it == state_templates.end() || it->second.empty()) {
      throw DomainError("state has no text template: " + state);
    }
  }
  if (sender_styles.empty() || receiver_styles.empty()) {
    throw DomainError("env needs non-empty prompt-action grids");
  }
}

VerbalizedEnv MakeRel() {
  VerbalizedEnv env;
  env.id = EnvId::kRel;
  env.base.label = "rel";
  env.base.states = {"strong", "weak"};
  env.base.actions = {"hire", "reject"};
  env.base.signals = env.base.actions;
  env.base.prior = {1.0 / 3.0, 2.0 / 3.0};
  // HR: +1 hiring a strong candidate, -1 hiring a weak one, 0 rejecting.
  env.base.u_receiver = {{1.0, 0.0}, {-1.0, 0.0}};
  // Professor: +1 per hire regardless of quality.
  env.base.u_sender = {{1.0, 0.0}, {1.0, 0.0}};
  env.signal_labels = {"recommend", "not-recommend"};
  env.classification_labels = env.signal_labels;
  LoadVerbalAssets(env);
  env.Validate();
  return env;
}

VerbalizedEnv MakeCor() {
  VerbalizedEnv env;
  env.id = EnvId::kCor;
  env.base.label = "cor";
  env.base.states = {"guilty", "innocent"};
  env.base.actions = {"convict", "acquit"};
  env.base.signals = env.base.actions;
  env.base.prior = {0.3, 0.7};
  // Judge: 1 for a correct decision, 0 otherwise.
  env.base.u_receiver = {{1.0, 0.0}, {0.0, 1.0}};
  // Prosecutor: 1 whenever the judge convicts.
  env.base.u_sender = {{1.0, 0.0}, {1.0, 0.0}};
  env.signal_labels = {"guilty", "not-guilty"};
  env.classification_labels = env.signal_labels;
  LoadVerbalAssets(env);
  env.Validate();
  return env;
}

VerbalizedEnv MakeLae(const LaeParams& params) {
  params.Validate();
  VerbalizedEnv env;
  env.id = EnvId::kLae;
  env.lae = params;
  env.base.label = "lae";
  env.base.states = {"patrolled", "unpatrolled"};
  env.base.actions = {"obey", "speed"};
  env.base.signals = env.base.actions;
  double mu = static_cast<double>(params.officers) / params.miles;
  env.base.prior = {mu, 1.0 - mu};
  // Driver: V - K speeding into a patrol, V speeding unwatched, 0 obeying.
  env.base.u_receiver = {{0.0, params.speed_gain - params.fine},
                         {0.0, params.speed_gain}};
  // Police: 1 per obeying mile.
  env.base.u_sender = {{1.0, 0.0}, {1.0, 0.0}};
  env.signal_labels = {"patrolled", "unpatrolled"};
  env.classification_labels = env.signal_labels;
  LoadVerbalAssets(env);
  env.Validate();
  return env;
}

VerbalizedEnv MakeEnv(EnvId id, const LaeParams& params) {
  switch (id) {
    case EnvId::kRel:
      return MakeRel();
    case EnvId::kCor:
      return MakeCor();
    case EnvId::kLae:
      return MakeLae(params);
  }
  throw DomainError("unknown environment id");
}

SignalingScheme EpsilonScheme(const BpInstance& inst, double eps) {
  if (!(eps >= 0 && eps <= 1)) throw DomainError("eps must lie in [0, 1]");
  if (inst.num_states() != 2 || inst.num_actions() != 2 ||
      !inst.IsDirectForm()) {
    throw DomainError("eps-scheme needs a 2x2 direct instance");
  }
  SignalingScheme scheme;
  scheme.mode = SchemeMode::kDirectRecommendation;
  scheme.matrix = {{1.0, 0.0}, {eps, 1.0 - eps}};
  return scheme;
}

EquilibriumPoint AnalyticEquilibrium(EnvId id, double eps,
                                     const LaeParams& params) {
  EquilibriumPoint point;
  switch (id) {
    case EnvId::kRel: {
      point.eps_star = 0.5;
      if (eps < 0 || eps > point.eps_star + kStructuralTol) {
        throw DomainError("REL eps outside [0, 1/2]");
      }
      point.sender_value = (1.0 + 2.0 * eps) / 3.0;
      point.receiver_value = (1.0 - 2.0 * eps) / 3.0;
      return point;
    }
    case EnvId::kCor: {
      point.eps_star = 3.0 / 7.0;
      if (eps < 0 || eps > point.eps_star + kStructuralTol) {
        throw DomainError("COR eps outside [0, 3/7]");
      }
      point.sender_value = 0.3 + 0.7 * eps;
      point.receiver_value = 1.0 - 0.7 * eps;
      return point;
    }
    case EnvId::kLae: {
      params.Validate();
      double v = params.speed_gain, k = params.fine;
      double z = params.miles, g = params.officers;
      double eps_star = 1.0 - (v * z - g * k) / (v * z - v * g);
      point.eps_star = std::clamp(eps_star, 0.0, 1.0);
      if (eps < 0 || eps > point.eps_star + kStructuralTol) {
        throw DomainError("LAE eps outside [0, eps_star]");
      }
      // Per-mile values under obedient driving: the driver speeds only on
      // truthfully revealed unpatrolled miles; the police score obedience
      // probability.
      point.receiver_value = (1.0 - eps) * v * (z - g) / z;
      point.sender_value = g / z + eps * (1.0 - g / z);
      return point;
    }
  }
  throw DomainError("unknown environment id");
}

std::string RenderStateText(const VerbalizedEnv& env, int state_index,
                            uint64_t seed) {
  if (state_index < 0 || state_index >= env.base.num_states()) {
    throw DomainError("state index out of range");
  }
  const std::string& state = env.base.states[state_index];
  const auto& templates = env.state_templates.at(state);
  uint64_t pick = MixSeed(seed, StableHash(state));
  std::string text = templates[pick % templates.size()];

  // Fill {slot} placeholders from the fixture corpus, deterministically.
  size_t pos = 0;
  int occurrence = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    size_t end = text.find('}', pos);
    if (end == std::string::npos) break;
    std::string slot = text.substr(pos + 1, end - pos - 1);
    auto it = env.slot_corpus.find(slot);
    if (it == env.slot_corpus.end() || it->second.empty()) {
      pos = end + 1;
      continue;
    }
    uint64_t key = MixSeed(pick, StableHash(slot) + occurrence);
    const std::string& value = it->second[key % it->second.size()];
    text.replace(pos, end - pos + 1, value);
    pos += value.size();
    ++occurrence;
  }
  return text;
}

}  // namespace vbp
