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

#ifndef VBP_ENVIRONMENTS_H_
#define VBP_ENVIRONMENTS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vbp/game_core.h"
#include "vbp/prompt.h"

namespace vbp {

enum class EnvId { kRel, kCor, kLae };

std::string EnvIdToString(EnvId id);
EnvId EnvIdFromString(const std::string& s);

// Law-enforcement parameters: Z miles of road, G patrolling officers,
// speeding utility V per mile, fine K > V.
struct LaeParams {
  int miles = 3;        // Z
  int officers = 2;     // G
  double speed_gain = 1.0;  // V
  double fine = 1.2;        // K

  void Validate() const;
};

// How a sender writing style behaves in the deterministic mock pipeline:
// on the negative state the signal reads positive with probability
// lie_rate; positive states are always described positively.
struct SenderStyle {
  PromptAction action;
  double lie_rate = 0;
};

// How a receiver decision style maps a signal's support score in [0,1] to
// the positive action: accept iff score >= threshold (or < 0.5 when
// inverted).
struct ReceiverStyle {
  PromptAction action;
  double threshold = 0.5;
  bool invert = false;
};

// A classic BP instance plus everything needed to play it in language
// space: state text templates, role prompts, the polarization extremes, and
// the desk-scale prompt-action grids shared with the mock backend's rule
// tables.
struct VerbalizedEnv {
  EnvId id = EnvId::kRel;
  BpInstance base;  // direct form: signals are action recommendations
  LaeParams lae;    // meaningful only for LAE

  // signal_labels[0] is the positive extreme (recommend / guilty /
  // patrolled); [1] the negative one. classification_labels mirrors them.
  std::vector<std::string> signal_labels;
  std::vector<std::string> classification_labels;
  // base.states[0] is the positive state (strong / guilty / patrolled).
  std::map<std::string, std::vector<std::string>> state_templates;
  std::map<std::string, std::vector<std::string>> slot_corpus;
  std::string sender_role_prompt;
  std::string receiver_role_prompt;

  std::vector<SenderStyle> sender_styles;
  std::vector<ReceiverStyle> receiver_styles;

  int PositiveAction() const { return 0; }
  int NegativeAction() const { return 1; }
  int PositiveState() const { return 0; }
  int NegativeState() const { return 1; }

  const SenderStyle& FindSenderStyle(const PromptAction& a) const;
  const ReceiverStyle& FindReceiverStyle(const PromptAction& a) const;

  void Validate() const;
};

// Recommendation-letter game: strong/weak candidates, prior (1/3, 2/3).
VerbalizedEnv MakeRel();
// Courtroom game: guilty/innocent defendants, prior (0.3, 0.7).
VerbalizedEnv MakeCor();
// Per-mile law-enforcement game with prior (G/Z, 1 - G/Z). The Z-mile game
// factorizes into Z independent copies of this instance.
VerbalizedEnv MakeLae(const LaeParams& params);

VerbalizedEnv MakeEnv(EnvId id, const LaeParams& params = LaeParams());

// Direct scheme that reports the positive state truthfully and describes the
// negative state positively with probability eps.
SignalingScheme EpsilonScheme(const BpInstance& inst, double eps);

// Closed-form equilibrium values at lying rate eps, plus the optimal rate.
struct EquilibriumPoint {
  double sender_value = 0;
  double receiver_value = 0;
  double eps_star = 0;
};
EquilibriumPoint AnalyticEquilibrium(EnvId id, double eps,
                                     const LaeParams& params = LaeParams());

// Deterministic state description: template picked and slots filled from
// the fixture corpus, keyed by seed. Byte-identical across runs.
std::string RenderStateText(const VerbalizedEnv& env, int state_index,
                            uint64_t seed);

}  // namespace vbp

#endif  // VBP_ENVIRONMENTS_H_
