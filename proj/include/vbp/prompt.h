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

#ifndef VBP_PROMPT_H_
#define VBP_PROMPT_H_

#include <string>
#include <tuple>

#include "json.hpp"

namespace vbp {

// A categorical prompt choice: a writing-style category and the specific
// content within it, e.g. ("Tone", "positive"). The pair is the identity
// for pool membership and search-space bookkeeping.
struct PromptAction {
  std::string category;
  std::string content;

  bool operator==(const PromptAction& other) const = default;
  // Canonical order used for deterministic tie-breaking.
  bool operator<(const PromptAction& other) const {
    return std::tie(category, content) <
           std::tie(other.category, other.content);
  }

  std::string ToString() const { return category + "=" + content; }

  nlohmann::json ToJson() const {
    return nlohmann::json{{"category", category}, {"content", content}};
  }
  static PromptAction FromJson(const nlohmann::json& j) {
    return {j.at("category").get<std::string>(),
            j.at("content").get<std::string>()};
  }
};

}  // namespace vbp

#endif  // VBP_PROMPT_H_
