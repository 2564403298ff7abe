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

#include "vbp/fixtures.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vbp/check.h"

#ifndef VBP_FIXTURE_DIR
#define VBP_FIXTURE_DIR "fixtures"
#endif

namespace vbp {

std::filesystem::path FixtureRoot() {
  if (const char* env = std::getenv("VBP_FIXTURES"); env != nullptr) {
    return std::filesystem::path(env);
  }
  return std::filesystem::path(VBP_FIXTURE_DIR);
}

std::string ReadFixtureFile(const std::string& relative_path) {
  std::filesystem::path path = FixtureRoot() / relative_path;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("missing fixture file: " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace vbp
