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

#ifndef VBP_FIXTURES_H_
#define VBP_FIXTURES_H_

#include <filesystem>
#include <string>

namespace vbp {

// Root of the checked-in fixture corpus (state templates, role prompts,
// canned signal texts, mock rule tables). Resolution order: the
// VBP_FIXTURES environment variable, then the compiled-in source location.
std::filesystem::path FixtureRoot();

// Reads a file relative to the fixture root. Throws DomainError when the
// file is missing.
std::string ReadFixtureFile(const std::string& relative_path);

}  // namespace vbp

#endif  // VBP_FIXTURES_H_
