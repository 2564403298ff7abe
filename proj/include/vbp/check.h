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

#ifndef VBP_CHECK_H_
#define VBP_CHECK_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace vbp {

// Raised when a caller violates an operation's contract (bad ids, malformed
// distributions, out-of-range parameters).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by language-model backends. Retryable errors (transport hiccups,
// 5xx) may be retried by the caller; terminal errors must propagate.
class BackendError : public std::runtime_error {
 public:
  BackendError(const std::string& what, bool retryable)
      : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

namespace internal {
[[noreturn]] inline void FatalCheckFailure(const char* cond, const char* file,
                                           int line) {
  std::ostringstream oss;
  oss << "VBP_CHECK failure: " << cond << " at " << file << ":" << line;
  throw std::logic_error(oss.str());
}
}  // namespace internal

}  // namespace vbp

// Internal invariant checks. Failures indicate a bug, not a caller error.
#define VBP_CHECK(cond)                                             \
  do {                                                              \
    if (!(cond)) {                                                  \
      ::vbp::internal::FatalCheckFailure(#cond, __FILE__, __LINE__); \
    }                                                               \
  } while (false)

#define VBP_CHECK_GE(a, b) VBP_CHECK((a) >= (b))
#define VBP_CHECK_LE(a, b) VBP_CHECK((a) <= (b))
#define VBP_CHECK_GT(a, b) VBP_CHECK((a) > (b))
#define VBP_CHECK_LT(a, b) VBP_CHECK((a) < (b))
#define VBP_CHECK_EQ(a, b) VBP_CHECK((a) == (b))

#endif  // VBP_CHECK_H_
