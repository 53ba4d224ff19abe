// Copyright 2026 The vtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VTLAB_ERROR_H_
#define VTLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace vtlab {

enum class ErrorCode {
  kDomain,     // argument outside the function's domain
  kRange,      // index past the end of a table or file
  kFormat,     // malformed file contents
  kIo,         // open/read/write failure, truncated file
  kLayout,     // overlapping or out-of-bounds placements
  kCapacity,   // cache cannot hold the request
  kOverflow,   // value does not fit the target encoding
  kConfig,     // invalid run configuration
  kContract,   // caller broke a documented precondition
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported as VtError. Callers that care about the
// category switch on code(); everyone else can treat it as runtime_error.
class VtError : public std::runtime_error {
 public:
  VtError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kRange: return "range error";
    case ErrorCode::kFormat: return "format error";
    case ErrorCode::kIo: return "I/O error";
    case ErrorCode::kLayout: return "layout error";
    case ErrorCode::kCapacity: return "capacity error";
    case ErrorCode::kOverflow: return "encoding overflow";
    case ErrorCode::kConfig: return "configuration error";
    case ErrorCode::kContract: return "contract violation";
  }
  return "error";
}

}  // namespace vtlab

#endif  // VTLAB_ERROR_H_
