// Copyright 2026 The rtlsym Authors
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

#ifndef RTLSYM_SUPPORT_DIAG_H_
#define RTLSYM_SUPPORT_DIAG_H_

#include <exception>
#include <string>
#include <utility>

namespace rtlsym {

// Line/column position inside one source file. The owning container
// (ModuleAst, RtlDesign, Harness) records which file that is.
struct SourceLoc {
  int line = 1;
  int col = 1;

  bool operator==(const SourceLoc&) const = default;
};

enum class StatusCode {
  kOk = 0,
  kIoError,
  kLexError,
  kParseError,
  kElabError,
  kWidthError,
  kHarnessError,
  kVectorError,
  kFormatError,
  kSolverError,
  kMissingVar,
  kInternalError,
  kUsageError,
};

const char* StatusCodeName(StatusCode code);

// The one exception type used across the library. Carries a status code,
// an optional source position, and a human-readable message. Rendering
// follows the compiler convention "file:line:col: error: message".
class Diag : public std::exception {
 public:
  Diag(StatusCode code, std::string message)
      : code_(code), message_(std::move(message)) {
    rendered_ = "error: " + message_;
  }

  Diag(StatusCode code, std::string file, SourceLoc loc, std::string message)
      : code_(code), message_(std::move(message)), file_(std::move(file)),
        loc_(loc), has_loc_(true) {
    rendered_ = file_ + ":" + std::to_string(loc_.line) + ":" +
                std::to_string(loc_.col) + ": error: " + message_;
  }

  const char* what() const noexcept override { return rendered_.c_str(); }
  StatusCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const std::string& file() const { return file_; }
  SourceLoc loc() const { return loc_; }
  bool has_loc() const { return has_loc_; }

 private:
  StatusCode code_;
  std::string message_;
  std::string file_;
  SourceLoc loc_;
  bool has_loc_ = false;
  std::string rendered_;
};

}  // namespace rtlsym

#endif  // RTLSYM_SUPPORT_DIAG_H_
