// include/asrlab/base/error.h

// Copyright 2026  ASRLab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRLAB_BASE_ERROR_H_
#define ASRLAB_BASE_ERROR_H_

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace asrlab {

// Thrown for every user-facing failure (bad files, bad configs, shape
// mismatches). The CLI catches it at top level and exits nonzero with a
// one-line diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void Fail(const std::string& msg) { throw Error(msg); }

inline void Warn(const std::string& msg) {
  std::cerr << "WARNING: " << msg << std::endl;
}

}  // namespace asrlab

// Condition check with streamed message; stays active in release builds.
#define ASR_REQUIRE(cond, msg)          \
  do {                                  \
    if (!(cond)) {                      \
      std::ostringstream os__;          \
      os__ << msg;                      \
      ::asrlab::Fail(os__.str());       \
    }                                   \
  } while (0)

#endif  // ASRLAB_BASE_ERROR_H_
