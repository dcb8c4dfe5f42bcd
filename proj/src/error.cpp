// Copyright 2026 The exq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exq/error.hpp"

namespace exq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension:
      return "invalid-dimension";
    case ErrorKind::OutOfRange:
      return "out-of-range";
    case ErrorKind::DimensionMismatch:
      return "dimension-mismatch";
    case ErrorKind::NotNormalized:
      return "not-normalized";
    case ErrorKind::NotUnitary:
      return "not-unitary";
    case ErrorKind::InvalidParameter:
      return "invalid-parameter";
    case ErrorKind::PromiseViolated:
      return "promise-violated";
    case ErrorKind::Parse:
      return "parse";
    case ErrorKind::Io:
      return "io";
  }
  return "unknown";
}

}  // namespace exq
