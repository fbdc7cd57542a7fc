/*
   Copyright 2026 The skewtor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewtor/error.hpp"

namespace skewtor {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NotValidated: return "NotValidated";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NonEigenvector: return "NonEigenvector";
    case ErrorKind::MembershipViolation: return "MembershipViolation";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Error";
}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
    case ErrorKind::Inconsistent:
    case ErrorKind::NotNormal:
    case ErrorKind::NotValidated:
      return false;
    default:
      return true;
  }
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(kind_name(kind)) + ": " + what);
}

}  // namespace skewtor
