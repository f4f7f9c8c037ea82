// Copyright 2026 The irrepsk Authors
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

#ifndef IRREPSK_ERROR_H
#define IRREPSK_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace irrepsk {

enum class ErrorKind {
    InvalidMatrix,
    DimError,
    ClassError,
    NotClosed,
    NotIrreducible,
    AmbiguousMatch,
    ProjectiveUnsupported,
    ExtensionOverflow,
    SchemaError,
    IrrepError,
    BallError,
    BudgetExceeded,
    EmptyNet,
    FormatError,
    StaleGateSet,
    NetTooCoarse,
    DimUnsupported,
    TooFar,
    Stalled,
    BallExit,
    GroupTooLarge,
    IoError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind; the
/// kind name is always the first token of what().
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace irrepsk

#endif
