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

#include "irrepsk/error.h"

namespace irrepsk {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidMatrix: return "InvalidMatrix";
        case ErrorKind::DimError: return "DimError";
        case ErrorKind::ClassError: return "ClassError";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
        case ErrorKind::ProjectiveUnsupported: return "ProjectiveUnsupported";
        case ErrorKind::ExtensionOverflow: return "ExtensionOverflow";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::IrrepError: return "IrrepError";
        case ErrorKind::BallError: return "BallError";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::EmptyNet: return "EmptyNet";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::StaleGateSet: return "StaleGateSet";
        case ErrorKind::NetTooCoarse: return "NetTooCoarse";
        case ErrorKind::DimUnsupported: return "DimUnsupported";
        case ErrorKind::TooFar: return "TooFar";
        case ErrorKind::Stalled: return "Stalled";
        case ErrorKind::BallExit: return "BallExit";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {
}

}  // namespace irrepsk
