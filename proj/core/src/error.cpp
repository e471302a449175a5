// Copyright 2026 The higgs-sp4 Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "higgs_sp4/error.hpp"

#include <utility>

namespace higgs_sp4 {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::SingularNormalization: return "SingularNormalization";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RequiresExplicitH0: return "RequiresExplicitH0";
    case ErrorKind::OutOfClassifiedRange: return "OutOfClassifiedRange";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::NotPolystable: return "NotPolystable";
    case ErrorKind::UnstableInput: return "UnstableInput";
    case ErrorKind::UndeterminedSpin: return "UndeterminedSpin";
    case ErrorKind::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string clause)
    : std::runtime_error(std::string(to_string(kind)) + ": " + clause), kind_(kind),
      clause_(std::move(clause))
{
}

RequiresExplicitH0::RequiresExplicitH0(long degree, std::string clause)
    : Error(ErrorKind::RequiresExplicitH0, std::move(clause)), degree_(degree)
{
}

void fail(ErrorKind kind, std::string clause) { throw Error(kind, std::move(clause)); }

} // namespace higgs_sp4
