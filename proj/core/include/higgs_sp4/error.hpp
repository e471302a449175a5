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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace higgs_sp4 {

enum class ErrorKind {
    DivisionByZero,
    DimensionMismatch,
    SingularMatrix,
    NotInAlgebra,
    SingularNormalization,
    InvalidArgument,
    RequiresExplicitH0,
    OutOfClassifiedRange,
    NotMaximal,
    NotPolystable,
    UnstableInput,
    UndeterminedSpin,
    ScanBudgetExceeded,
    MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by every module. `clause()` names the violated
/// precondition so the CLI can report it verbatim.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string clause);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string &clause() const noexcept { return clause_; }

  private:
    ErrorKind kind_;
    std::string clause_;
};

/// Raised by h0 for bundles in the special range; carries the bundle degree
/// so callers know what override to supply.
class RequiresExplicitH0 : public Error {
  public:
    RequiresExplicitH0(long degree, std::string clause);
    long degree() const noexcept { return degree_; }

  private:
    long degree_;
};

[[noreturn]] void fail(ErrorKind kind, std::string clause);

} // namespace higgs_sp4
