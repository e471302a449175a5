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

#include <string>
#include <vector>

#include "higgs_sp4/json_io.hpp"
#include "higgs_sp4/liegroup.hpp"

namespace higgs_sp4::cli {

struct Check {
    std::string id;
    std::string paper_ref;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const;
    std::size_t passed() const;
};

/// scope: "lie", "matalg" or "all". The frame is injectable so a corrupted
/// H~ can be fed in as a negative control.
Report run_verify(const std::string &scope, const EmbeddingFrame &frame = EmbeddingFrame::standard());

json_io::Json to_json(const Report &r);

} // namespace higgs_sp4::cli
