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

#include <functional>
#include <optional>
#include <string>

#include "higgs_sp4/json_io.hpp"
#include "higgs_sp4/liegroup.hpp"
#include "higgs_sp4/moduli.hpp"

namespace higgs_sp4::cli {

using json_io::Json;

/// Process exit codes.
enum Exit : int { kOk = 0, kDomainFailure = 1, kUsage = 2 };

struct CommandOutput {
    int exit_code = kOk;
    Json body;
};

/// Runs `fn`, mapping domain errors to exit 1 and malformed input to exit 2,
/// each with an {"error", "clause"} body.
CommandOutput guarded(const std::function<CommandOutput()> &fn);

/// Reads a JSON document from a path ("-" for stdin). Throws
/// Error(MalformedInput) on I/O or parse failure.
Json read_json(const std::string &path);

CommandOutput cmd_verify(const std::string &scope, const EmbeddingFrame &frame = EmbeddingFrame::standard());
CommandOutput cmd_stability(const Json &doc, int genus_override = 0);
CommandOutput cmd_classify(const Json &doc, int genus_override = 0);
CommandOutput cmd_count(int genus, std::optional<int> sp2n);
CommandOutput cmd_f2scan(int genus, ScanOptions::Mode mode, std::optional<std::uint64_t> samples);
CommandOutput cmd_fiber(int genus, long c);
/// Diagonal data: isomorphism normal form. SL(2,R) data: irreducible image.
CommandOutput cmd_normal_form(const Json &doc, int genus_override = 0);

} // namespace higgs_sp4::cli
