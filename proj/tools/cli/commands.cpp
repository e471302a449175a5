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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "higgs_sp4/error.hpp"
#include "verify.hpp"

namespace higgs_sp4::cli {

namespace {

Json error_body(std::string_view kind, const std::string &clause) { return {{"error", kind}, {"clause", clause}}; }

} // namespace

CommandOutput guarded(const std::function<CommandOutput()> &fn)
{
    try {
        return fn();
    } catch (const Error &e) {
        const int code = e.kind() == ErrorKind::MalformedInput ? kUsage : kDomainFailure;
        return {code, error_body(to_string(e.kind()), e.clause())};
    } catch (const nlohmann::json::exception &e) {
        return {kUsage, error_body("MalformedInput", e.what())};
    }
}

Json read_json(const std::string &path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) fail(ErrorKind::MalformedInput, "cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error &e) {
        fail(ErrorKind::MalformedInput, std::string("JSON parse error: ") + e.what());
    }
}

CommandOutput cmd_verify(const std::string &scope, const EmbeddingFrame &frame)
{
    if (scope != "lie" && scope != "matalg" && scope != "all") {
        return {kUsage, Json{{"error", "InvalidArgument"}, {"clause", "verify pre: scope is lie, matalg or all"}}};
    }
    const Report r = run_verify(scope, frame);
    return {r.pass() ? kOk : kDomainFailure, to_json(r)};
}

CommandOutput cmd_stability(const Json &doc, int genus_override)
{
    const auto d = json_io::document_from_json(doc, genus_override);
    return {kOk, json_io::to_json(stability_sp4(d.ctx, d.datum))};
}

CommandOutput cmd_classify(const Json &doc, int genus_override)
{
    const auto d = json_io::document_from_json(doc, genus_override);
    const ComponentLabel label = classify(d.ctx, d.datum);
    return {kOk, json_io::to_json(label, reduction_verdict(label))};
}

CommandOutput cmd_count(int genus, std::optional<int> sp2n)
{
    const CurveCtx ctx = CurveCtx::make(genus);
    const ComponentCount n = count_components(ctx);
    if (!sp2n) {
        Json j{{"genus", genus}};
        j.update(json_io::to_json(n));
        return {kOk, j};
    }
    const std::uint64_t total = count_components_sp2n(ctx, *sp2n);
    return {kOk, Json{{"genus", genus}, {"n", *sp2n}, {"total", total}, {"sp4_total", n.total}}};
}

CommandOutput cmd_f2scan(int genus, ScanOptions::Mode mode, std::optional<std::uint64_t> samples)
{
    ScanOptions opts;
    opts.mode = mode;
    if (samples) opts.samples = *samples;
    return {kOk, json_io::to_json(f2_image_scan(genus, opts))};
}

CommandOutput cmd_fiber(int genus, long c)
{
    const CurveCtx ctx = CurveCtx::make(genus);
    Json j{{"genus", genus}};
    j.update(json_io::to_json(fiber_geometry(ctx, c)));
    return {kOk, j};
}

CommandOutput cmd_normal_form(const Json &doc, int genus_override)
{
    auto d = json_io::document_from_json(doc, genus_override);
    if (d.datum.is<DiagonalShape>()) {
        d.datum = iso_normal_form(d.ctx, d.datum.as<DiagonalShape>());
    } else if (d.datum.is<SL2RDatum>()) {
        d.datum = irr_embed(d.ctx, d.datum.as<SL2RDatum>());
    } else {
        fail(ErrorKind::InvalidArgument, "normal-form pre: diagonal or sl2r datum");
    }
    return {kOk, json_io::to_json(d)};
}

} // namespace higgs_sp4::cli
