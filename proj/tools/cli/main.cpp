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

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace higgs_sp4;
using namespace higgs_sp4::cli;

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations for maximal Sp(4,R) Higgs bundles"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "Run metadata on stderr");

    std::string scope = "all";
    auto *verify = app.add_subcommand("verify", "Identity verification suites");
    verify->add_option("--scope", scope, "lie, matalg or all")->check(CLI::IsMember({"lie", "matalg", "all"}));
    auto *verify_lie = app.add_subcommand("verify-lie", "Shorthand for verify --scope lie");

    std::string in_path;
    int genus = 0;
    auto *stability = app.add_subcommand("stability", "Stability verdict of a datum");
    stability->add_option("--in", in_path, "Datum JSON, - for stdin")->required();
    stability->add_option("--genus", genus, "Override the document genus");
    auto *classify_cmd = app.add_subcommand("classify", "Component label and reduction verdict");
    classify_cmd->add_option("--in", in_path, "Datum JSON, - for stdin")->required();
    classify_cmd->add_option("--genus", genus, "Override the document genus");
    auto *normal = app.add_subcommand("normal-form", "Normal form of a diagonal or SL(2,R) datum");
    normal->add_option("--in", in_path, "Datum JSON, - for stdin")->required();
    normal->add_option("--genus", genus, "Override the document genus");

    std::optional<int> sp2n;
    auto *count = app.add_subcommand("count", "Component counts");
    count->add_option("--genus", genus)->required();
    count->add_option("--sp2n", sp2n, "Count for Sp(2n,R), n >= 3");

    bool exhaustive = false;
    std::optional<std::uint64_t> samples;
    auto *scan = app.add_subcommand("f2-scan", "Image of the F2 Stiefel-Whitney map");
    scan->add_option("--genus", genus)->required();
    auto *ex_flag = scan->add_flag("--exhaustive", exhaustive);
    scan->add_option("--samples", samples)->excludes(ex_flag);

    long c = 0;
    auto *fiber = app.add_subcommand("fiber", "Fibre geometry of a c-component");
    fiber->add_option("--genus", genus)->required();
    fiber->add_option("--c", c)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    const CommandOutput out = guarded([&]() -> CommandOutput {
        if (verify->parsed()) return cmd_verify(scope);
        if (verify_lie->parsed()) return cmd_verify("lie");
        if (stability->parsed()) return cmd_stability(read_json(in_path), genus);
        if (classify_cmd->parsed()) return cmd_classify(read_json(in_path), genus);
        if (normal->parsed()) return cmd_normal_form(read_json(in_path), genus);
        if (count->parsed()) return cmd_count(genus, sp2n);
        if (fiber->parsed()) return cmd_fiber(genus, c);
        const auto mode = exhaustive ? ScanOptions::Mode::Exhaustive
                          : samples  ? ScanOptions::Mode::Sampled
                                     : ScanOptions::Mode::Auto;
        return cmd_f2scan(genus, mode, samples);
    });
    std::cout << out.body.dump(2) << '\n';
    if (verbose) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "{\"elapsed_ms\": " << ms << ", \"exit_code\": " << out.exit_code << "}\n";
    }
    return out.exit_code;
}
