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

#include <gtest/gtest.h>

#include <fstream>

#include "cli/commands.hpp"
#include "cli/verify.hpp"
#include "higgs_sp4/liegroup.hpp"

using namespace higgs_sp4;
using cli::Json;

namespace {

Json load(const std::string &dir, const std::string &name)
{
    std::ifstream in(dir + "/" + name + ".json");
    if (!in) throw std::runtime_error("missing " + name);
    return Json::parse(in);
}

Json sample(const std::string &name) { return load(HIGGS_SP4_SAMPLES_DIR, name); }
Json golden_file(const std::string &name) { return load(HIGGS_SP4_GOLDEN_DIR, name); }

EmbeddingFrame corrupted_frame()
{
    SqMatrix h = mat::H_tilde();
    h(1, 1) += FieldElem(1);
    return EmbeddingFrame::from(h, mat::T());
}

} // namespace

TEST(CliVerify, AllScopesPass)
{
    for (const char *scope : {"lie", "matalg", "all"}) {
        const auto out = cli::cmd_verify(scope);
        EXPECT_EQ(out.exit_code, cli::kOk) << out.body.dump(2);
        EXPECT_EQ(out.body["summary"]["pass"], true);
    }
}

TEST(CliVerify, CorruptedFrameIsCaught)
{
    const auto out = cli::cmd_verify("all", corrupted_frame());
    EXPECT_NE(out.exit_code, cli::kOk);
    EXPECT_EQ(out.body["summary"]["pass"], false);
    const cli::Report r = cli::run_verify("lie", corrupted_frame());
    EXPECT_LT(r.passed(), r.checks.size());
}

TEST(CliVerify, UnknownScopeIsUsageError)
{
    const auto out = cli::cmd_verify("everything");
    EXPECT_EQ(out.exit_code, cli::kUsage);
    EXPECT_TRUE(out.body.contains("clause"));
}

TEST(CliGoldens, StabilityClassifyAndNormalForm)
{
    struct Case {
        const char *golden;
        const char *sample;
        cli::CommandOutput (*cmd)(const Json &, int);
    };
    const Case cases[] = {
        {"stability_1a_i", "stability_1a_i", cli::cmd_stability},
        {"stability_1a_ii", "stability_1a_ii", cli::cmd_stability},
        {"stability_1b_i", "stability_1b_i", cli::cmd_stability},
        {"stability_1b_ii_beta1", "stability_1b_ii_beta1", cli::cmd_stability},
        {"stability_1b_ii_beta2", "stability_1b_ii_beta2", cli::cmd_stability},
        {"stability_1b_iii", "stability_1b_iii", cli::cmd_stability},
        {"stability_cover_orth", "stability_cover_orth", cli::cmd_stability},
        {"stability_torsion_distinct", "stability_torsion_distinct", cli::cmd_stability},
        {"stability_torsion_equal", "stability_torsion_equal", cli::cmd_stability},
        {"stability_sl2r_positive", "sl2r_positive", cli::cmd_stability},
        {"stability_sl2r_negative", "sl2r_negative", cli::cmd_stability},
        {"stability_sl2r_zero", "sl2r_zero", cli::cmd_stability},
        {"classify_1b_iii", "stability_1b_iii", cli::cmd_classify},
        {"classify_cover_orth", "stability_cover_orth", cli::cmd_classify},
        {"normal_form_c1", "normal_form_c1", cli::cmd_normal_form},
        {"normal_form_irr_hitchin", "irr_hitchin", cli::cmd_normal_form},
    };
    for (const auto &c : cases) {
        const auto out = cli::guarded([&] { return c.cmd(sample(c.sample), 0); });
        EXPECT_EQ(out.exit_code, cli::kOk) << c.golden;
        EXPECT_EQ(out.body, golden_file(c.golden)) << c.golden << ": " << out.body.dump();
    }
}

TEST(CliGoldens, EmbeddedSL2RLandsInItsHitchinComponent)
{
    const auto out = cli::guarded([] { return cli::cmd_classify(golden_file("normal_form_irr_hitchin"), 0); });
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_EQ(out.body["component"], "Hitchin");
    EXPECT_EQ(out.body["spin"], "101000");
    EXPECT_EQ(out.body["admits"], Json::array({"G_i"}));
    // The bare SL(2,R) datum is not an Sp(4,R) datum.
    EXPECT_EQ(cli::guarded([] { return cli::cmd_classify(sample("irr_hitchin"), 0); }).exit_code,
              cli::kDomainFailure);
}

TEST(CliGoldens, Counting)
{
    EXPECT_EQ(cli::guarded([] { return cli::cmd_count(2, std::nullopt); }).body, golden_file("count_g2"));
    EXPECT_EQ(cli::guarded([] { return cli::cmd_fiber(4, 1); }).body, golden_file("fiber_g4_c1"));
    EXPECT_EQ(cli::guarded([] { return cli::cmd_f2scan(3, ScanOptions::Mode::Auto, std::nullopt); }).body,
              golden_file("f2scan_g3"));
}

TEST(CliErrors, ExitCodes)
{
    const auto malformed = cli::guarded([] { return cli::cmd_stability(sample("malformed_shape"), 0); });
    EXPECT_EQ(malformed.exit_code, cli::kUsage);
    EXPECT_EQ(malformed.body["error"], "MalformedInput");

    const auto unstable = cli::guarded([] { return cli::cmd_classify(sample("stability_1a_ii"), 0); });
    EXPECT_EQ(unstable.exit_code, cli::kDomainFailure);
    EXPECT_EQ(unstable.body["error"], "NotPolystable");
    EXPECT_FALSE(unstable.body["clause"].get<std::string>().empty());

    EXPECT_EQ(cli::guarded([] { return cli::cmd_fiber(4, 3); }).exit_code, cli::kDomainFailure);
    EXPECT_EQ(cli::guarded([] { return cli::cmd_count(1, std::nullopt); }).exit_code, cli::kDomainFailure);
    EXPECT_EQ(cli::guarded([] { return cli::cmd_normal_form(sample("stability_cover_orth"), 0); }).exit_code,
              cli::kDomainFailure);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical)
{
    const std::string a = cli::cmd_verify("all").body.dump();
    EXPECT_EQ(a, cli::cmd_verify("all").body.dump());
    const auto scan = [] { return cli::cmd_f2scan(5, ScanOptions::Mode::Sampled, 100000).body.dump(); };
    EXPECT_EQ(scan(), scan());
}
