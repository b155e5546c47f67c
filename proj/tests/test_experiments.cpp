// Copyright 2026 The ergo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ergo/experiments/experiments.hpp"
#include "ergo/vdc/vdc.hpp"
#include "support.hpp"

using namespace ergo;

namespace {

ExperimentConfig config_for(const std::string& name, std::initializer_list<std::pair<std::string, std::string>> kv) {
    auto c = ExperimentConfig::defaults(name);
    for (const auto& [k, v] : kv) c.set(k, v);
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("config grammar") {
    const auto c = ExperimentConfig::parse("# comment\nexperiment = recurrence\nseed = 7\nn = 500   # trailing\nmap = power 3/2\n");
    CHECK(c.experiment() == "recurrence");
    CHECK(c.seed() == 7);
    CHECK(c.get_int("n") == 500);
    CHECK(c.get("map") == "power 3/2");
    CHECK(c.get("beta") == "sqrt3m1");
    CHECK(ExperimentConfig::parse(c.to_text()) == c);
    CHECK_THROWS_AS(ExperimentConfig::parse("experiment = recurrence\nfrobnicate = 1\n"), ParseError);
    CHECK_THROWS_AS(ExperimentConfig::parse("n = 3\n"), InvalidInput);
    CHECK_THROWS_AS(ExperimentConfig::defaults("example9"), InvalidInput);
    for (const auto& name : experiment_names()) {
        const auto d = ExperimentConfig::defaults(name);
        CHECK(ExperimentConfig::parse(d.to_text()) == d);
    }
}

TEST_CASE("example1 single pair and control") {
    const auto r = run_example1(config_for("example1", {{"p", "3"}, {"k", "1"}, {"h", "[1]"}, {"character", "char y=[1]"}}));
    const auto& t = r.table("pairs");
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][3] == "true");
    CHECK(t.rows[0][4] == "exact");
    CHECK(r.summary_value("nontrivial_pairs_exact_zero") == "true");
    CHECK(r.summary_value("control_is_one") == "true");
    CHECK_THROWS_AS(run_example1(config_for("example1", {{"h", "[1]"}})), InvalidInput);
}

TEST_CASE("example1 seeded pairs over F_625") {
    const auto r = run_example1(config_for("example1", {{"p", "5"}, {"k", "4"}, {"pairs", "50"}}));
    const auto& t = r.table("pairs");
    CHECK(t.rows.size() == 50);
    for (const auto& row : t.rows) {
        CHECK(row[3] == "true");
        CHECK(row[4] == "exact");
    }
}

TEST_CASE("example2 separability and core instance") {
    CHECK_THROWS_AS(require_separable({0, 0, 0, 1}, 3), InvalidInput);
    try {
        require_separable({0, 1, 0, 2}, 3);
        FAIL("expected rejection");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("y^3") != std::string::npos);
    }
    CHECK_NOTHROW(require_separable({0, 0, 1}, 3));
    CHECK_THROWS_AS(require_separable({4}, 3), InvalidInput);
    CHECK_THROWS_AS(run_example2(config_for("example2", {{"polynomial", "[0,0,0,1]"}})), InvalidInput);

    const auto f3t = GroupDescriptor::poly_ring(3);
    CHECK(ideal_witness_degree(Character::residues(f3t, {1}), GroupElement{1}) == 0);
    CHECK(ideal_witness_degree(Character::residues(f3t, {0, 1}), GroupElement{0, 0, 1}) == -1);
    CHECK(ideal_witness_degree(Character::trivial(f3t), GroupElement{1}) == -1);

    const auto r = run_example2(config_for("example2", {{"pairs", "4"}, {"negatives", "2"}}));
    CHECK(r.summary_value("positives_exact_zero_beyond_witness") == "true");
    CHECK(r.summary_value("negatives_unit_modulus") == "true");
}

TEST_CASE("zinfty counterexample") {
    const auto r = run_zinfty_counterexample(config_for("zinfty_counterexample", {{"level", "2"}, {"samples", "3"}}));
    CHECK(r.summary_value("zero_shift_is_one") == "true");
    CHECK(r.summary_value("in_3g_average_equals_chi_h2") == "true");
    CHECK(r.summary_value("unit_coordinate_average_zero") == "true");
}

TEST_CASE("recurrence edge cases") {
    CHECK(triple_intersection(0.0, 1.0, 0.3, 0.8) == doctest::Approx(1.0));
    CHECK(triple_intersection(0.2, 0.2, 0.3, 0.8) == 0.0);
    CHECK(triple_intersection(0.0, 0.5, 0.25, 0.0) == doctest::Approx(0.25));
    const auto full = run_recurrence(config_for("recurrence", {{"lo", "0"}, {"hi", "1"}, {"n", "200"}}));
    CHECK(full.summary_value("average") == "1.000000e+00");
    CHECK(full.summary_value("average_at_least_bound_minus_tolerance") == "true");
    const auto empty = run_recurrence(config_for("recurrence", {{"lo", "1/2"}, {"hi", "1/2"}, {"n", "200"}}));
    CHECK(empty.summary_value("average") == "0.000000e+00");
    CHECK(empty.summary_value("average_at_least_bound_minus_tolerance") == "true");
}

TEST_CASE("joint ergodicity with constant observables") {
    const auto r = run_joint_ergodicity_demo(
        config_for("joint_ergodicity_demo", {{"f0_frequency", "0"}, {"f1_frequency", "0"}, {"n0", "50"}, {"doublings", "2"}}));
    CHECK(r.summary_value("deviation") == "0.000000e+00");
    CHECK(r.summary_value("deviation_within_tolerance") == "true");
}

TEST_CASE("spectral_classify cases") {
    const std::vector<std::pair<std::string, std::string>> expect{
        {"bernoulli", "lebesgue_like"}, {"rotation", "atomic_dominant"}, {"mixture", "mixed"}, {"dual", "lebesgue_like"}, {"dual_atom", "atomic_dominant"}};
    for (const auto& [c, tag] : expect) {
        const auto r = run_spectral_classify(config_for("spectral_classify", {{"case", c}, {"n", "1024"}, {"resolution", "1024"}}));
        CHECK_MESSAGE(r.summary_value("classification") == tag, c);
    }
}

TEST_CASE("report emission") {
    ExperimentReport empty;
    CHECK(table_text(empty) == "# ergo " + artifact_version() + "\n");
    CHECK(structured_text(empty) == "version = " + artifact_version() + "\n");

    const auto cfg = config_for("example1", {{"p", "3"}, {"k", "2"}, {"pairs", "5"}});
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    for (auto fmt : {ReportFormat::TableText, ReportFormat::StructuredText}) CHECK(render(a, fmt) == render(b, fmt));
    const std::string text = table_text(a);
    CHECK(text.find("[pairs]") != std::string::npos);
    CHECK(text.find("wall") == std::string::npos);

    const std::string path = "report_emission_test.txt";
    emit_report(a, ReportFormat::StructuredText, path);
    CHECK(slurp(path) == structured_text(a));
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_report(a, ReportFormat::TableText, "/nonexistent/dir/report.txt"), Error);
    CHECK(parse_format("structured_text") == ReportFormat::StructuredText);
    CHECK_THROWS_AS(parse_format("json"), InvalidInput);
}

TEST_CASE("weyl report trace matches the verdict trace") {
    auto cfg = config_for("weyl_vdc", {{"n0", "500"}, {"doublings", "4"}, {"window_start", "2000"}, {"conclusion_n", "8000"}});
    const auto r = run_weyl_vdc(cfg);
    const auto& rows = r.table("trace").rows;
    REQUIRE_FALSE(r.records.empty());
    const std::string& record = r.records.front();
    const std::string marker = "[vdc.trace]\n";
    const auto pos = record.find(marker);
    REQUIRE(pos != std::string::npos);
    std::istringstream in(record.substr(pos + marker.size()));
    std::string line;
    std::getline(in, line);  // exponent
    std::size_t i = 0;
    while (std::getline(in, line)) {
        REQUIRE(i < rows.size());
        CHECK(rows[i++][0] == line);
    }
    CHECK(i == rows.size());
    const std::string table = table_text(r);
    for (const auto& row : rows) CHECK(table.find(row[0]) != std::string::npos);
}

TEST_CASE("budget is enforced before computing") {
    auto cfg = config_for("example1", {{"p", "5"}, {"k", "6"}});
    cfg.set_budget(1000);
    CHECK_THROWS_AS(run_experiment(cfg), BudgetExceeded);
}
