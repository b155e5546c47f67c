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

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ergo/experiments/experiments.hpp"
#include "support.hpp"

using namespace ergo;

std::uint64_t& ergo::testing::property_seed() {
    static std::uint64_t seed = 0;
    return seed;
}

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

ExperimentConfig config_for(const std::string& name, std::initializer_list<std::pair<std::string, std::string>> kv) {
    auto c = ExperimentConfig::defaults(name);
    for (const auto& [k, v] : kv) c.set(k, v);
    return c;
}

std::size_t column(const ReportTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) return i;
    throw Error("table has no column " + name);
}

Outcome example1_exactness() {
    std::size_t rows = 0;
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t k = 1; k <= 6; ++k) {
            const auto r = run_example1(config_for("example1", {{"p", std::to_string(p)}, {"k", std::to_string(k)}, {"pairs", "50"}}));
            const auto& t = r.table("pairs");
            if (t.rows.size() != 50) return {false, "wrong pair count"};
            for (const auto& row : t.rows) {
                if (row[column(t, "zero")] != "true" || row[column(t, "exactness")] != "exact")
                    return {false, "p=" + std::to_string(p) + " k=" + std::to_string(k) + " h=" + row[0] + " not an exact zero"};
                ++rows;
            }
        }
    }
    return {true, std::to_string(rows) + " pairs exact zero"};
}

Outcome zinfty_counterexample() {
    const auto r = run_zinfty_counterexample(config_for("zinfty_counterexample", {{"level", "4"}, {"samples", "10"}}));
    const auto& t = r.table("shifts");
    std::size_t in_3g = 0, unit = 0;
    for (const auto& row : t.rows) {
        const std::string& kind = row[column(t, "kind")];
        const bool exact = row[column(t, "exactness")] == "exact" && row[column(t, "match")] == "true";
        if (kind == "in_3g") {
            if (!exact || row[column(t, "unit_modulus")] != "true") return {false, "h=" + row[1] + " average is not chi(h^2)"};
            ++in_3g;
        } else if (kind == "unit_coordinate") {
            if (!exact) return {false, "h=" + row[1] + " average is not exactly 0"};
            ++unit;
        }
    }
    if (in_3g != 10 || unit != 10) return {false, "wrong sample counts"};
    return {true, "10 in 3G equal chi(h^2), 10 unit-coordinate zero"};
}

Outcome example2_core() {
    for (std::int64_t p : {3, 5}) {
        const auto r = run_example2(config_for(
            "example2", {{"p", std::to_string(p)}, {"polynomial", "[0,0,1]"}, {"levels", "6"}, {"pairs", "20"}, {"negatives", "5"}}));
        const auto& t = r.table("averages");
        std::size_t pos = 0, neg = 0;
        for (const auto& row : t.rows) {
            if (row[column(t, "exactness")] != "exact") return {false, "inexact row"};
            if (row[column(t, "kind")] == "positive") {
                if (row[column(t, "zero")] != "true") return {false, "p=" + std::to_string(p) + " positive pair nonzero at N=" + row[4]};
                ++pos;
            } else {
                ++neg;
            }
        }
        if (pos != 20 * 6 || neg != 5 * 6) return {false, "wrong row counts"};
        if (r.summary_value("negatives_unit_modulus") != "true") return {false, "negative control lost unit modulus"};
    }
    return {true, "240 positive rows zero, 60 negative rows unit modulus"};
}

Outcome weyl_vdc() {
    const auto r = run_weyl_vdc(ExperimentConfig::defaults("weyl_vdc"));
    const double tail = std::stod(r.summary_value("max_tail_sup"));
    const double norm = std::stod(r.summary_value("conclusion_norm"));
    // Direct long double sum as a cross-check of the conclusion average.
    const long double alpha = std::sqrt(2.0L) - 1.0L;
    std::complex<long double> s = 0;
    for (std::int64_t n = 1; n <= 100'000; ++n) {
        const long double x = alpha * static_cast<long double>(n) * static_cast<long double>(n);
        const long double t = x - std::floor(x);
        s += std::complex<long double>(std::cos(2 * M_PIl * t), std::sin(2 * M_PIl * t));
    }
    const double direct = static_cast<double>(std::abs(s) / 100'000.0L);
    std::ostringstream d;
    d << "max tail_sup " << tail << ", |A_1e5| " << norm << ", " << r.summary_value("hypothesis") << "/" << r.summary_value("conclusion");
    const bool ok = tail <= 0.05 && norm <= 0.02 && std::abs(norm - direct) <= 1e-6 && r.summary_value("conclusion_n") == "100000" &&
                    r.summary_value("hypothesis") == "hypothesis_supported" && r.summary_value("conclusion") == "conclusion_supported";
    return {ok, d.str()};
}

Outcome disjointness_decay() {
    const auto r = run_bernoulli_disjointness(ExperimentConfig::defaults("bernoulli_disjointness"));
    const auto& t = r.table("trace");
    if (t.rows.size() != 5 || t.rows.front()[0] != "1024" || t.rows.back()[0] != "16384") return {false, "wrong checkpoints"};
    for (const auto& row : t.rows)
        if (row[column(t, "within_bound")] != "true" || row[column(t, "routes_agree")] != "true" || row[column(t, "exactness")] != "exact")
            return {false, "N=" + row[0] + " fails the exact bound"};
    return {true, "N=2^10..2^14 within 2 gamma(0)/N exactly"};
}

Outcome recurrence_bound() {
    const auto r = run_recurrence(ExperimentConfig::defaults("recurrence"));
    const double avg = std::stod(r.summary_value("average"));
    return {avg >= 0.125 - 0.02 && r.summary_value("average_at_least_bound_minus_tolerance") == "true", "average " + r.summary_value("average")};
}

Outcome spectral_classification() {
    auto run = [](const std::string& c) {
        return run_spectral_classify(config_for("spectral_classify", {{"case", c}, {"n", "4096"}, {"resolution", "4096"}}));
    };
    const auto bern = run("bernoulli");
    if (bern.summary_value("classification") != "lebesgue_like" || std::stod(bern.summary_value("flatness")) != 0.0)
        return {false, "bernoulli is " + bern.summary_value("classification") + " with flatness " + bern.summary_value("flatness")};
    const auto dual = run("dual");
    if (dual.summary_value("classification") != "lebesgue_like" || dual.summary_value("parseval_exact") != "true" ||
        std::stod(dual.summary_value("flatness")) != 0.0)
        return {false, "finite dual data not exactly flat"};
    const auto rot = run("rotation");
    const auto& atoms = rot.table("atoms");
    const double mass = atoms.rows.empty() ? 0.0 : std::stod(atoms.rows.front()[column(atoms, "mass")]);
    if (rot.summary_value("classification") != "atomic_dominant" || mass < 0.9)
        return {false, "rotation is " + rot.summary_value("classification") + " with atom mass " + std::to_string(mass)};
    const auto mix = run("mixture");
    if (mix.summary_value("classification") != "mixed") return {false, "mixture is " + mix.summary_value("classification")};
    return {true, "lebesgue_like/atomic_dominant (mass " + atoms.rows.front()[1] + ")/mixed"};
}

Outcome property_suites() {
    std::size_t failed = 0;
    std::string first;
    for (std::uint64_t seed = 0; seed <= 4; ++seed) {
        testing::property_seed() = seed;
        doctest::Context ctx;
        ctx.setOption("test-suite", "properties");
        ctx.setOption("no-version", true);
        std::ostringstream sink;
        ctx.setCout(&sink);
        const int rc = ctx.run();
        if (rc != 0) {
            ++failed;
            if (first.empty()) first = "seed " + std::to_string(seed) + " failed:\n" + sink.str();
        }
    }
    if (failed) return {false, first};
    return {true, "seeds 0..4 pass"};
}

}  // namespace

int main() {
    struct Criterion {
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {example1_exactness, 60}, {zinfty_counterexample, 10}, {example2_core, 30},           {weyl_vdc, 60},
        {disjointness_decay, 30}, {recurrence_bound, 60},      {spectral_classification, 30}, {property_suites, 300},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < criteria[i].limit_seconds;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::printf("criterion %zu: %s %s (%.1f s, limit %.0f s)%s\n", i + 1, pass ? "PASS" : "FAIL", o.detail.c_str(), secs, criteria[i].limit_seconds,
                    in_time ? "" : " over time");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
