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

#include "ergo/experiments/config.hpp"

#include <sstream>

#include "ergo/core/text_util.hpp"

namespace ergo {

namespace {

using Schema = std::map<std::string, std::string>;

const std::map<std::string, Schema, std::less<>>& schemas() {
    static const std::map<std::string, Schema, std::less<>> s{
        {"example1", {{"p", "3"}, {"k", "1"}, {"pairs", "50"}, {"h", ""}, {"character", ""}}},
        {"example2",
         {{"p", "3"},
          {"polynomial", "[0,0,1]"},
          {"levels", "6"},
          {"pairs", "20"},
          {"negatives", "5"},
          {"witness_degree_max", "0"},
          {"h_degree_max", "2"}}},
        {"zinfty_counterexample", {{"level", "4"}, {"multiplier", "1"}, {"samples", "10"}}},
        {"weyl_vdc",
         {{"alpha", "sqrt2m1"},
          {"degree", "2"},
          {"mode", "summable"},
          {"radius", "20"},
          {"n0", "1000"},
          {"doublings", "7"},
          {"window_start", "10000"},
          {"hypothesis_threshold", "0.05"},
          {"conclusion_threshold", "0.05"},
          {"summable_share", "0.1"},
          {"conclusion_n", "100000"},
          {"threads", "1"}}},
        {"bernoulli_disjointness", {{"probs", "[1/2,1/2]"}, {"sites", "2"}, {"beta", "1/3"}, {"min_log2", "10"}, {"max_log2", "14"}}},
        {"recurrence",
         {{"alpha", "sqrt2m1"}, {"beta", "sqrt3m1"}, {"map", "power 3/2"}, {"lo", "0"}, {"hi", "1/2"}, {"n", "10000"}, {"tolerance", "0.02"}}},
        {"joint_ergodicity_demo",
         {{"alpha", "sqrt2m1"},
          {"beta", "sqrt3m1"},
          {"map", "power 3/2"},
          {"f0_frequency", "1"},
          {"f1_frequency", "1"},
          {"n0", "1250"},
          {"doublings", "3"},
          {"tolerance", "0.05"}}},
        {"spectral_classify", {{"case", "rotation"}, {"alpha", "sqrt2m1"}, {"n", "4096"}, {"resolution", "4096"}, {"p", "3"}, {"level", "2"}}},
    };
    return s;
}

}  // namespace

std::vector<std::string> experiment_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : schemas()) out.push_back(name);
    return out;
}

const std::map<std::string, std::string>& experiment_schema(std::string_view experiment) {
    const auto it = schemas().find(experiment);
    if (it == schemas().end()) throw InvalidInput("unknown experiment '" + std::string(experiment) + "'");
    return it->second;
}

ExperimentConfig ExperimentConfig::defaults(std::string_view experiment) {
    ExperimentConfig c;
    c.experiment_ = std::string(experiment);
    c.values_ = experiment_schema(experiment);
    return c;
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string experiment;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = text::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key(text::trim(body.substr(0, eq)));
        std::string value(text::trim(body.substr(eq + 1)));
        if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
        if (key == "experiment") {
            if (!experiment.empty()) throw ParseError("line " + std::to_string(line_no) + ": experiment given twice");
            experiment = value;
        } else {
            entries.emplace_back(std::move(key), std::move(value));
        }
    }
    if (experiment.empty()) throw ParseError("config has no experiment");
    ExperimentConfig c = defaults(experiment);
    for (const auto& [key, value] : entries) {
        if (key == "seed")
            c.set_seed(static_cast<std::uint64_t>(text::parse_int64(value)));
        else if (key == "budget")
            c.set_budget(static_cast<std::size_t>(text::parse_int64(value)));
        else
            c.set(key, value);
    }
    return c;
}

void ExperimentConfig::set_budget(std::size_t budget) {
    if (budget == 0) throw InvalidInput("budget must be positive");
    budget_ = budget;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ParseError("unknown key '" + key + "' for experiment " + experiment_);
    it->second = value;
}

const std::string& ExperimentConfig::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw InvalidInput("no key '" + key + "' in " + experiment_ + " config");
    return it->second;
}

std::int64_t ExperimentConfig::get_int(const std::string& key) const { return text::parse_int64(get(key)); }
double ExperimentConfig::get_double(const std::string& key) const { return text::parse_double(get(key)); }

bool ExperimentConfig::get_bool(const std::string& key) const {
    const auto& v = get(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError("key '" + key + "' expects true or false, got '" + v + "'");
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream out;
    out << "experiment = " << experiment_ << "\n";
    out << "seed = " << seed_ << "\n";
    out << "budget = " << budget_ << "\n";
    for (const auto& [k, v] : values_) out << k << " = " << v << "\n";
    return out.str();
}

}  // namespace ergo
