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

#include <chrono>
#include <functional>
#include <map>

#include "ergo/experiments/experiments.hpp"

namespace ergo {

ExperimentReport run_experiment(const ExperimentConfig& config) {
    static const std::map<std::string, std::function<ExperimentReport(const ExperimentConfig&)>, std::less<>> runners{
        {"example1", run_example1},
        {"example2", run_example2},
        {"zinfty_counterexample", run_zinfty_counterexample},
        {"weyl_vdc", run_weyl_vdc},
        {"bernoulli_disjointness", run_bernoulli_disjointness},
        {"recurrence", run_recurrence},
        {"joint_ergodicity_demo", run_joint_ergodicity_demo},
        {"spectral_classify", run_spectral_classify},
    };
    const auto it = runners.find(config.experiment());
    if (it == runners.end()) throw InvalidInput("unknown experiment '" + config.experiment() + "'");
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport r = it->second(config);
    r.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace ergo
