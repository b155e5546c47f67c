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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/experiments/config.hpp"
#include "ergo/experiments/report.hpp"
#include "ergo/group/character.hpp"
#include "ergo/group/group.hpp"

namespace ergo {

/// Full-field averages of chi((g+h)^2 - g^2) over F_{p^k} for seeded (h, chi).
ExperimentReport run_example1(const ExperimentConfig& config);
/// Level averages of chi(p(g+h) - p(g)) on F_p[t] with positive pairs and
/// negative controls vanishing on the ideal (h).
ExperimentReport run_example2(const ExperimentConfig& config);
/// Box averages of chi(a(g+h) - a(g)) on the free sum with a(x) = (x_i^2) and chi = prod e(x_i/3).
ExperimentReport run_zinfty_counterexample(const ExperimentConfig& config);
ExperimentReport run_weyl_vdc(const ExperimentConfig& config);
ExperimentReport run_bernoulli_disjointness(const ExperimentConfig& config);
ExperimentReport run_recurrence(const ExperimentConfig& config);
ExperimentReport run_joint_ergodicity_demo(const ExperimentConfig& config);
ExperimentReport run_spectral_classify(const ExperimentConfig& config);

/// Dispatches on config.experiment() and records the wall clock.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Coefficients c_0..c_d of p(y) = sum c_j y^j on F_p[t]; InvalidInput naming
/// the offending monomial when some y^j with p | j has a nonzero coefficient,
/// when p is constant, or when the degree exceeds 6.
void require_separable(const std::vector<std::int64_t>& coefficients, std::int64_t p);

/// Smallest j < prefix length with chi(t^j h) != 1, or -1 when chi vanishes on
/// (h). chi only sees the prefix, so the scan over j is complete.
std::int64_t ideal_witness_degree(const Character& chi, const GroupElement& h);

/// nu(A cap (A - x) cap (A - y)) for the arc A = [lo, hi) of R/Z.
double triple_intersection(double lo, double hi, double x, double y);

}  // namespace ergo
