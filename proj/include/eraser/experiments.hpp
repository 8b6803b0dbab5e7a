// Copyright 2026 The eraser-emergence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Causal models of the two-cavity interferometer built from quantum
 * interventions: the fine-grained model (sigma_z measurement, cavity
 * variables c1 and c2 kept separately) and the coarse-grained model
 * (general cavity observable, single cavity variable c), plus the theta/phi
 * sweeps and the fine-versus-coarse comparison.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eraser/causal_info.hpp"
#include "eraser/quantum_core.hpp"

namespace eraser {

enum class Branch : int { Fringes = +1, AntiFringes = -1 };

std::string to_string(Branch branch);
Outcome outcome_of(Branch branch);

/// How the coarse model treats the two outcomes of the cavity observable.
enum class BranchMode {
    Conditioned,  // renormalize inside the selected branch
    Averaged,     // mix both branches, no post-selection
};

struct ScenarioParams {
    double theta = 0.0;
    double gamma = 0.0;
    double phi = 0.0;
    Branch branch = Branch::Fringes;

    /// Throws InvalidParameter unless theta is in [0, pi/2] and all finite.
    void validate() const;
};

/// Source states (a, c1=0, c2=0) and targets (a, c1, c2) with c1 + c2 = 1,
/// obtained by measuring sigma_z on the cavities.
TransitionMatrix fine_grained_model(double phi);

/// Sources (a, c=0), targets (a, c=1). In Conditioned mode each row is the
/// detection distribution given the selected outcome; ImpossibleOutcome is
/// propagated when the branch cannot occur for some preparation.
TransitionMatrix coarse_grained_model(
    const ScenarioParams &params, BranchMode mode = BranchMode::Conditioned);

/// 1 - H2((1 + sin 2theta cos(phi + gamma)) / 2).
double ei_closed_form(const ScenarioParams &params);

/// Merges (c1, c2) into c = c1 + c2 on both axes of the fine model.
Partition cavity_merge_partition();

struct SweepMetrics {
    double ei;           // EI of the coarse model
    double ei_path_one;  // Ei(s0 = (a=1, c=0))
    double determinism;
    double degeneracy;
};

struct SweepRow {
    double theta;
    double phi;
    double gamma;
    Branch branch;
    std::optional<SweepMetrics> metrics;  // empty: branch not applicable
    double k_sigma;
};

/// Rows ordered by theta, then by phi.
std::vector<SweepRow> sweep_ei(const std::vector<double> &theta_grid,
                               const std::vector<double> &phi_list,
                               double gamma, Branch branch,
                               BranchMode mode = BranchMode::Conditioned);

/// `steps` evenly spaced points on [0, theta_max]; a single step yields {0}.
std::vector<double> theta_grid(std::size_t steps, double theta_max);

/// 181 points on [0, pi/2].
std::vector<double> default_theta_grid();

/// {0, pi/8, pi/4, 3pi/8, pi/2}.
std::vector<double> default_phi_list();

struct EmergenceComparison {
    double ei_fine;
    double ei_coarse;
    double ei_classical_aggregate;
    double delta;  // ei_coarse - ei_fine

    [[nodiscard]] bool emergent() const { return delta > 0.0; }
};

/// `params.phi` must equal `phi`.
EmergenceComparison emergence_comparison(double phi,
                                         const ScenarioParams &params);

}  // namespace eraser
