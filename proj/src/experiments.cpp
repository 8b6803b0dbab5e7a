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

#include "eraser/experiments.hpp"

#include <cmath>
#include <numbers>

namespace eraser {

namespace {

constexpr AtomPath kPaths[] = {AtomPath::One, AtomPath::Two};

int path_value(AtomPath p) { return static_cast<int>(p); }

StateLabel fine_label(AtomPath a, int c1, int c2) {
    return {"a" + std::to_string(path_value(a)) + "_c1" + std::to_string(c1) +
                "_c2" + std::to_string(c2),
            {{"a", path_value(a)}, {"c1", c1}, {"c2", c2}}};
}

StateLabel coarse_label(AtomPath a, int c) {
    return {"a" + std::to_string(path_value(a)) + "_c" + std::to_string(c),
            {{"a", path_value(a)}, {"c", c}}};
}

double detection_for(const DetectionProbabilities &d, AtomPath a) {
    return a == AtomPath::One ? d.p_d1 : d.p_d2;
}

}  // namespace

std::string to_string(Branch branch) {
    return branch == Branch::Fringes ? "fringes" : "anti-fringes";
}

Outcome outcome_of(Branch branch) {
    return branch == Branch::Fringes ? Outcome::Plus : Outcome::Minus;
}

void ScenarioParams::validate() const {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2) {
        throw InvalidParameter("theta must lie in [0, pi/2] radians");
    }
    if (!std::isfinite(gamma) || !std::isfinite(phi)) {
        throw InvalidParameter("gamma and phi must be finite");
    }
}

TransitionMatrix fine_grained_model(double phi) {
    const auto iso = build_interferometer_isometry(phi);
    // sigma_z: +1 <-> |C1> (c1=1), -1 <-> |C2> up to phase (c2=1).
    const auto sigma_z = build_cavity_observable(0.0, 0.0);

    std::vector<StateLabel> sources;
    for (AtomPath a : kPaths) {
        sources.push_back(fine_label(a, 0, 0));
    }
    std::vector<StateLabel> targets;
    for (AtomPath a : kPaths) {
        targets.push_back(fine_label(a, 1, 0));
        targets.push_back(fine_label(a, 0, 1));
    }

    std::vector<std::vector<double>> rows;
    for (AtomPath prep : kPaths) {
        const auto state = evolve(iso, {prep, CavityConfig::Vacuum});
        const auto c1 = measure_cavities(state, sigma_z, Outcome::Plus);
        const auto c2 = measure_cavities(state, sigma_z, Outcome::Minus);
        const auto d1 = atomic_detection_probs(c1.post_state);
        const auto d2 = atomic_detection_probs(c2.post_state);
        std::vector<double> row;
        for (AtomPath a : kPaths) {
            row.push_back(c1.probability * detection_for(d1, a));
            row.push_back(c2.probability * detection_for(d2, a));
        }
        rows.push_back(std::move(row));
    }
    return {std::move(sources), std::move(targets), std::move(rows)};
}

TransitionMatrix coarse_grained_model(const ScenarioParams &params,
                                      BranchMode mode) {
    params.validate();
    const auto iso = build_interferometer_isometry(params.phi);
    const auto obs = build_cavity_observable(params.theta, params.gamma);

    std::vector<StateLabel> sources;
    std::vector<StateLabel> targets;
    for (AtomPath a : kPaths) {
        sources.push_back(coarse_label(a, 0));
        targets.push_back(coarse_label(a, 1));
    }

    std::vector<std::vector<double>> rows;
    for (AtomPath prep : kPaths) {
        const auto state = evolve(iso, {prep, CavityConfig::Vacuum});
        std::vector<double> row(2, 0.0);
        if (mode == BranchMode::Conditioned) {
            const auto m = measure_cavities(state, obs, outcome_of(params.branch));
            const auto d = atomic_detection_probs(m.post_state);
            row = {d.p_d1, d.p_d2};
        } else {
            for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
                try {
                    const auto m = measure_cavities(state, obs, o);
                    const auto d = atomic_detection_probs(m.post_state);
                    row[0] += m.probability * d.p_d1;
                    row[1] += m.probability * d.p_d2;
                } catch (const ImpossibleOutcome &) {
                }
            }
        }
        rows.push_back(std::move(row));
    }
    return {std::move(sources), std::move(targets), std::move(rows)};
}

double ei_closed_form(const ScenarioParams &params) {
    params.validate();
    const double visibility =
        std::sin(2.0 * params.theta) * std::cos(params.phi + params.gamma);
    const double signed_v =
        params.branch == Branch::Fringes ? visibility : -visibility;
    return 1.0 - binary_entropy((1.0 + signed_v) / 2.0);
}

Partition cavity_merge_partition() {
    Partition p;
    for (AtomPath a : kPaths) {
        p.sources.macro_of.emplace(fine_label(a, 0, 0).name, coarse_label(a, 0));
        p.targets.macro_of.emplace(fine_label(a, 1, 0).name, coarse_label(a, 1));
        p.targets.macro_of.emplace(fine_label(a, 0, 1).name, coarse_label(a, 1));
    }
    return p;
}

std::vector<double> theta_grid(std::size_t steps, double theta_max) {
    if (!std::isfinite(theta_max) || theta_max < 0.0 ||
        theta_max > std::numbers::pi / 2) {
        throw InvalidParameter("theta_max must lie in [0, pi/2] radians");
    }
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = steps == 1 ? 0.0
                             : theta_max * static_cast<double>(i) /
                                   static_cast<double>(steps - 1);
    }
    if (steps > 1) {
        grid.back() = theta_max;
    }
    return grid;
}

std::vector<double> default_theta_grid() {
    return theta_grid(181, std::numbers::pi / 2);
}

std::vector<double> default_phi_list() {
    constexpr double pi = std::numbers::pi;
    return {0.0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
}

std::vector<SweepRow> sweep_ei(const std::vector<double> &theta_grid,
                               const std::vector<double> &phi_list,
                               double gamma, Branch branch, BranchMode mode) {
    std::vector<SweepRow> rows;
    rows.reserve(theta_grid.size() * phi_list.size());
    for (double theta : theta_grid) {
        const double k = which_way_knowledge(theta);
        for (double phi : phi_list) {
            SweepRow row{theta, phi, gamma, branch, std::nullopt, k};
            try {
                const auto tpm =
                    coarse_grained_model({theta, gamma, phi, branch}, mode);
                const auto report = effective_information(tpm);
                row.metrics = SweepMetrics{report.effective_information,
                                           report.ei_per_state.front(),
                                           report.determinism,
                                           report.degeneracy};
            } catch (const ImpossibleOutcome &) {
            }
            rows.push_back(row);
        }
    }
    return rows;
}

EmergenceComparison emergence_comparison(double phi,
                                         const ScenarioParams &params) {
    if (params.phi != phi) {
        throw InvalidParameter("scenario phi differs from the comparison phi");
    }
    const auto fine = fine_grained_model(phi);
    const double ei_fine = effective_information(fine).effective_information;
    const double ei_coarse =
        effective_information(coarse_grained_model(params)).effective_information;
    const double ei_aggregate =
        effective_information(coarse_grain(fine, cavity_merge_partition()))
            .effective_information;
    return {ei_fine, ei_coarse, ei_aggregate, ei_coarse - ei_fine};
}

}  // namespace eraser
