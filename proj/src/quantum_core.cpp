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

#include "eraser/quantum_core.hpp"

#include <cmath>
#include <numbers>

namespace eraser {

std::string to_string(CavityConfig cavity) {
    switch (cavity) {
        case CavityConfig::Vacuum:
            return "VAC";
        case CavityConfig::C1:
            return "C1";
        case CavityConfig::C2:
            return "C2";
    }
    return "?";
}

std::string to_string(const BasisLabel &label) {
    return "(" + std::to_string(static_cast<int>(label.path)) + "," +
           to_string(label.cavity) + ")";
}

std::array<std::array<Complex, 2>, 2> EvolutionIsometry::gram() const {
    std::array<std::array<Complex, 2>, 2> g{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t r = 0; r < 4; ++r) {
                acc += std::conj(matrix_[r][i]) * matrix_[r][j];
            }
            g[i][j] = acc;
        }
    }
    return g;
}

EvolutionIsometry build_interferometer_isometry(double phi) {
    if (!std::isfinite(phi)) {
        throw InvalidParameter("phi must be finite");
    }
    const Complex e = std::polar(1.0, phi);
    const Complex i{0.0, 1.0};

    // Entry from port 1:
    //   1/2 [ -|1>(e|C1> + |C2>) + i|2>(e|C1> - |C2>) ]
    // Entry from port 2:
    //   1/2 [ i|1>(-e|C1> + |C2>) - |2>(e|C1> + |C2>) ]
    EvolutionIsometry::Matrix m{};
    m[0] = {-e * 0.5, -i * e * 0.5};
    m[1] = {Complex{-0.5, 0.0}, i * 0.5};
    m[2] = {i * e * 0.5, -e * 0.5};
    m[3] = {-i * 0.5, Complex{-0.5, 0.0}};
    return EvolutionIsometry(phi, m);
}

ComplexAmplitudeVector evolve(const EvolutionIsometry &iso,
                              const BasisLabel &prep) {
    if (!prep.is_preparation()) {
        throw DomainError("preparation label must have both cavities empty, got " +
                          to_string(prep));
    }
    std::vector<Complex> amps(kPostBasis.size());
    for (std::size_t r = 0; r < kPostBasis.size(); ++r) {
        amps[r] = iso.entry(r, prep.path);
    }
    return {{kPostBasis.begin(), kPostBasis.end()}, std::move(amps)};
}

double CavityObservable::alpha() const { return std::cos(theta_); }
double CavityObservable::beta() const { return std::sin(theta_); }

namespace {

void check_theta(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 ||
        theta > std::numbers::pi / 2) {
        throw InvalidParameter("theta must lie in [0, pi/2] radians, got " +
                               std::to_string(theta));
    }
}

}  // namespace

CavityObservable build_cavity_observable(double theta, double gamma) {
    check_theta(theta);
    if (!std::isfinite(gamma)) {
        throw InvalidParameter("gamma must be finite");
    }
    const double a = std::cos(theta);
    const double b = std::sin(theta);
    const Complex eg = std::polar(1.0, gamma);
    std::vector<CavityConfig> basis(kCavityBasis.begin(), kCavityBasis.end());
    CavityVector plus(basis, {Complex{a, 0.0}, eg * b});
    CavityVector minus(basis, {Complex{b, 0.0}, -eg * a});
    return CavityObservable(theta, gamma, std::move(plus), std::move(minus));
}

double which_way_knowledge(double theta) {
    check_theta(theta);
    return std::abs(std::cos(2.0 * theta));
}

MeasurementResult measure_cavities(const ComplexAmplitudeVector &state,
                                   const CavityObservable &obs,
                                   Outcome outcome) {
    if (state.size() != kPostBasis.size()) {
        throw DomainError("cavity measurement needs the 4-dim post-interferometer space");
    }
    for (const auto &label : state.basis()) {
        if (label.is_preparation()) {
            throw DomainError("cavity measurement on a preparation label " +
                              to_string(label));
        }
    }
    if (!state.is_normalized()) {
        throw ValidationError("state is not normalized");
    }

    const CavityVector &m =
        outcome == Outcome::Plus ? obs.m_plus() : obs.m_minus();
    const Complex m1 = m.amplitude(CavityConfig::C1);
    const Complex m2 = m.amplitude(CavityConfig::C2);

    std::vector<Complex> projected(state.size());
    double probability = 0.0;
    for (AtomPath path : {AtomPath::One, AtomPath::Two}) {
        const std::size_t i1 = state.index_of({path, CavityConfig::C1});
        const std::size_t i2 = state.index_of({path, CavityConfig::C2});
        const Complex overlap = std::conj(m1) * state[i1] + std::conj(m2) * state[i2];
        projected[i1] = m1 * overlap;
        projected[i2] = m2 * overlap;
        probability += std::norm(overlap);
    }

    if (probability < kStateTolerance) {
        throw ImpossibleOutcome("measurement outcome " +
                                std::to_string(static_cast<int>(outcome)) +
                                " has zero probability");
    }
    const double scale = 1.0 / std::sqrt(probability);
    for (auto &a : projected) {
        a *= scale;
    }
    return {probability,
            ComplexAmplitudeVector({state.basis().begin(), state.basis().end()},
                                   std::move(projected))};
}

DetectionProbabilities atomic_detection_probs(
    const ComplexAmplitudeVector &post_state) {
    if (!post_state.is_normalized()) {
        throw ValidationError("post-measurement state is not normalized");
    }
    DetectionProbabilities out{0.0, 0.0};
    for (std::size_t i = 0; i < post_state.size(); ++i) {
        const double w = std::norm(post_state[i]);
        if (post_state.basis()[i].path == AtomPath::One) {
            out.p_d1 += w;
        } else {
            out.p_d2 += w;
        }
    }
    return out;
}

}  // namespace eraser
