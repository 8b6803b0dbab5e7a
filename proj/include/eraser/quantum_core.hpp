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
 * Pure-state model of an atomic Mach-Zehnder interferometer whose two arms
 * each carry a resonant cavity acting as a which-path detector.
 *
 * The atom enters through port 1 or 2 with both cavities empty. After the
 * second beam splitter the joint state lives in the 4-dimensional space
 * spanned by (exit port) x (which cavity holds the single excitation).
 * A two-outcome observable on the one-excitation cavity subspace then either
 * reveals the path (theta = 0, pi/2) or erases it (theta = pi/4).
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eraser/errors.hpp"

namespace eraser {

using Complex = std::complex<double>;

/// Tolerance used for normalization, orthogonality and impossible outcomes.
inline constexpr double kStateTolerance = 1e-12;

enum class AtomPath : int { One = 1, Two = 2 };

/// Photon occupation of (C1, C2), restricted to at most one excitation.
enum class CavityConfig : int {
    Vacuum,  // (0, 0)
    C1,      // (1, 0)
    C2,      // (0, 1)
};

struct BasisLabel {
    AtomPath path;
    CavityConfig cavity;

    friend bool operator==(const BasisLabel &, const BasisLabel &) = default;

    [[nodiscard]] bool is_preparation() const {
        return cavity == CavityConfig::Vacuum;
    }
    [[nodiscard]] int c1() const { return cavity == CavityConfig::C1 ? 1 : 0; }
    [[nodiscard]] int c2() const { return cavity == CavityConfig::C2 ? 1 : 0; }
};

std::string to_string(const BasisLabel &label);
std::string to_string(CavityConfig cavity);

/// Ordered post-interferometer basis [(1,C1), (1,C2), (2,C1), (2,C2)].
inline constexpr std::array<BasisLabel, 4> kPostBasis = {{
    {AtomPath::One, CavityConfig::C1},
    {AtomPath::One, CavityConfig::C2},
    {AtomPath::Two, CavityConfig::C1},
    {AtomPath::Two, CavityConfig::C2},
}};

/// Ordered basis of the one-excitation cavity subspace.
inline constexpr std::array<CavityConfig, 2> kCavityBasis = {
    CavityConfig::C1, CavityConfig::C2};

/**
 * Complex amplitudes over an ordered set of distinct labels.
 *
 * The object is immutable after construction. Normalization is not enforced
 * here; callers that need a physical state check `is_normalized()`.
 */
template <typename Label>
class AmplitudeVector {
   public:
    AmplitudeVector(std::vector<Label> basis, std::vector<Complex> amplitudes)
        : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
        if (basis_.size() != amplitudes_.size()) {
            throw ValidationError("basis and amplitude lengths differ");
        }
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            for (std::size_t j = i + 1; j < basis_.size(); ++j) {
                if (basis_[i] == basis_[j]) {
                    throw ValidationError("duplicate basis label");
                }
            }
        }
    }

    [[nodiscard]] std::size_t size() const { return basis_.size(); }
    [[nodiscard]] std::span<const Label> basis() const { return basis_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    [[nodiscard]] std::size_t index_of(const Label &label) const {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] == label) {
                return i;
            }
        }
        throw DomainError("label not in basis");
    }

    [[nodiscard]] Complex amplitude(const Label &label) const {
        return amplitudes_[index_of(label)];
    }

    [[nodiscard]] double norm_squared() const {
        double total = 0.0;
        for (const auto &a : amplitudes_) {
            total += std::norm(a);
        }
        return total;
    }

    [[nodiscard]] bool is_normalized(double tol = kStateTolerance) const {
        return std::abs(norm_squared() - 1.0) <= tol;
    }

    /// Same basis, every amplitude multiplied by `factor`.
    [[nodiscard]] AmplitudeVector scaled(Complex factor) const {
        std::vector<Complex> out(amplitudes_);
        for (auto &a : out) {
            a *= factor;
        }
        return {basis_, std::move(out)};
    }

   private:
    std::vector<Label> basis_;
    std::vector<Complex> amplitudes_;
};

using ComplexAmplitudeVector = AmplitudeVector<BasisLabel>;
using CavityVector = AmplitudeVector<CavityConfig>;

/// <a|b>, conjugate-linear in the first argument. Bases must match label for
/// label (same order).
template <typename Label>
Complex inner_product(const AmplitudeVector<Label> &a,
                      const AmplitudeVector<Label> &b) {
    if (a.size() != b.size()) {
        throw ValidationError("inner product of vectors on different bases");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.basis()[i] == b.basis()[i])) {
            throw ValidationError("inner product of vectors on different bases");
        }
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

/// Norm-preserving map from the preparation space {(1,VAC), (2,VAC)} onto the
/// post-interferometer space, columns ordered by preparation path and rows by
/// kPostBasis.
class EvolutionIsometry {
   public:
    using Matrix = std::array<std::array<Complex, 2>, 4>;

    [[nodiscard]] double phi() const { return phi_; }
    [[nodiscard]] const Matrix &matrix() const { return matrix_; }
    [[nodiscard]] Complex entry(std::size_t row, AtomPath prep) const {
        return matrix_[row][column_index(prep)];
    }

    /// adjoint(U) * U.
    [[nodiscard]] std::array<std::array<Complex, 2>, 2> gram() const;

    static std::size_t column_index(AtomPath prep) {
        return prep == AtomPath::One ? 0 : 1;
    }

   private:
    friend EvolutionIsometry build_interferometer_isometry(double phi);
    EvolutionIsometry(double phi, const Matrix &m) : phi_(phi), matrix_(m) {}

    double phi_;
    Matrix matrix_;
};

/// Eigenbasis of n.sigma on the one-excitation cavity subspace:
///   M+ =  cos(theta)|C1> + e^{i gamma} sin(theta)|C2>   (eigenvalue +1)
///   M- =  sin(theta)|C1> - e^{i gamma} cos(theta)|C2>   (eigenvalue -1)
class CavityObservable {
   public:
    [[nodiscard]] double theta() const { return theta_; }
    [[nodiscard]] double gamma() const { return gamma_; }
    [[nodiscard]] double alpha() const;
    [[nodiscard]] double beta() const;
    [[nodiscard]] const CavityVector &m_plus() const { return m_plus_; }
    [[nodiscard]] const CavityVector &m_minus() const { return m_minus_; }

   private:
    friend CavityObservable build_cavity_observable(double theta,
                                                    double gamma);
    CavityObservable(double theta, double gamma, CavityVector plus,
                     CavityVector minus)
        : theta_(theta),
          gamma_(gamma),
          m_plus_(std::move(plus)),
          m_minus_(std::move(minus)) {}

    double theta_;
    double gamma_;
    CavityVector m_plus_;
    CavityVector m_minus_;
};

/// Eigenvalue of the cavity observable; +1 selects fringes, -1 anti-fringes.
enum class Outcome : int { Plus = +1, Minus = -1 };

struct MeasurementResult {
    double probability;
    ComplexAmplitudeVector post_state;
};

struct DetectionProbabilities {
    double p_d1;
    double p_d2;
};

/// Throws InvalidParameter for non-finite phi.
EvolutionIsometry build_interferometer_isometry(double phi);

/// Image of a preparation label; throws DomainError unless the label has
/// both cavities empty.
ComplexAmplitudeVector evolve(const EvolutionIsometry &iso,
                              const BasisLabel &prep);

/// theta must lie in [0, pi/2] and gamma must be finite.
CavityObservable build_cavity_observable(double theta, double gamma);

/// |cos 2 theta|, the which-way knowledge carried by the observable.
double which_way_knowledge(double theta);

/**
 * Projects `state` onto 1_path (x) |M_outcome><M_outcome| and renormalizes.
 *
 * `state` must be a normalized vector over exactly the four labels of
 * kPostBasis (any order); the post-state keeps the input's basis order.
 * Throws ImpossibleOutcome when the branch probability is below
 * kStateTolerance.
 */
MeasurementResult measure_cavities(const ComplexAmplitudeVector &state,
                                   const CavityObservable &obs,
                                   Outcome outcome);

/// Probability of the atom exiting towards D1 / D2.
DetectionProbabilities atomic_detection_probs(
    const ComplexAmplitudeVector &post_state);

}  // namespace eraser
