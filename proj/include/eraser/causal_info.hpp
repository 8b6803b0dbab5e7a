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
 * Classical causal models over finite state spaces: transition probability
 * matrices (TPMs) under interventions, and the information measures used to
 * rank them (effect information, effective information, determinism and
 * degeneracy coefficients). All logarithms are base 2.
 */

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eraser/errors.hpp"

namespace eraser {

/// Tolerance for row sums and distribution sums.
inline constexpr double kStochasticTolerance = 1e-12;

struct StateLabel {
    std::string name;
    std::vector<std::pair<std::string, int>> variables;

    friend bool operator==(const StateLabel &, const StateLabel &) = default;
};

/**
 * Row-stochastic p(s_F | do(s_0)) together with the intervention
 * distribution p(do(s_0)). Source and target axes are independent state
 * spaces. Entries outside [0, 1], rows or do-weights not summing to one
 * within kStochasticTolerance are rejected rather than renormalized.
 */
class TransitionMatrix {
   public:
    TransitionMatrix(std::vector<StateLabel> sources,
                     std::vector<StateLabel> targets,
                     std::vector<std::vector<double>> rows,
                     std::vector<double> do_distribution);

    /// Same as above with a uniform intervention distribution.
    TransitionMatrix(std::vector<StateLabel> sources,
                     std::vector<StateLabel> targets,
                     std::vector<std::vector<double>> rows);

    [[nodiscard]] std::size_t num_sources() const { return sources_.size(); }
    [[nodiscard]] std::size_t num_targets() const { return targets_.size(); }
    [[nodiscard]] const std::vector<StateLabel> &sources() const {
        return sources_;
    }
    [[nodiscard]] const std::vector<StateLabel> &targets() const {
        return targets_;
    }
    [[nodiscard]] std::span<const double> row(std::size_t source) const {
        return rows_.at(source);
    }
    [[nodiscard]] double at(std::size_t source, std::size_t target) const {
        return rows_.at(source).at(target);
    }
    [[nodiscard]] std::span<const double> do_distribution() const {
        return do_;
    }

    /// Throws LookupError for an unknown name.
    [[nodiscard]] std::size_t source_index(const std::string &name) const;
    [[nodiscard]] std::size_t target_index(const std::string &name) const;

    /// p(s_F) = sum_{s_0} p(s_F | do(s_0)) p(do(s_0)).
    [[nodiscard]] std::vector<double> marginal_final() const;

   private:
    std::vector<StateLabel> sources_;
    std::vector<StateLabel> targets_;
    std::vector<std::vector<double>> rows_;
    std::vector<double> do_;
};

struct CausalReport {
    std::vector<double> ei_per_state;  // bits, one per source state
    double effective_information = 0.0;
    double determinism = 0.0;
    double degeneracy = 0.0;
    std::vector<double> marginal_final;
};

/// Micro -> macro assignment for one axis, keyed by micro state name.
struct AxisPartition {
    std::map<std::string, StateLabel> macro_of;
};

struct Partition {
    AxisPartition sources;
    AxisPartition targets;

    /// Every state mapped to itself.
    static Partition identity(const TransitionMatrix &tpm);
};

/// Shannon entropy in bits with 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);

/// Binary entropy H2(p) in bits.
double binary_entropy(double p);

/// D_KL(p || q) in bits. Both arguments must be distributions of equal
/// length; throws InfiniteDivergence when p has mass outside supp(q).
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// Ei(s0) = D_KL(p(s_F | do(s0)) || p(s_F)).
double effect_information(const TransitionMatrix &tpm,
                          const std::string &source_name);
double effect_information(const TransitionMatrix &tpm,
                          const StateLabel &source);

/// 1 - <H(row)> / log2 n, rows averaged over the intervention distribution.
double determinism_coefficient(const TransitionMatrix &tpm);

/// 1 - H(p(s_F)) / log2 n.
double degeneracy_coefficient(const TransitionMatrix &tpm);

/// Ei per source, EI = sum p(do) Ei, and both coefficients.
CausalReport effective_information(const TransitionMatrix &tpm);

/**
 * Aggregates micro states into macro states.
 *
 * Macro do-weight is the sum of member do-weights; a macro row is the
 * do-weighted mean of member rows with target columns summed per macro
 * target. Macro states are ordered by first appearance along the micro axis.
 */
TransitionMatrix coarse_grain(const TransitionMatrix &tpm,
                              const Partition &partition);

}  // namespace eraser
