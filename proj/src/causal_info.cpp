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

#include "eraser/causal_info.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace eraser {

namespace {

void check_distinct(const std::vector<StateLabel> &states, const char *axis) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (states[i].name == states[j].name) {
                throw ValidationError(std::string("duplicate ") + axis +
                                      " state '" + states[i].name + "'");
            }
        }
    }
}

void check_distribution(std::span<const double> p, const char *what) {
    double total = 0.0;
    for (double x : p) {
        if (!std::isfinite(x) || x < 0.0 || x > 1.0 + kStochasticTolerance) {
            throw ValidationError(std::string(what) +
                                  " has an entry outside [0, 1]");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kStochasticTolerance) {
        throw ValidationError(std::string(what) + " does not sum to 1");
    }
}

std::vector<double> uniform(std::size_t n) {
    return std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
}

std::size_t find_by_name(const std::vector<StateLabel> &states,
                         const std::string &name, const char *axis) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].name == name) {
            return i;
        }
    }
    throw LookupError(std::string("unknown ") + axis + " state '" + name + "'");
}

double log2_size(const TransitionMatrix &tpm) {
    if (tpm.num_targets() < 2) {
        throw DegenerateModel("at least two target states are required");
    }
    return std::log2(static_cast<double>(tpm.num_targets()));
}

/// Macro labels in order of first appearance plus the micro -> macro index.
std::pair<std::vector<StateLabel>, std::vector<std::size_t>> resolve_axis(
    const std::vector<StateLabel> &micro, const AxisPartition &part,
    const char *axis) {
    std::vector<StateLabel> macro;
    std::vector<std::size_t> index(micro.size());
    for (std::size_t i = 0; i < micro.size(); ++i) {
        const auto it = part.macro_of.find(micro[i].name);
        if (it == part.macro_of.end()) {
            throw ValidationError(std::string("partition does not map ") +
                                  axis + " state '" + micro[i].name + "'");
        }
        const StateLabel &target = it->second;
        std::size_t k = 0;
        for (; k < macro.size(); ++k) {
            if (macro[k].name == target.name) {
                if (!(macro[k] == target)) {
                    throw ValidationError(
                        std::string("conflicting macro labels named '") +
                        target.name + "'");
                }
                break;
            }
        }
        if (k == macro.size()) {
            macro.push_back(target);
        }
        index[i] = k;
    }
    return {std::move(macro), std::move(index)};
}

}  // namespace

TransitionMatrix::TransitionMatrix(std::vector<StateLabel> sources,
                                   std::vector<StateLabel> targets,
                                   std::vector<std::vector<double>> rows,
                                   std::vector<double> do_distribution)
    : sources_(std::move(sources)),
      targets_(std::move(targets)),
      rows_(std::move(rows)),
      do_(std::move(do_distribution)) {
    if (sources_.empty() || targets_.empty()) {
        throw ValidationError("TPM needs at least one source and one target");
    }
    check_distinct(sources_, "source");
    check_distinct(targets_, "target");
    if (rows_.size() != sources_.size()) {
        throw ValidationError("row count does not match source states");
    }
    for (const auto &r : rows_) {
        if (r.size() != targets_.size()) {
            throw ValidationError("row length does not match target states");
        }
        check_distribution(r, "TPM row");
    }
    if (do_.size() != sources_.size()) {
        throw ValidationError("do-distribution length does not match sources");
    }
    check_distribution(do_, "do-distribution");
}

TransitionMatrix::TransitionMatrix(std::vector<StateLabel> sources,
                                   std::vector<StateLabel> targets,
                                   std::vector<std::vector<double>> rows)
    : TransitionMatrix(sources, std::move(targets), std::move(rows),
                       uniform(sources.size())) {}

std::size_t TransitionMatrix::source_index(const std::string &name) const {
    return find_by_name(sources_, name, "source");
}

std::size_t TransitionMatrix::target_index(const std::string &name) const {
    return find_by_name(targets_, name, "target");
}

std::vector<double> TransitionMatrix::marginal_final() const {
    std::vector<double> out(targets_.size(), 0.0);
    for (std::size_t s = 0; s < rows_.size(); ++s) {
        for (std::size_t t = 0; t < out.size(); ++t) {
            out[t] += do_[s] * rows_[s][t];
        }
    }
    return out;
}

Partition Partition::identity(const TransitionMatrix &tpm) {
    Partition p;
    for (const auto &s : tpm.sources()) {
        p.sources.macro_of.emplace(s.name, s);
    }
    for (const auto &t : tpm.targets()) {
        p.targets.macro_of.emplace(t.name, t);
    }
    return p;
}

double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

double binary_entropy(double p) {
    const double q[2] = {p, 1.0 - p};
    return shannon_entropy(q);
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw ValidationError("KL divergence of distributions of different length");
    }
    check_distribution(p, "p");
    check_distribution(q, "q");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        if (q[i] == 0.0) {
            throw InfiniteDivergence("p has mass where q vanishes (index " +
                                     std::to_string(i) + ")");
        }
        d += p[i] * std::log2(p[i] / q[i]);
    }
    // Rounding can leave -1e-17 for identical inputs.
    return d < 0.0 ? 0.0 : d;
}

double effect_information(const TransitionMatrix &tpm,
                          const std::string &source_name) {
    const auto marginal = tpm.marginal_final();
    return kl_divergence(tpm.row(tpm.source_index(source_name)), marginal);
}

double effect_information(const TransitionMatrix &tpm,
                          const StateLabel &source) {
    const std::size_t i = tpm.source_index(source.name);
    if (!(tpm.sources()[i] == source)) {
        throw LookupError("source state '" + source.name +
                          "' has different variables in this TPM");
    }
    return kl_divergence(tpm.row(i), tpm.marginal_final());
}

double determinism_coefficient(const TransitionMatrix &tpm) {
    const double scale = log2_size(tpm);
    double mean_row_entropy = 0.0;
    for (std::size_t s = 0; s < tpm.num_sources(); ++s) {
        mean_row_entropy += tpm.do_distribution()[s] * shannon_entropy(tpm.row(s));
    }
    return 1.0 - mean_row_entropy / scale;
}

double degeneracy_coefficient(const TransitionMatrix &tpm) {
    const double scale = log2_size(tpm);
    return 1.0 - shannon_entropy(tpm.marginal_final()) / scale;
}

CausalReport effective_information(const TransitionMatrix &tpm) {
    CausalReport report;
    report.marginal_final = tpm.marginal_final();
    report.ei_per_state.reserve(tpm.num_sources());
    for (std::size_t s = 0; s < tpm.num_sources(); ++s) {
        const double w = tpm.do_distribution()[s];
        double ei;
        try {
            ei = kl_divergence(tpm.row(s), report.marginal_final);
        } catch (const InfiniteDivergence &) {
            // Only reachable for a source never intervened upon.
            ei = std::numeric_limits<double>::infinity();
        }
        report.ei_per_state.push_back(ei);
        if (w > 0.0) {
            report.effective_information += w * ei;
        }
    }
    if (tpm.num_targets() >= 2) {
        report.determinism = determinism_coefficient(tpm);
        report.degeneracy = degeneracy_coefficient(tpm);
    } else {
        report.determinism = std::numeric_limits<double>::quiet_NaN();
        report.degeneracy = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

TransitionMatrix coarse_grain(const TransitionMatrix &tpm,
                              const Partition &partition) {
    auto [macro_sources, source_of] =
        resolve_axis(tpm.sources(), partition.sources, "source");
    auto [macro_targets, target_of] =
        resolve_axis(tpm.targets(), partition.targets, "target");

    std::vector<double> macro_do(macro_sources.size(), 0.0);
    std::vector<std::vector<double>> rows(
        macro_sources.size(), std::vector<double>(macro_targets.size(), 0.0));
    for (std::size_t s = 0; s < tpm.num_sources(); ++s) {
        const double w = tpm.do_distribution()[s];
        macro_do[source_of[s]] += w;
        for (std::size_t t = 0; t < tpm.num_targets(); ++t) {
            rows[source_of[s]][target_of[t]] += w * tpm.at(s, t);
        }
    }
    for (std::size_t m = 0; m < rows.size(); ++m) {
        if (macro_do[m] <= 0.0) {
            throw UndefinedRow("macro source '" + macro_sources[m].name +
                               "' has zero intervention weight");
        }
        for (auto &x : rows[m]) {
            x /= macro_do[m];
        }
    }
    return TransitionMatrix(std::move(macro_sources), std::move(macro_targets),
                            std::move(rows), std::move(macro_do));
}

}  // namespace eraser
