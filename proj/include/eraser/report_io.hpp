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
 * Plot-ready CSV / JSON tables.
 *
 * Every numeric field is printed with 12 significant digits and the JSON
 * emitter reuses the exact CSV text of each number, so both formats carry
 * identical values. Not-applicable metrics are "NA" in CSV and null in JSON.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eraser/causal_info.hpp"
#include "eraser/experiments.hpp"

namespace eraser {

enum class Format { Csv, Json };

struct ReportRow {
    double theta = 0.0;
    double phi = 0.0;
    double gamma = 0.0;
    std::string branch;
    std::optional<double> ei_bits;
    std::optional<double> determinism;
    std::optional<double> degeneracy;
    double k_sigma = 0.0;
};

/// Header of report and sweep tables, in column order.
inline const std::vector<std::string> kReportColumns = {
    "theta_rad", "phi_rad",     "gamma_rad",  "branch",
    "ei_bits",   "determinism", "degeneracy", "k_sigma"};

/// Header of the comparison table: a model column, the report columns, and
/// the emergence delta.
inline const std::vector<std::string> kComparisonColumns = {
    "model",   "theta_rad",   "phi_rad",    "gamma_rad", "branch",
    "ei_bits", "determinism", "degeneracy", "k_sigma"};

/// "%.12g", with negative zero printed as 0.
std::string format_number(double value);

ReportRow make_row(const CausalReport &report, const ScenarioParams &params,
                   const std::string &branch_label, double k_sigma);
ReportRow make_row(const SweepRow &row);

std::string render_table(const std::vector<ReportRow> &rows, Format format,
                         const nlohmann::ordered_json &params);

struct ComparisonTable {
    ReportRow fine;
    ReportRow coarse;
    ReportRow classical_aggregate;
    EmergenceComparison summary;
};

std::string render_comparison(const ComparisonTable &table, Format format,
                              const nlohmann::ordered_json &params);

/// render_table followed by write_output.
void emit_report(const std::vector<ReportRow> &rows, Format format,
                 const nlohmann::ordered_json &params,
                 const std::optional<std::string> &output_path);

/// Writes `text` to `output_path`, or to standard output when absent.
/// Throws IoError if the file cannot be written.
void write_output(const std::string &text,
                  const std::optional<std::string> &output_path);

}  // namespace eraser
