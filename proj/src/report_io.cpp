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

#include "eraser/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace eraser {

namespace {

std::string optional_text(const std::optional<double> &v) {
    return v ? format_number(*v) : std::string("NA");
}

/// JSON value carrying exactly the digits printed in CSV.
nlohmann::ordered_json json_number(double value) {
    const std::string text = format_number(value);
    const double parsed = std::strtod(text.c_str(), nullptr);
    if (std::isfinite(parsed) && parsed == std::trunc(parsed) &&
        std::abs(parsed) < 1e15) {
        return static_cast<std::int64_t>(parsed);
    }
    if (!std::isfinite(parsed)) {
        return text;
    }
    return parsed;
}

nlohmann::ordered_json json_optional(const std::optional<double> &v) {
    return v ? json_number(*v) : nlohmann::ordered_json(nullptr);
}

void append_csv_fields(std::ostringstream &out, const ReportRow &r) {
    out << format_number(r.theta) << ',' << format_number(r.phi) << ','
        << format_number(r.gamma) << ',' << r.branch << ','
        << optional_text(r.ei_bits) << ',' << optional_text(r.determinism)
        << ',' << optional_text(r.degeneracy) << ',' << format_number(r.k_sigma);
}

void fill_json_fields(nlohmann::ordered_json &obj, const ReportRow &r) {
    obj["theta_rad"] = json_number(r.theta);
    obj["phi_rad"] = json_number(r.phi);
    obj["gamma_rad"] = json_number(r.gamma);
    obj["branch"] = r.branch;
    obj["ei_bits"] = json_optional(r.ei_bits);
    obj["determinism"] = json_optional(r.determinism);
    obj["degeneracy"] = json_optional(r.degeneracy);
    obj["k_sigma"] = json_number(r.k_sigma);
}

std::string join(const std::vector<std::string> &cols) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    return out;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    if (std::isnan(value)) {
        return "NA";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

ReportRow make_row(const CausalReport &report, const ScenarioParams &params,
                   const std::string &branch_label, double k_sigma) {
    return {params.theta,       params.phi,         params.gamma,
            branch_label,       report.effective_information,
            report.determinism, report.degeneracy,  k_sigma};
}

ReportRow make_row(const SweepRow &row) {
    ReportRow out{row.theta, row.phi, row.gamma, to_string(row.branch),
                  std::nullopt, std::nullopt, std::nullopt, row.k_sigma};
    if (row.metrics) {
        out.ei_bits = row.metrics->ei;
        out.determinism = row.metrics->determinism;
        out.degeneracy = row.metrics->degeneracy;
    }
    return out;
}

std::string render_table(const std::vector<ReportRow> &rows, Format format,
                         const nlohmann::ordered_json &params) {
    if (format == Format::Csv) {
        std::ostringstream out;
        out << join(kReportColumns) << '\n';
        for (const auto &r : rows) {
            append_csv_fields(out, r);
            out << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json obj;
        fill_json_fields(obj, r);
        doc["rows"].push_back(std::move(obj));
    }
    doc["params"] = params;
    return doc.dump(2) + "\n";
}

std::string render_comparison(const ComparisonTable &table, Format format,
                              const nlohmann::ordered_json &params) {
    const std::pair<const char *, const ReportRow *> models[] = {
        {"fine", &table.fine},
        {"coarse", &table.coarse},
        {"classical_aggregate", &table.classical_aggregate},
    };
    if (format == Format::Csv) {
        std::ostringstream out;
        out << join(kComparisonColumns) << '\n';
        for (const auto &[name, row] : models) {
            out << name << ',';
            append_csv_fields(out, *row);
            out << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &[name, row] : models) {
        nlohmann::ordered_json obj;
        obj["model"] = name;
        fill_json_fields(obj, *row);
        doc["rows"].push_back(std::move(obj));
    }
    nlohmann::ordered_json summary;
    summary["ei_fine"] = json_number(table.summary.ei_fine);
    summary["ei_coarse"] = json_number(table.summary.ei_coarse);
    summary["ei_classical_aggregate"] =
        json_number(table.summary.ei_classical_aggregate);
    summary["delta"] = json_number(table.summary.delta);
    summary["emergence"] = table.summary.emergent();
    doc["comparison"] = std::move(summary);
    doc["params"] = params;
    return doc.dump(2) + "\n";
}

void emit_report(const std::vector<ReportRow> &rows, Format format,
                 const nlohmann::ordered_json &params,
                 const std::optional<std::string> &output_path) {
    write_output(render_table(rows, format, params), output_path);
}

void write_output(const std::string &text,
                  const std::optional<std::string> &output_path) {
    if (!output_path) {
        std::cout << text << std::flush;
        if (!std::cout) {
            throw IoError("failed to write to standard output");
        }
        return;
    }
    std::ofstream file(*output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + *output_path + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + *output_path + "'");
    }
}

}  // namespace eraser
