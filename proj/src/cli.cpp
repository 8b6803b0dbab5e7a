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

#include "eraser/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>

namespace eraser::cli {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
// Typed angles such as 1.5707963268 land just outside [0, pi/2].
constexpr double kAngleSlack = 1e-9;

double checked_theta(double value, const char *flag) {
    if (!std::isfinite(value) || value < -kAngleSlack ||
        value > kHalfPi + kAngleSlack) {
        throw UsageError(std::string(flag) +
                         " must lie in [0, pi/2] radians (got " +
                         std::to_string(value) + ")");
    }
    return std::clamp(value, 0.0, kHalfPi);
}

double checked_finite(double value, const char *flag) {
    if (!std::isfinite(value)) {
        throw UsageError(std::string(flag) + " must be finite");
    }
    return value;
}

nlohmann::ordered_json params_json(const RunConfig &c) {
    nlohmann::ordered_json p;
    p["command"] = to_string(c.command);
    p["theta_rad"] = c.params.theta;
    p["gamma_rad"] = c.params.gamma;
    p["phi_rad"] = c.params.phi;
    p["branch"] = to_string(c.params.branch);
    p["averaged_branches"] = c.averaged_branches;
    if (c.command == Command::Sweep || c.command == Command::KCurve) {
        p["theta_steps"] = c.theta_steps;
        p["theta_max_rad"] = c.theta_max;
    }
    if (c.command == Command::Sweep) {
        p["phi_list_rad"] = c.phi_list;
    }
    return p;
}

BranchMode mode_of(const RunConfig &c) {
    return c.averaged_branches ? BranchMode::Averaged : BranchMode::Conditioned;
}

std::string branch_label(const RunConfig &c) {
    return c.averaged_branches ? "averaged" : to_string(c.params.branch);
}

std::vector<ReportRow> sweep_rows(const RunConfig &c,
                                  const std::vector<double> &phis) {
    const auto grid = theta_grid(c.theta_steps, c.theta_max);
    std::vector<ReportRow> rows;
    for (const auto &r :
         sweep_ei(grid, phis, c.params.gamma, c.params.branch, mode_of(c))) {
        auto row = make_row(r);
        row.branch = branch_label(c);
        rows.push_back(std::move(row));
    }
    return rows;
}

ReportRow fine_row(const RunConfig &c) {
    // The fine-grained model measures sigma_z (theta = 0); both outcomes
    // are kept as distinct target states.
    const auto report = effective_information(fine_grained_model(c.params.phi));
    return make_row(report, {0.0, c.params.gamma, c.params.phi, c.params.branch},
                    "both", which_way_knowledge(0.0));
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
        case Command::Fine:
            return "fine";
        case Command::Coarse:
            return "coarse";
        case Command::Sweep:
            return "sweep";
        case Command::KCurve:
            return "kcurve";
        case Command::Compare:
            return "compare";
    }
    return "?";
}

RunConfig parse_args(const std::vector<std::string> &args) {
    CLI::App app{
        "Causal-emergence analysis of a Mach-Zehnder interferometer with two "
        "which-path cavities.\nAll angles are in radians.",
        "eraser"};
    app.require_subcommand(1);

    double theta = 0.0;
    double gamma = 0.0;
    double phi = 0.0;
    std::string branch = "fringes";
    std::size_t theta_steps = 181;
    double theta_max = kHalfPi;
    std::vector<double> phi_list;
    std::string out;
    std::string format = "csv";
    bool averaged = false;

    app.add_option("--theta", theta, "Cavity observable angle theta in [0, pi/2] (rad)");
    app.add_option("--gamma", gamma, "Relative phase gamma of the eigenvectors (rad)");
    app.add_option("--phi", phi, "Interferometer phase phi (rad)");
    app.add_option("--branch", branch, "Post-selected outcome")
        ->check(CLI::IsMember({"fringes", "anti-fringes"}));
    app.add_option("--theta-steps", theta_steps,
                   "Number of theta grid points for sweep/kcurve (default 181)");
    app.add_option("--theta-max", theta_max,
                   "Upper end of the theta grid in (0, pi/2] (rad)");
    auto *phi_list_opt =
        app.add_option("--phi-list", phi_list,
                       "Comma-separated phi values for sweep (rad); default "
                       "0,pi/8,pi/4,3pi/8,pi/2")
            ->delimiter(',');
    app.add_option("--out", out, "Output file (default: standard output)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--averaged-branches", averaged,
                 "Mix both measurement outcomes instead of post-selecting one");

    const std::pair<const char *, const char *> commands[] = {
        {"fine", "Fine-grained model: sigma_z on the cavities, c1 and c2 kept"},
        {"coarse", "Coarse-grained model at one (theta, gamma, phi, branch)"},
        {"sweep", "EI over a theta grid for each phi in --phi-list"},
        {"kcurve", "Which-way knowledge K and EI over a theta grid at --phi"},
        {"compare", "Fine vs coarse vs classical aggregate EI"},
    };
    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp &) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    const std::string selected = app.get_subcommands().front()->get_name();
    if (selected == "fine") config.command = Command::Fine;
    else if (selected == "coarse") config.command = Command::Coarse;
    else if (selected == "sweep") config.command = Command::Sweep;
    else if (selected == "kcurve") config.command = Command::KCurve;
    else config.command = Command::Compare;

    config.params.theta = checked_theta(theta, "--theta");
    config.params.gamma = checked_finite(gamma, "--gamma");
    config.params.phi = checked_finite(phi, "--phi");
    config.params.branch =
        branch == "fringes" ? Branch::Fringes : Branch::AntiFringes;
    config.theta_steps = theta_steps;
    config.theta_max = checked_theta(theta_max, "--theta-max");
    if (config.theta_max <= 0.0) {
        throw UsageError("--theta-max must be positive");
    }
    if (phi_list_opt->count() > 0) {
        config.phi_list.clear();
        for (double p : phi_list) {
            config.phi_list.push_back(checked_finite(p, "--phi-list"));
        }
    }
    if (!out.empty()) {
        config.output_path = out;
    }
    config.format = format == "json" ? Format::Json : Format::Csv;
    config.averaged_branches = averaged;
    return config;
}

std::string execute(const RunConfig &c) {
    const auto params = params_json(c);
    switch (c.command) {
        case Command::Fine:
            return render_table({fine_row(c)}, c.format, params);
        case Command::Coarse: {
            const auto report =
                effective_information(coarse_grained_model(c.params, mode_of(c)));
            return render_table(
                {make_row(report, c.params, branch_label(c),
                          which_way_knowledge(c.params.theta))},
                c.format, params);
        }
        case Command::Sweep:
            return render_table(sweep_rows(c, c.phi_list), c.format, params);
        case Command::KCurve:
            return render_table(sweep_rows(c, {c.params.phi}), c.format, params);
        case Command::Compare: {
            const auto summary = emergence_comparison(c.params.phi, c.params);
            ComparisonTable table{
                fine_row(c),
                make_row(effective_information(coarse_grained_model(c.params)),
                         c.params, to_string(c.params.branch),
                         which_way_knowledge(c.params.theta)),
                make_row(effective_information(coarse_grain(
                             fine_grained_model(c.params.phi),
                             cavity_merge_partition())),
                         {0.0, c.params.gamma, c.params.phi, c.params.branch},
                         "both", which_way_knowledge(0.0)),
                summary};
            return render_comparison(table, c.format, params);
        }
    }
    return {};
}

int run(const std::vector<std::string> &args, std::ostream &err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested &h) {
        write_output(h.what(), std::nullopt);
        return kExitOk;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }
    try {
        write_output(execute(config), config.output_path);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace eraser::cli
