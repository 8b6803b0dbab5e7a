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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "eraser/cli.hpp"

using namespace eraser;
using namespace eraser::cli;
using std::numbers::pi;

namespace {

std::vector<std::vector<std::string>> csv_cells(const std::string &text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        out.push_back(std::move(cells));
    }
    return out;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("parse_args examples") {
    const auto coarse = parse_args({"coarse", "--theta", "0.785398163", "--gamma",
                                    "0", "--phi", "0", "--branch", "fringes"});
    CHECK(coarse.command == Command::Coarse);
    CHECK(coarse.params.theta == doctest::Approx(pi / 4).epsilon(1e-9));
    CHECK(coarse.params.branch == Branch::Fringes);
    CHECK(coarse.format == Format::Csv);
    CHECK_FALSE(coarse.output_path.has_value());

    const auto sweep = parse_args(
        {"sweep", "--theta-steps", "181", "--phi-list", "0,0.392699,0.785398"});
    CHECK(sweep.command == Command::Sweep);
    CHECK(sweep.theta_steps == 181);
    CHECK(sweep.phi_list == std::vector<double>{0.0, 0.392699, 0.785398});

    CHECK_THROWS_AS(parse_args({"fine", "--theta", "9"}), UsageError);
}

TEST_CASE("parse_args defaults and errors") {
    const auto sweep = parse_args({"sweep"});
    CHECK(sweep.phi_list == default_phi_list());
    CHECK(sweep.theta_steps == 181);
    CHECK(sweep.theta_max == pi / 2);

    const auto anti = parse_args({"kcurve", "--branch", "anti-fringes", "--format",
                                  "json", "--out", "x.json", "--averaged-branches"});
    CHECK(anti.command == Command::KCurve);
    CHECK(anti.params.branch == Branch::AntiFringes);
    CHECK(anti.format == Format::Json);
    CHECK(anti.output_path == std::optional<std::string>("x.json"));
    CHECK(anti.averaged_branches);

    // Just above pi/2 from typing digits is accepted and clamped.
    CHECK(parse_args({"coarse", "--theta", "1.5707963268"}).params.theta == pi / 2);

    CHECK_THROWS_AS(parse_args({}), UsageError);
    CHECK_THROWS_AS(parse_args({"bogus"}), UsageError);
    CHECK_THROWS_AS(parse_args({"coarse", "--nope", "1"}), UsageError);
    CHECK_THROWS_AS(parse_args({"coarse", "--theta", "-0.1"}), UsageError);
    CHECK_THROWS_AS(parse_args({"coarse", "--theta", "abc"}), UsageError);
    CHECK_THROWS_AS(parse_args({"coarse", "--phi", "nan"}), UsageError);
    CHECK_THROWS_AS(parse_args({"coarse", "--branch", "both"}), UsageError);
    CHECK_THROWS_AS(parse_args({"sweep", "--phi-list", "0,abc"}), UsageError);
    CHECK_THROWS_AS(parse_args({"sweep", "--theta-max", "0"}), UsageError);
    CHECK_THROWS_AS(parse_args({"sweep", "--theta-steps", "-3"}), UsageError);
    CHECK_THROWS_AS(parse_args({"coarse", "--format", "xml"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--help"}), HelpRequested);
}

TEST_CASE("number formatting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.399123963306745) == "0.399123963307");
    CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("identity TPM report as CSV") {
    TransitionMatrix tpm({{"s0", {}}, {"s1", {}}}, {{"t0", {}}, {"t1", {}}},
                         {{1, 0}, {0, 1}});
    const auto row = make_row(effective_information(tpm),
                              {pi / 4, 0.0, 0.0, Branch::Fringes}, "fringes", 0.0);
    const auto cells = csv_cells(render_table({row}, Format::Csv, {}));
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == kReportColumns);
    CHECK(cells[1][4] == "1");
    CHECK(cells[1][5] == "1");
    CHECK(cells[1][6] == "0");
}

TEST_CASE("fine model as JSON") {
    const auto text = execute(parse_args({"fine", "--format", "json"}));
    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["ei_bits"] == 0);
    CHECK(doc["params"]["command"] == "fine");
    std::vector<std::string> keys;
    for (const auto &[k, v] : doc["rows"][0].items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    auto expected = kReportColumns;
    std::sort(expected.begin(), expected.end());
    CHECK(keys == expected);
}

TEST_CASE("empty sweep grid is header-only") {
    const auto text = execute(parse_args({"sweep", "--theta-steps", "0"}));
    CHECK(text == "theta_rad,phi_rad,gamma_rad,branch,ei_bits,determinism,"
                  "degeneracy,k_sigma\n");
    const auto doc =
        nlohmann::json::parse(execute(parse_args({"sweep", "--theta-steps", "0",
                                                  "--format", "json"})));
    CHECK(doc["rows"].empty());
}

TEST_CASE("not-applicable rows") {
    SweepRow na{0.3, 0.0, 0.0, Branch::Fringes, std::nullopt, 0.8};
    const auto cells = csv_cells(render_table({make_row(na)}, Format::Csv, {}));
    CHECK(cells[1][4] == "NA");
    CHECK(cells[1][5] == "NA");
    CHECK(cells[1][6] == "NA");
    CHECK(cells[1][7] == "0.8");
    const auto doc = nlohmann::json::parse(
        render_table({make_row(na)}, Format::Json, nlohmann::ordered_json::object()));
    CHECK(doc["rows"][0]["ei_bits"].is_null());
}

TEST_CASE("CSV and JSON carry identical numbers") {
    const std::vector<std::string> base{"sweep", "--theta-steps", "19",
                                        "--gamma", "0.2"};
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto cells = csv_cells(execute(parse_args(base)));
    const auto doc = nlohmann::json::parse(execute(parse_args(json_args)));
    REQUIRE(doc["rows"].size() + 1 == cells.size());
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        const auto &obj = doc["rows"][i];
        for (std::size_t c = 0; c < kReportColumns.size(); ++c) {
            const auto &field = obj[kReportColumns[c]];
            if (field.is_string()) {
                CHECK(field.get<std::string>() == cells[i + 1][c]);
            } else {
                CHECK(field.get<double>() == std::strtod(cells[i + 1][c].c_str(), nullptr));
            }
        }
    }
}

TEST_CASE("compare table") {
    const auto cells = csv_cells(execute(parse_args({"compare", "--theta", "0.785398163397"})));
    REQUIRE(cells.size() == 4);
    CHECK(cells[0] == kComparisonColumns);
    CHECK(cells[1][0] == "fine");
    CHECK(cells[1][5] == "0");
    CHECK(cells[2][0] == "coarse");
    CHECK(cells[2][5] == "1");
    CHECK(cells[3][0] == "classical_aggregate");
    CHECK(cells[3][5] == "0");

    const auto doc = nlohmann::json::parse(execute(
        parse_args({"compare", "--theta", "0.785398163397", "--format", "json"})));
    CHECK(doc["comparison"]["delta"] == 1);
    CHECK(doc["comparison"]["emergence"] == true);
}

TEST_CASE("averaged branches flag") {
    const auto cells = csv_cells(execute(
        parse_args({"coarse", "--theta", "0.785398163397", "--averaged-branches"})));
    CHECK(cells[1][3] == "averaged");
    CHECK(cells[1][4] == "0");
}

TEST_CASE("exit codes") {
    std::ostringstream err;
    CHECK(run({"fine", "--theta", "9"}, err) == kExitUsage);
    CHECK(err.str().find("--theta") != std::string::npos);
    CHECK(run({"coarse", "--out", "/nonexistent-dir/out.csv"}, err) == kExitFailure);

    const auto path = std::filesystem::temp_directory_path() / "eraser_cli_test.csv";
    CHECK(run({"coarse", "--theta", "0.3", "--out", path.string()}, err) == kExitOk);
    const auto text = read_file(path);
    CHECK(text.rfind("theta_rad,", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("binary output is byte-identical across runs") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "eraser_cli_a.csv";
    const auto b = dir / "eraser_cli_b.csv";
    const std::string cmd = std::string(ERASER_CLI_PATH) + " sweep --gamma 0.1 --out ";
    REQUIRE(std::system((cmd + a.string()).c_str()) == 0);
    REQUIRE(std::system((cmd + b.string()).c_str()) == 0);
    const auto ta = read_file(a);
    CHECK(ta.size() > 1000);
    CHECK(ta == read_file(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);

    const int status = std::system((std::string(ERASER_CLI_PATH) +
                                    " fine --theta 9 2>/dev/null")
                                       .c_str());
    CHECK(WEXITSTATUS(status) == kExitUsage);
}
