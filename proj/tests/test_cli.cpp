#include "aco/cli.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = aco::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Csv {
    std::vector<std::string> meta;
    std::string header;
    std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            csv.meta.push_back(line);
            continue;
        }
        if (csv.header.empty()) {
            csv.header = line;
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

std::string meta_value(const Csv& csv, const std::string& key) {
    const std::string prefix = "# " + key + ": ";
    for (const std::string& line : csv.meta) {
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    }
    return "";
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("solve reports the tuned expansion") {
    SUBCASE("low amplitude frequency") {
        const CliResult r = run_cli({"solve", "--a", "0.1", "--op", "1"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.header == "lambda0,lambda1,h,omega0,omega,c13,c15");
        REQUIRE(csv.rows.size() == 1);
        CHECK(std::abs(csv.rows[0][3] - 1.00126) <= 5e-6);  // omega0
        CHECK(meta_value(csv, "command") == "solve");
        CHECK(meta_value(csv, "h_tuned") == "true");
    }
    SUBCASE("harmonic limit") {
        const CliResult r = run_cli({"solve", "--a", "1", "--op", "0"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        REQUIRE(csv.rows.size() == 1);
        CHECK(csv.rows[0][4] == 1.0);  // omega
        CHECK(csv.rows[0][5] == 0.0);  // c13
        CHECK(csv.rows[0][6] == 0.0);  // c15
    }
    SUBCASE("strongly nonlinear reference point") {
        const CliResult r = run_cli({"solve", "--a", "1", "--op", "1"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        REQUIRE(csv.rows.size() == 1);
        CHECK(std::abs(csv.rows[0][2] - 0.413602) <= 5e-3);  // h
    }
    SUBCASE("explicit h skips tuning") {
        const CliResult r = run_cli({"solve", "--a", "1", "--op", "1", "--h", "0.5"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.rows[0][2] == 0.5);
        CHECK(meta_value(csv, "h_tuned") == "false");
        CHECK(meta_value(csv, "h") == "0.5");
    }
    SUBCASE("json output carries the three top-level sections") {
        const CliResult r = run_cli(
            {"solve", "--a", "0.5", "--op", "0.5", "--format", "json"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("{", 0) == 0);
        CHECK(r.out.find("\"config\"") != std::string::npos);
        CHECK(r.out.find("\"results\"") != std::string::npos);
        CHECK(r.out.find("\"diagnostics\"") != std::string::npos);
        CHECK(r.out.find("\"omega\"") != std::string::npos);
    }
}

TEST_CASE("trace emits strided comparison rows") {
    SUBCASE("row count follows span, dt and stride") {
        const CliResult r = run_cli({"trace", "--a", "1", "--op", "0", "--span",
                                     "2", "--dt", "0.01", "--stride", "10"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.header == "t,x_rk4,x_lthpm,deviation");
        CHECK(csv.rows.size() == 21);  // floor(2 / 0.1) + 1
    }
    SUBCASE("harmonic deviation column is numerically zero") {
        const CliResult r = run_cli({"trace", "--a", "1", "--op", "0", "--span",
                                     "10", "--dt", "0.001"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        for (const auto& row : csv.rows) {
            CHECK(std::abs(row[3]) < 1e-9);
        }
    }
    SUBCASE("byte-identical reruns") {
        const std::vector<std::string> args{"trace", "--a",  "0.8", "--op",
                                            "0.8",   "--span", "5",  "--dt",
                                            "0.01"};
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        REQUIRE(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("phase emits one closed analytic period") {
    const CliResult r = run_cli({"phase", "--a", "1", "--op", "0", "--dt", "0.001"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(csv.header == "x_rk4,v_rk4,x_lthpm,v_lthpm");
    REQUIRE(csv.rows.size() > 10);

    SUBCASE("harmonic curves lie on the unit circle") {
        for (const auto& row : csv.rows) {
            CHECK(std::abs(row[0] * row[0] + row[1] * row[1] - 1.0) < 1e-6);
            CHECK(std::abs(row[2] * row[2] + row[3] * row[3] - 1.0) < 1e-6);
        }
    }
    SUBCASE("the analytic curve closes and says so in the metadata") {
        const std::string closure = meta_value(csv, "closure_deviation");
        REQUIRE_FALSE(closure.empty());
        CHECK(std::stod(closure) < 1e-6);
        const auto& first = csv.rows.front();
        const auto& last = csv.rows.back();
        CHECK(std::abs(last[2] - first[2]) < 1e-6);
        CHECK(std::abs(last[3] - first[3]) < 1e-6);
    }
}

TEST_CASE("residual-scan lists the landscape plus the minimizer") {
    SUBCASE("harmonic limit has an identically zero landscape") {
        const CliResult r = run_cli({"residual-scan", "--a", "1", "--op", "0"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.header == "h,e1,is_minimizer");
        REQUIRE(csv.rows.size() == 62);  // 61 grid rows + minimizer row
        for (const auto& row : csv.rows) {
            CHECK(row[1] == 0.0);
            CHECK(row[1] >= 0.0);
        }
        CHECK(csv.rows.back()[2] == 1.0);
    }
    SUBCASE("minimum near the tabulated value") {
        const CliResult r = run_cli({"residual-scan", "--a", "0.8", "--op", "0.8"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(std::abs(csv.rows.back()[0] - 0.667982) < 5e-3);
        CHECK(std::stod(meta_value(csv, "h_star")) ==
              doctest::Approx(csv.rows.back()[0]).epsilon(1e-9));
    }
}

TEST_CASE("table reproduces the built-in reference rows") {
    const CliResult r = run_cli({"table", "--span", "50", "--dt", "0.001"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(csv.header == "a,op,h_star,rms_lthpm");
    REQUIRE(csv.rows.size() == 9);
    CHECK(std::abs(csv.rows.front()[2] - 0.996672) < 5e-3);
    CHECK(std::abs(csv.rows.back()[2] - 0.413602) < 5e-3);
    for (const auto& row : csv.rows) {
        CHECK(row[3] > 0.0);
    }

    SUBCASE("custom rows replace the built-in set") {
        const CliResult custom = run_cli({"table", "--row", "0.5,1.0"});
        REQUIRE(custom.code == 0);
        const Csv c = parse_csv(custom.out);
        REQUIRE(c.rows.size() == 1);
        CHECK(c.rows[0][0] == 0.5);
        CHECK(c.rows[0][1] == 1.0);
    }
    SUBCASE("a sweep where every row fails exits with a domain error") {
        const CliResult bad = run_cli({"table", "--lambda", "0"});
        CHECK(bad.code == 3);
        CHECK(bad.out.find("# row_error:") != std::string::npos);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"solve", "--bogus"}).code == 2);
    CHECK(run_cli({"solve", "--a", "-1"}).code == 2);
    CHECK(run_cli({"solve", "--a", "1", "--lambda", "5"}).code == 2);
    CHECK(run_cli({"trace", "--a", "1", "--dt", "0.5"}).code == 2);
    CHECK(run_cli({"trace", "--a", "1", "--dt", "2", "--span", "1"}).code == 2);
    CHECK(run_cli({"solve", "--a", "1", "--q", "1"}).code == 2);
    CHECK(run_cli({"solve", "--a", "1", "--h-lo", "2", "--h-hi", "1"}).code == 2);
    // lambda = 0 passes model validation but the expansion refuses it.
    CHECK(run_cli({"solve", "--a", "1", "--lambda", "0"}).code == 3);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"solve", "--help"}).code == 0);
}

TEST_CASE("file output") {
    const std::filesystem::path path = temp_file("aco_cli_out_test.csv");
    std::filesystem::remove(path);

    SUBCASE("payload lands in the file") {
        const CliResult r = run_cli(
            {"solve", "--a", "1", "--op", "0", "--output", path.string()});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str().find("lambda0,lambda1,h") != std::string::npos);
    }
    SUBCASE("invalid arguments never create the file") {
        const CliResult r = run_cli({"trace", "--a", "1", "--dt", "0.5",
                                     "--output", path.string()});
        CHECK(r.code == 2);
        CHECK_FALSE(std::filesystem::exists(path));
    }
    std::filesystem::remove(path);
}

TEST_CASE("config file fills unset flags and loses conflicts") {
    const std::filesystem::path path = temp_file("aco_cli_cfg_test.ini");
    {
        std::ofstream cfg(path);
        cfg << "a=0.1\n";
        cfg << "op=1.0\n";
        cfg << "format=csv\n";
    }

    SUBCASE("values come from the file") {
        const CliResult r = run_cli({"solve", "--config", path.string()});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(meta_value(csv, "a") == "0.1");
        CHECK(std::abs(csv.rows[0][3] - 1.00126) <= 5e-6);
    }
    SUBCASE("command line wins on conflict") {
        const CliResult r =
            run_cli({"solve", "--config", path.string(), "--a", "1.0"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(meta_value(csv, "a") == "1");
        CHECK(std::abs(csv.rows[0][2] - 0.413602) <= 5e-3);
    }
    std::filesystem::remove(path);
}
