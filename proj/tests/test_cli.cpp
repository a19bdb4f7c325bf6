// test_cli.cpp — configuration parsing, output writers, command dispatch

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "omech/cli.hpp"
#include "omech/config.hpp"
#include "omech/output.hpp"

using namespace omech;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("omech-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("empty document keeps the defaults") {
        const auto config = cli::parse_config("");
        CHECK(config.mechanical_frequency_hz == doctest::Approx(947e3));
        CHECK(config.bath_temperature_k == doctest::Approx(1e-6));
        const auto site = config.site();
        CHECK(site.detuning == doctest::Approx(site.omega_m));  // default Delta = omega_m
        CHECK(site.omega_m == doctest::Approx(2 * M_PI * 947e3));
    }

    SUBCASE("comments, blank lines and values") {
        const auto config = cli::parse_config(
            "# comment only\n"
            "\n"
            "mechanical_frequency_hz = 500e3  # trailing comment\n"
            "bath_temperature_k = 2e-5\n");
        CHECK(config.mechanical_frequency_hz == doctest::Approx(500e3));
        CHECK(config.bath_temperature_k == doctest::Approx(2e-5));
    }

    SUBCASE("errors name key and line") {
        CHECK_THROWS_WITH_AS(cli::parse_config("unknown_key = 3\n", "test"),
                             doctest::Contains("test:1"), ConfigError);
        CHECK_THROWS_WITH_AS(cli::parse_config("\nmass_kg = banana\n", "test"),
                             doctest::Contains("test:2"), ConfigError);
        CHECK_THROWS_WITH_AS(cli::parse_config("quality_factor = -5\n", "test"),
                             doctest::Contains("quality_factor"), ConfigError);
        CHECK_THROWS_AS(cli::parse_config("mass_kg\n"), ConfigError);
    }

    SUBCASE("round trip") {
        cli::RunConfig config;
        config.mechanical_frequency_hz = 812345.678;
        config.bath_temperature_k = 3.25e-4;
        config.detuning_hz = 1.1e6;
        config.max_panels = 1234;
        const auto reparsed = cli::parse_config(cli::render_config(config));
        CHECK(reparsed.mechanical_frequency_hz == config.mechanical_frequency_hz);
        CHECK(reparsed.bath_temperature_k == config.bath_temperature_k);
        CHECK(reparsed.detuning_hz == config.detuning_hz);
        CHECK(reparsed.max_panels == config.max_panels);
        CHECK(reparsed.mass_kg == config.mass_kg);
    }
}

TEST_CASE("table rendering") {
    cli::Table table;
    table.header = {"x", "label", "count"};
    table.add_row({1.0 / 3.0, std::string("abc"), static_cast<long long>(7)});
    CHECK_THROWS_AS(table.add_row({1.0}), IoError);

    SUBCASE("csv formatting and precision") {
        CHECK(cli::to_csv(table, 9) == "x,label,count\n0.333333333,abc,7\n");
        CHECK(cli::to_csv(table, 3) == "x,label,count\n0.333,abc,7\n");
        cli::Table rounding;
        rounding.header = {"v"};
        rounding.add_row({2.5});
        rounding.add_row({3.5});
        // %.1g rounds half to even
        CHECK(cli::to_csv(rounding, 1) == "v\n2\n4\n");
    }

    SUBCASE("json structure") {
        const auto text = cli::to_json(table, cli::RunConfig{}, {"demo", 17, "0.0"}, 9);
        const auto doc = nlohmann::json::parse(text);
        CHECK(doc["meta"]["seed"] == 17);
        CHECK(doc["meta"]["command"] == "demo");
        CHECK(doc["results"].size() == 1);
        CHECK(doc["results"][0]["label"] == "abc");
        CHECK(doc["results"][0]["count"] == 7);
        CHECK(doc["config"]["mass_kg"].get<double>() == doctest::Approx(1.45e-10));
    }
}

TEST_CASE("cli dispatch and exit codes") {
    TempDir tmp;

    SUBCASE("boundary writes the contracted header and row count") {
        const auto out = (tmp.path / "boundary.csv").string();
        CHECK(cli::run_cli({"boundary", "--eps-max", "1.0", "--steps", "8", "-o", out}) == 0);
        std::ifstream in(out);
        std::string header;
        std::getline(in, header);
        CHECK(header == "epsilon_in,ln_out");
        int rows = 0;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) ++rows;
        }
        CHECK(rows == 8);
    }

    SUBCASE("sample header matches the contract") {
        const auto out = (tmp.path / "sample.csv").string();
        CHECK(cli::run_cli({"sample", "--n", "4", "--seed", "3", "-o", out}) == 0);
        std::ifstream in(out);
        std::string header;
        std::getline(in, header);
        CHECK(header == "s,d,g,lambda,eps_in,ln_out,physical");
    }

    SUBCASE("byte-identical reruns") {
        const auto out1 = (tmp.path / "a.csv").string();
        const auto out2 = (tmp.path / "b.csv").string();
        for (const char* fmt : {"csv", "json"}) {
            CHECK(cli::run_cli({"sample", "--n", "6", "--seed", "11", "--format", fmt,
                                "-o", out1}) == 0);
            CHECK(cli::run_cli({"sample", "--n", "6", "--seed", "11", "--format", fmt,
                                "-o", out2}) == 0);
            CHECK(slurp(out1) == slurp(out2));
            CHECK_FALSE(slurp(out1).empty());
        }
    }

    SUBCASE("config file is honored and untouched") {
        const auto cfg_path = (tmp.path / "run.cfg").string();
        {
            std::ofstream out(cfg_path);
            out << "bath_temperature_k = 5e-4\n";
        }
        const std::string before = slurp(cfg_path);
        const auto out = (tmp.path / "two.csv").string();
        CHECK(cli::run_cli({"two-mode", "--epsilon", "1.0", "--config", cfg_path, "-o", out}) ==
              0);
        CHECK(slurp(cfg_path) == before);
    }

    SUBCASE("remaining subcommands run clean") {
        const auto out = (tmp.path / "cmd.out").string();
        CHECK(cli::run_cli({"three-mode", "--a", "2.0", "-o", out}) == 0);
        CHECK(cli::run_cli({"classify", "--a-min", "1.5", "--a-max", "2.5", "--steps", "2",
                            "-o", out}) == 0);
        CHECK(cli::run_cli({"optimize-s", "-o", out, "--format", "json"}) == 0);
        const auto doc = nlohmann::json::parse(slurp(out));
        const double s_star = doc["results"][0]["s_star"].get<double>();
        CHECK(s_star > 2.3);
        CHECK(s_star < 2.7);
        CHECK(cli::run_cli({"scan-purity", "--s-min", "2", "--s-max", "4", "--s-steps", "3",
                            "--g-min", "1", "--g-max", "2", "--g-steps", "2", "-o", out}) == 0);
        CHECK(cli::run_cli({"sweep-temperature", "--t-min", "1e-5", "--t-max", "1e-3",
                            "--steps", "2", "-o", out}) == 0);
    }

    SUBCASE("exit codes") {
        const auto out = (tmp.path / "x.csv").string();
        // usage error
        CHECK(cli::run_cli({"no-such-command"}) == cli::kConfigError);
        // config error
        const auto bad_cfg = (tmp.path / "bad.cfg").string();
        {
            std::ofstream o(bad_cfg);
            o << "quality_factor = -5\n";
        }
        CHECK(cli::run_cli({"two-mode", "--config", bad_cfg, "-o", out}) == cli::kConfigError);
        // physics error
        CHECK(cli::run_cli({"two-mode", "--s", "0.5", "-o", out}) == cli::kPhysicsError);
        // convergence error
        const auto tight_cfg = (tmp.path / "tight.cfg").string();
        {
            std::ofstream o(tight_cfg);
            o << "max_panels = 6\n";
        }
        CHECK(cli::run_cli({"two-mode", "--epsilon", "1.0", "--config", tight_cfg, "-o", out}) ==
              cli::kConvergenceError);
        // io error
        CHECK(cli::run_cli({"boundary", "--steps", "2", "--eps-max", "0.2", "-o",
                            (tmp.path / "missing-dir" / "x.csv").string()}) == cli::kIoError);
    }
}
