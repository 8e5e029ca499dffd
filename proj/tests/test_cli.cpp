#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oscsec/survey.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = oscsec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_row(const std::string& text) {
    std::istringstream in(text);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    return row;
}

std::string field(const std::string& csv, int index) {
    std::istringstream in(csv);
    std::string f;
    for (int i = 0; i <= index; ++i) std::getline(in, f, ',');
    return f;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("oscsec_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("dim prints one row") {
    const Outcome r = invoke({"dim", "-k", "1", "-n", "2", "-d", "3", "-s", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(oscsec::kCsvHeader, 0) == 0);
    const std::string row = first_row(r.out);
    CHECK(row.rfind("1,2,3,2,9,9,8,1,defective,CGG,defective,,MATCH,CONSISTENT,", 0) == 0);
    CHECK(r.out.find("# affine rank 9") != std::string::npos);
}

TEST_CASE("dim on a two-point d = k+1 cell") {
    const Outcome r = invoke({"dim", "-k", "2", "-n", "4", "-d", "3", "-s", "2"});
    CHECK(r.code == 0);
    CHECK(field(first_row(r.out), 6) == "30");
    CHECK(field(first_row(r.out), 9) == "P3.4Bi");
    CHECK(field(first_row(r.out), 12) == "MATCH");
}

TEST_CASE("dim for k = 0 cross-checks double points") {
    const Outcome r = invoke({"dim", "-k", "0", "-n", "2", "-d", "4", "-s", "5"});
    CHECK(r.code == 0);
    CHECK(field(first_row(r.out), 6) == "13");
    CHECK(r.out.find("# double points: dim 13 (N - h0), agrees") != std::string::npos);
}

TEST_CASE("dim verdicts do not depend on the prime") {
    const Outcome big = invoke({"dim", "-k", "8", "-n", "2", "-d", "15", "-s", "3"});
    const Outcome small = invoke({"dim", "-k", "8", "-n", "2", "-d", "15", "-s", "3", "--prime", "101"});
    REQUIRE(big.code == 0);
    REQUIRE(small.code == 0);
    for (int i : {6, 7, 8, 9, 12}) CHECK(field(first_row(big.out), i) == field(first_row(small.out), i));
    CHECK(field(first_row(small.out), 8) == "defective");
    CHECK(field(first_row(small.out), 9) == "P3.8");
    CHECK(field(first_row(small.out), 14) == "101");
}

TEST_CASE("dim output formats") {
    const Outcome json = invoke({"dim", "-k", "1", "-n", "2", "-d", "3", "-s", "2", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.front() == '[');
    CHECK(json.out.find("\"computed_dim_proj\":8") != std::string::npos);
    const Outcome md = invoke({"dim", "-k", "1", "-n", "2", "-d", "3", "-s", "2", "--format", "md"});
    CHECK(md.code == 0);
    CHECK(md.out.rfind("| k ", 0) == 0);
}

TEST_CASE("usage errors exit 1") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"dim", "-k", "1", "-n", "2", "-d", "3"},
             {"dim", "-k", "1", "-n", "2", "-d", "3", "-s", "x"},
             {"dim", "-k", "3", "-n", "2", "-d", "3", "-s", "2"},
             {"dim", "-k", "1", "-n", "2", "-d", "3", "-s", "2", "--format", "xml"},
             {"dim", "-k", "1", "-n", "2", "-d", "3", "-s", "2", "--prime", "100"},
             {"survey", "--k", "1..x"},
         }) {
        const Outcome r = invoke(args);
        CHECK(r.code == oscsec::cli::kExitUsage);
        CHECK(r.err.find("Usage") != std::string::npos);
    }
}

TEST_CASE("help exits 0") {
    const Outcome r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("survey") != std::string::npos);
    CHECK(r.out.find("tamper") == std::string::npos);
}

TEST_CASE("survey writes a file and a summary") {
    const auto path = temp_path("survey.csv");
    const Outcome r = invoke({"survey", "--k", "1..2", "--n", "2", "--s", "2..3", "--jobs", "2", "--out", path.string()});
    CHECK(r.code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind(oscsec::kCsvHeader, 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * (3 + 4));
    CHECK(r.out.find("MISMATCH: 0") != std::string::npos);

    const Outcome again = invoke({"survey", "--k", "1..2", "--n", "2", "--s", "2..3", "--jobs", "1", "--out", path.string()});
    CHECK(again.code == 0);
    CHECK(slurp(path) == csv);
    std::filesystem::remove(path);
}

TEST_CASE("survey to stdout in other formats") {
    const Outcome json = invoke({"survey", "--k", "1", "--n", "2", "--s", "2", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.front() == '[');
    CHECK(json.err.find("MISMATCH: 0") != std::string::npos);
    const Outcome md = invoke({"survey", "--k", "1", "--n", "2", "--s", "2", "--format", "md"});
    CHECK(md.code == 0);
    CHECK(md.out.rfind("| k ", 0) == 0);
}

TEST_CASE("empty survey range gives a header-only file") {
    const auto path = temp_path("empty.csv");
    const Outcome r = invoke({"survey", "--k", "2..1", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(slurp(path) == std::string(oscsec::kCsvHeader) + "\n");
    std::filesystem::remove(path);
}

TEST_CASE("unwritable output exits 2") {
    const Outcome r = invoke({"survey", "--k", "1", "--n", "2", "--s", "2", "--out", "/nonexistent-dir/x.csv"});
    CHECK(r.code == oscsec::cli::kExitIo);
}

TEST_CASE("budget-skipped cells are reported") {
    const Outcome r = invoke({"survey", "--k", "2", "--n", "2", "--d", "5", "--s", "3", "--budget", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SKIPPED-BUDGET") != std::string::npos);
}

TEST_CASE("a tampered expectation fails the battery") {
    const Outcome r = invoke({"check-paper", "--skip-survey", "--tamper"});
    CHECK(r.code == oscsec::cli::kExitMismatch);
    CHECK(r.out.find("FAIL  [ 1]") != std::string::npos);
}
