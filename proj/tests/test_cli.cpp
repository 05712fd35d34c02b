/**
 * @file test_cli.cpp
 * @brief End-to-end checks of the hilbgw command-line tool: exit codes,
 *        report schema, determinism under --threads and the psi cache.
 */
#include "hilbgw/report.hpp"
#include "hilbgw/wk_cache.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace hilbgw;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HILBGW_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json run_json(const std::string& args) {
    auto r = run(args);
    EXPECT_EQ(r.exit_code, 0) << args;
    Json doc = Json::parse(r.out);
    EXPECT_TRUE(validate_report(doc).empty()) << args << ": " << (validate_report(doc).empty() ? "" : validate_report(doc).front());
    return doc;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("hilbgw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
        setenv("HILBGW_CACHE_DIR", dir_.c_str(), 1);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("no-such-command").exit_code, 2);
    EXPECT_EQ(run("invariant --n 2 --genus 1 --insertions '[[3]]'").exit_code, 2);
    EXPECT_EQ(run("invariant --n 2 --genus 1 --insertions 'not json'").exit_code, 2);
    EXPECT_EQ(run("invariant --n 2 --genus 0 --insertions '[[2]]'").exit_code, 2);
    EXPECT_EQ(run("invariant --n 2 --genus 3 --insertions '[[2]]'").exit_code, 2);
    EXPECT_EQ(run("degree0 --n 2 --genus 1 --insertions '[]'").exit_code, 2);
    EXPECT_EQ(run("md-matrix --n 0").exit_code, 2);
    EXPECT_EQ(run("--threads 0 md-matrix --n 2").exit_code, 2);
}

TEST_F(Cli, SmallReportsValidate) {
    for (const char* args : {"md-matrix --n 2 --q-order 3", "eigen --n 2 --q-order 2", "fixed-points --n 3 --macdonald",
                             "rmatrix --n 2 --q-order 2 --z-order 2", "degree0 --n 2 --genus 1 --insertions '[[2]]'"}) {
        Json doc = run_json(args);
        EXPECT_EQ(doc["schema_version"], kSchemaVersion);
        EXPECT_EQ(doc["library_version"], kLibraryVersion);
        EXPECT_TRUE(doc["config"].contains("cache_dir"));
    }
}

TEST_F(Cli, InvariantCoefficientsAndRationalForm) {
    Json doc = run_json("invariant --n 2 --genus 1 --insertions '[[2]]' --q-order 8 --z-order 3 --reconstruct-rational");
    const auto& r = doc["result"];
    ASSERT_EQ(r["coefficients"].size(), 9u);
    for (const auto& c : r["coefficients"]) EXPECT_TRUE(is_scalar_string(c));
    EXPECT_EQ(r["rational_status"], "reconstructed");
    EXPECT_FALSE(r["rational_form"].is_null());
}

TEST_F(Cli, ThreadsDoNotChangeOutput) {
    const std::string args = "invariant --n 2 --genus 2 --insertions '[]' --q-order 2 --z-order 4";
    auto a = run("--threads 1 " + args);
    auto b = run("--threads 2 " + args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, CsvOutput) {
    auto r = run("--out csv md-matrix --n 2 --q-order 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("path,value\n", 0), 0u);
    EXPECT_NE(r.out.find("schema_version,1"), std::string::npos);
}

TEST_F(Cli, WkTableAndCache) {
    Json doc = run_json("wk-table --genus 2");
    bool found = false;
    for (const auto& e : doc["result"]["entries"])
        if (e["g"] == 2 && e["exponents"] == Json::array({4})) found = e["value"] == "1/1152";
    EXPECT_TRUE(found);
    ASSERT_TRUE(std::filesystem::exists(dir_ / "wk_cache.json"));
    Json again = run_json("wk-table --genus 2");
    EXPECT_GT(again["result"]["cache_entries_loaded"].get<int>(), 0);
    EXPECT_EQ(again["result"]["entries"], doc["result"]["entries"]);
}

TEST_F(Cli, CorruptedCacheExitsWithOne) {
    run_json("wk-table --genus 1");
    const auto path = dir_ / "wk_cache.json";
    Json doc;
    {
        std::ifstream in(path);
        in >> doc;
    }
    doc["entries"][0]["value"] = "7/3";
    {
        std::ofstream out(path);
        out << doc.dump(1);
    }
    EXPECT_EQ(run("wk-table --genus 1").exit_code, 1);
}

TEST_F(Cli, OutputFile) {
    const auto path = dir_ / "report.json";
    auto r = run("-o " + path.string() + " eigen --n 1 --q-order 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    Json doc = Json::parse(in);
    EXPECT_TRUE(validate_report(doc).empty());
}

TEST_F(Cli, CrepantCompareReport) {
    Json doc = run_json("crepant-compare --n 2 --genus 1 --insertions '[[2]]' --q-order 6 --z-order 3 --u-order 4");
    const auto& r = doc["result"];
    EXPECT_EQ(r["pole_at_minus_one"], false);
    EXPECT_EQ(r["round_trip"], true);
    EXPECT_EQ(r["prefactor_exponent"], -1);
}
