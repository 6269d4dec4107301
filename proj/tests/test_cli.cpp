#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "hyperjac/cli.hpp"

using namespace hyperjac;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "hyperjac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hyperjac_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, LpolyAllMethodsAgree) {
    const CliResult r = run({"lpoly", "--q", "3", "--poly", "1,2,0,1", "--method", "all"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "method,q,d,g,F,coeffs,class_number,n_f,s_1\n"
              "newton,3,3,1,\"1,2,0,1\",\"1,3,3\",7,0.84729786038720356,-3\n"
              "charsum,3,3,1,\"1,2,0,1\",\"1,3,3\",7,0.84729786038720356,-3\n"
              "pointcount,3,3,1,\"1,2,0,1\",\"1,3,3\",7,0.84729786038720356,-3\n");
    EXPECT_NE(r.err.find("timing pointcount"), std::string::npos);
}

TEST(Cli, LpolyJson) {
    const CliResult r = run({"lpoly", "--q", "3", "--poly", "0,2,0,1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["class_number"], 4);
    EXPECT_EQ(j[0]["coeffs"], "1,0,3");
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"lpoly", "--q", "4", "--poly", "1,2,0,1"}).code, 2);
    EXPECT_EQ(run({"lpoly", "--q", "3", "--poly", "0,0,1,1"}).code, 2);  // not squarefree
    EXPECT_EQ(run({"lpoly", "--q", "3", "--poly", "1,2,0,1", "--d", "4"}).code, 2);
    EXPECT_EQ(run({"sweep", "--q", "3"}).code, 2);
    EXPECT_EQ(run({"sweep", "--q", "3", "--d", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"sample", "--q", "3", "--d", "5"}).code, 2);
    EXPECT_EQ(run({"sweep", "--q", "3", "--d", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"moments", "--q", "3", "--s", "11"}).code, 2);
    EXPECT_EQ(run({"bounds", "--g", "0", "--q", "3"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, SweepSummaryAndRecords) {
    const auto rec = temp_path("records.csv");
    const CliResult r = run({"sweep", "--q", "3", "--d", "3", "--records-out", rec.string(), "--threads", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\ncount,18\n"), std::string::npos);
    const std::string rows = cli_detail::read_file(rec.string());
    EXPECT_EQ(rows.rfind("q,d,g,F,class_number,n_f,s_1\n", 0), 0u);
    EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 19);
    const CliResult v = run({"verify", "--records-in", rec.string()});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_NE(v.out.find("records,18"), std::string::npos);
    std::filesystem::remove(rec);
}

TEST(Cli, CorruptedRecordsExitOne) {
    const auto rec = temp_path("bad.csv");
    cli_detail::write_file(rec.string(),
                           "q,d,g,F,class_number,n_f,s_1\n"
                           "3,3,1,\"1,2,0,1\",7,0.84729786038720356,-3\n"
                           "3,3,1,\"1,2,0,1\",8,0.98082925301172619,-4\n");
    const CliResult v = run({"verify", "--records-in", rec.string()});
    EXPECT_EQ(v.code, 1);
    EXPECT_NE(v.err.find("line 3"), std::string::npos);
    EXPECT_EQ(v.err.find("line 2"), std::string::npos);
    // inside both bounds but not the true class number
    cli_detail::write_file(rec.string(), "q,d,g,F,class_number,n_f,s_1\n3,3,1,\"1,2,0,1\",6,0.69314718055994529,-2\n");
    EXPECT_EQ(run({"verify", "--records-in", rec.string()}).code, 1);
    cli_detail::write_file(rec.string(), "not,a,records,file\n");
    EXPECT_EQ(run({"verify", "--records-in", rec.string()}).code, 2);
    std::filesystem::remove(rec);
}

TEST(Cli, VerifySweepPasses) {
    const CliResult r = run({"verify", "--q", "5", "--d", "5", "--check-rh"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\nviolations,0\n"), std::string::npos);
}

TEST(Cli, ManifestAndReproducibility) {
    const auto a = temp_path("a.csv"), b = temp_path("b.csv");
    ASSERT_EQ(run({"sample", "--q", "61", "--d", "5", "--samples", "100", "--seed", "7", "--threads", "1", "--out", a.string()}).code, 0);
    ASSERT_EQ(run({"sample", "--q", "61", "--d", "5", "--samples", "100", "--seed", "7", "--threads", "3", "--out", b.string()}).code, 0);
    const std::string csv = cli_detail::read_file(a.string());
    EXPECT_EQ(csv, cli_detail::read_file(b.string()));
    const auto m = nlohmann::json::parse(cli_detail::read_file(a.string() + ".manifest.json"));
    EXPECT_EQ(m["subcommand"], "sample");
    EXPECT_EQ(m["seed"], 7);
    EXPECT_EQ(m["version"], kVersion);
    EXPECT_EQ(m["flags"]["--samples"], "100");
    EXPECT_EQ(m["output_checksum_fnv1a64"], fnv1a_hex(csv));
    EXPECT_TRUE(m.contains("wall_time_s"));
    for (const auto& p : {a, b}) {
        std::filesystem::remove(p);
        std::filesystem::remove(p.string() + ".manifest.json");
    }
}

TEST(Cli, MomentsAndCharfun) {
    const CliResult m = run({"moments", "--q", "3", "--s", "1", "--trunc-degree", "1"});
    ASSERT_EQ(m.code, 0);
    EXPECT_NE(m.out.find("\n1,1,0.13250591"), std::string::npos) << m.out;
    const CliResult c = run({"charfun", "--q", "3", "--t-grid", "0,1"});
    ASSERT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("\n0,1,0,"), std::string::npos) << c.out;
}

TEST(Cli, CharfunJoinsSweep) {
    const auto s = temp_path("sweep.csv");
    ASSERT_EQ(run({"sweep", "--q", "3", "--d", "7", "--out", s.string()}).code, 0);
    const CliResult c = run({"charfun", "--q", "3", "--compare-sweep", s.string(), "--format", "json"});
    ASSERT_EQ(c.code, 0) << c.err;
    const auto j = nlohmann::json::parse(c.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_LT(j[1]["abs_diff"].get<double>(), 0.2);
    EXPECT_EQ(run({"charfun", "--q", "3", "--t-grid", "0.7", "--compare-sweep", s.string()}).code, 2);
    std::filesystem::remove(s);
    std::filesystem::remove(s.string() + ".manifest.json");
}

TEST(Cli, BoundsAndHcheck) {
    const CliResult b = run({"bounds", "--g", "1", "--q", "3"});
    ASSERT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("genus_bound,3.57"), std::string::npos) << b.out;
    EXPECT_NE(b.out.find("weil_exact_a,4\nweil_exact_b,2\n"), std::string::npos);
    const CliResult h = run({"hcheck", "--q", "3"});
    EXPECT_EQ(h.code, 0) << h.out;
    EXPECT_EQ(h.out.find(",0\n"), std::string::npos);
}
