#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "qn/app/cli.hpp"

using namespace qn::app;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qn");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qn_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write(const fs::path& dir, const std::string& text) {
    const fs::path p = dir / "run.ini";
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, SweepWritesTables) {
    const fs::path dir = scratch("sweep");
    const fs::path cfg = write(dir, "[plant]\npreset = glasgow-ssm\n[grid]\npoints = 5\n[output]\nquantities = qnls, rin\n");
    const Result r = run({"sweep", "--config", cfg.string(), "--rbs", "0.501", "--out", (dir / "o").string()});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(fs::exists(dir / "o" / "comoving_qnls.csv"));
    EXPECT_TRUE(fs::exists(dir / "o" / "comoving_rin.csv"));
    const std::string csv = slurp(dir / "o" / "comoving_qnls.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "f_Hz,asd_total_m_per_sqrtHz,S_DP_m2_per_Hz,S_BP_m2_per_Hz,S_PO_m2_per_Hz,S_total_m2_per_Hz,"
              "x_SQL_m_per_sqrtHz");
}

TEST(Cli, FlagsOverrideConfig) {
    const fs::path dir = scratch("override");
    const fs::path cfg = write(dir, "[plant]\npreset = glasgow-ssm\n[grid]\npoints = 3\n[output]\nformat = csv\npath = " +
                                        (dir / "from_config").string() + "\n");
    const Result r = run({"sweep", "--config", cfg.string(), "--lo", "direct", "--format", "json", "--out",
                          (dir / "from_flag").string(), "--rbs", "0.6"});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(fs::exists(dir / "from_flag" / "direct_qnls.json"));
    EXPECT_FALSE(fs::exists(dir / "from_config"));
}

TEST(Cli, PresetWithoutConfig) {
    const fs::path dir = scratch("preset");
    const Result r = run({"sweep", "--preset", "glasgow-ssm", "--out", dir.string()});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(fs::exists(dir / "comoving_qnls.csv"));
}

TEST(Cli, ConfigErrorsExitTwo) {
    const fs::path dir = scratch("bad");
    const fs::path cfg = write(dir, "[plant]\npreset = glasgow-ssm\narm_length = 1.3\n");
    const Result r = run({"sweep", "--config", cfg.string(), "--out", dir.string()});
    EXPECT_EQ(r.code, exit_config);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("arm_length"), std::string::npos) << r.err;
    EXPECT_EQ(run({"sweep", "--preset", "glasgow-ssm", "--lo", "sideways"}).code, exit_config);
    EXPECT_EQ(run({"sweep", "--bogus"}).code, exit_config);
    EXPECT_EQ(run({}).code, exit_config);
}

TEST(Cli, DipPrintsFrequency) {
    const Result r = run({"dip", "--phi", "0.7853981633974483", "--lo", "comoving"});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.out.rfind("f_dip_Hz = 2.39", 0), 0u) << r.out;
}

TEST(Cli, DipFailures) {
    EXPECT_EQ(run({"dip", "--phi", "1.5707963267948966"}).code, exit_config);
    EXPECT_EQ(run({"dip", "--phi", "0.78", "--lo", "direct"}).code, exit_config);
    const Result r = run({"dip", "--phi", "0.78", "--fmax", "100"});
    EXPECT_EQ(r.code, exit_numeric);
    EXPECT_NE(r.err.find("no dip in band"), std::string::npos);
}

TEST(Cli, NumericalFailureExitsThree) {
    const fs::path dir = scratch("numeric");
    const Result r = run({"sweep", "--preset", "glasgow-ssm", "--phi", "0", "--lo", "direct", "--out", dir.string()});
    EXPECT_EQ(r.code, exit_numeric) << r.err;
}

TEST(Cli, Help) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}
