#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <disclab/io.hpp>

#include "cli.hpp"

namespace {

const std::string kData = DISCLAB_DATA_DIR;

int runCli(std::vector<std::string> args) {
    args.insert(args.begin(), "disclab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return disclab::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string out(const std::string& name) { return ::testing::TempDir() + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

disclab::io::Json result(const std::string& path) { return disclab::io::readJsonFile(path)["result"]; }

} // namespace

TEST(Cli, DemoReproducesExample) {
    auto o = out("demo.json");
    EXPECT_EQ(runCli({"demo", "example-1-5", "--out", o}), 0);
    auto r = result(o);
    EXPECT_EQ(r["cyclic_at_0"], "yes");
    EXPECT_EQ(r["cyclic_at_pi"], "no");
    auto doc = disclab::io::readJsonFile(o);
    EXPECT_EQ(doc["schema_version"], 1);
    EXPECT_EQ(doc["manifest"]["command"], "demo example-1-5");
}

TEST(Cli, MissingFileIsInputError) {
    EXPECT_EQ(runCli({"core", "--weight", "/nonexistent/w.json"}), 2);
}

TEST(Cli, BadFlagIsInputError) {
    EXPECT_EQ(runCli({"core", "--weight", kData + "/weights/one.json", "--level", "0"}), 2);
    EXPECT_EQ(runCli({"nosuchcommand"}), 2);
}

TEST(Cli, BoundaryAtomIsInconclusive) {
    auto o = out("edge.json");
    EXPECT_EQ(runCli({"oracle", "cyclic", "--measure", kData + "/measures/atom_on_core_boundary.json", "--weight",
                      kData + "/weights/example_1_5.json", "--level", "14", "--out", o}),
              3);
    EXPECT_EQ(result(o)["verdict"], "inconclusive");
}

TEST(Cli, IllConditionedTaylorIsNumericalFailure) {
    EXPECT_EQ(runCli({"taylor", "--of", "inner:" + kData + "/measures/delta_0.json", "--N", "512", "--r", "0.9",
                      "--out", out("ill.csv")}),
              4);
}

TEST(Cli, HbTableExitCodes) {
    auto o = out("hb.json");
    EXPECT_EQ(runCli({"oracle", "hb-exist", "--b", kData + "/symbols/outer.json", "--out", o}), 0);
    EXPECT_EQ(result(o)["verdict"], "yes");
    EXPECT_EQ(runCli({"oracle", "hb-dense", "--b", kData + "/symbols/outer_atom_0.json", "--out", o}), 0);
    EXPECT_EQ(result(o)["verdict"], "no");
    EXPECT_EQ(runCli({"oracle", "hb-dense", "--b", kData + "/symbols/outer_atom_pi.json", "--out", o}), 0);
    EXPECT_EQ(result(o)["verdict"], "yes");
    EXPECT_EQ(runCli({"oracle", "hb-dense", "--b", kData + "/symbols/inner_atom_0.json", "--out", o}), 0);
    EXPECT_EQ(runCli({"oracle", "hb-dense", "--b", kData + "/symbols/unimodular_constant.json", "--out", o}), 3);
    EXPECT_EQ(result(o)["verdict"], "inconclusive");
}

TEST(Cli, ManifestRecordsInputsAndReproduces) {
    auto a = out("m1.csv"), b = out("m2.csv");
    ASSERT_EQ(runCli({"moments", "--G", kData + "/radial/t1.json", "--N", "40", "--out", a}), 0);
    ASSERT_EQ(runCli({"moments", "--G", kData + "/radial/t1.json", "--N", "40", "--out", b}), 0);
    std::string ta = slurp(a), tb = slurp(b);
    EXPECT_EQ(ta.rfind("# schema_version: 1\n# manifest: {", 0), 0u);
    EXPECT_NE(ta.find("\"sha256\":\""), std::string::npos);
    // argv differs only in the output path
    auto body = [](const std::string& s) { return s.substr(s.find("\nn,")); };
    EXPECT_EQ(body(ta), body(tb));
}

TEST(Cli, JsonOutputsReproduceByteForByte) {
    auto o = out("rep.json");
    std::string first, second;
    for (std::string* dst : {&first, &second}) {
        ASSERT_EQ(runCli({"oracle", "permanence", "--measure", kData + "/measures/split_atoms.json", "--weight",
                          kData + "/weights/example_1_5.json", "--out", o}),
                  0);
        auto doc = disclab::io::readJsonFile(o);
        doc["manifest"].erase("wall_time_s");
        *dst = doc.dump();
    }
    EXPECT_EQ(first, second);
}

TEST(Cli, SeqspaceAndTaylorPipeline) {
    auto coeffs = out("e.csv"), verdict = out("rsd.json");
    ASSERT_EQ(runCli({"taylor", "--of", "exp-sqrt:2", "--N", "256", "--out", coeffs}), 0);
    ASSERT_EQ(runCli({"seqspace", "rsd", "--f", coeffs, "--window", "64..256", "--out", verdict}), 0);
    EXPECT_EQ(result(verdict)["verdict"], "rsd");
    ASSERT_EQ(runCli({"seqspace", "identity", "--G", kData + "/radial/t1.json", "--f", coeffs, "--out", verdict}), 0);
    EXPECT_LE(result(verdict)["relative_error"].get<double>(), 1e-6);
}

TEST(Cli, HatBuildAndVerify) {
    auto prof = out("profile.json"), table = out("table.csv");
    ASSERT_EQ(runCli({"hat", "build", "--F", kData + "/majorants/inverse_t.json", "--out", prof}), 0);
    EXPECT_EQ(result(prof)["n0"], 3);
    ASSERT_EQ(runCli({"hat", "verify", "--profile", kData + "/profiles/x_squared.json", "--walks", "2000", "--t", "0.9",
                      "--out", table}),
              0);
    EXPECT_NE(slurp(table).find("t,estimate,std_error,bound,full_width_bound,pass"), std::string::npos);
}
