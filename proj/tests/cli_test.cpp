#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "pavings/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_shell(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// stdout only
RunResult cli(const std::string& args) {
    return run_shell(std::string(PAVINGS_CLI_PATH) + " " + args + " 2>/dev/null");
}

// stdout and stderr interleaved
RunResult cli_all(const std::string& args) {
    return run_shell(std::string(PAVINGS_CLI_PATH) + " " + args + " 2>&1");
}

std::string fixture(const std::string& name) {
    return std::string(PAVINGS_FIXTURES_DIR) + "/" + name;
}

} // namespace

TEST(Cli, RootedTable) {
    const RunResult r = cli("rooted --max-darts 8");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              " darts  rooted\n"
              "     2  1\n"
              "     4  4\n"
              "     6  25\n"
              "     8  208\n");
}

TEST(Cli, RootedBfileAndFlagPositions) {
    const std::string expected = "1 1\n2 4\n3 25\n4 208\n";
    const RunResult before = cli("--format bfile rooted --max-darts 8");
    const RunResult after = cli("rooted --max-darts 8 --format bfile");
    EXPECT_EQ(before.status, 0);
    EXPECT_EQ(before.out, expected);
    EXPECT_EQ(after.status, 0);
    EXPECT_EQ(after.out, expected);
}

TEST(Cli, RootedOddBoundRoundsDown) {
    const RunResult r = cli("rooted --max-darts 9 --format bfile");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1 1\n2 4\n3 25\n4 208\n");
}

TEST(Cli, RootedMethodsAgreeUnderVerify) {
    EXPECT_EQ(cli("rooted --max-darts 16 --method recurrence --verify").status, 0);
    EXPECT_EQ(cli("rooted --max-darts 16 --method series --verify").status, 0);
}

TEST(Cli, RootedOracle) {
    const RunResult r = cli("rooted --max-darts 6 --method oracle --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "darts,rooted\n2,1\n4,4\n6,25\n");
}

TEST(Cli, RootedJson) {
    const RunResult r = cli("rooted --max-darts 4 --format json");
    EXPECT_EQ(r.status, 0);
    const pavings::json j = pavings::json::parse(r.out);
    EXPECT_EQ(j["name"], "rooted");
    ASSERT_EQ(j["rows"].size(), 2u);
    EXPECT_EQ(j["rows"][1]["darts"], 4);
    EXPECT_EQ(j["rows"][1]["value"], "4");
}

TEST(Cli, UnlabeledCycleIndex) {
    const RunResult r = cli("unlabeled --max-darts 10 --format bfile");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1 1\n2 4\n3 11\n4 60\n5 318\n");
}

TEST(Cli, UnlabeledOracleAgrees) {
    const RunResult r = cli("unlabeled --max-darts 6 --method oracle --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "darts,unlabeled\n2,1\n4,4\n6,11\n");
}

TEST(Cli, WorkersFlagAndEnvDoNotChangeAnswers) {
    const std::string expect = "1 1\n2 4\n3 25\n";
    EXPECT_EQ(cli("rooted --max-darts 6 --method oracle --format bfile --workers 3").out, expect);
    const RunResult env = run_shell(std::string("PAVINGS_WORKERS=2 ") + PAVINGS_CLI_PATH +
                                    " rooted --max-darts 6 --method oracle --format bfile"
                                    " 2>/dev/null");
    EXPECT_EQ(env.status, 0);
    EXPECT_EQ(env.out, expect);
}

TEST(Cli, EnumerateClassifiedTable) {
    const RunResult r = cli("enumerate --darts 4 --up-to-iso");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "darts:              4\n"
              "total triples:      27\n"
              "transitive triples: 24\n"
              "rooted count:       4\n"
              "isomorphism classes: 4\n"
              "  class 1: f = (2, 2, 1, 1)\n"
              "  class 2: f = (1, 1, 1, 1)\n"
              "  class 3: f = (1, 1, 2, 2)\n"
              "  class 4: f = (2, 1, 1, 2)\n");
}

TEST(Cli, EnumerateWritesRepresentativeFiles) {
    const fs::path dir = fs::temp_directory_path() / "pavings_cli_enum_out";
    fs::remove_all(dir);
    const RunResult r = cli("enumerate --darts 4 --up-to-iso --out " + dir.string());
    EXPECT_EQ(r.status, 0);
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) names.push_back(entry.path().filename());
    std::sort(names.begin(), names.end());
    const std::vector<std::string> expected = {"paving_4_001.json", "paving_4_002.json",
                                               "paving_4_003.json", "paving_4_004.json"};
    EXPECT_EQ(names, expected);
    // each file parses back into a valid 4-dart paving
    for (const std::string& name : expected) {
        const pavings::Paving p =
            pavings::paving_from_json(pavings::read_json_path((dir / name).string()));
        EXPECT_EQ(p.n, 4);
    }
    fs::remove_all(dir);
}

TEST(Cli, EnumerateRejectsOddAndOversized) {
    EXPECT_EQ(cli_all("enumerate --darts 5").status, 1);
    const RunResult r = cli_all("enumerate --darts 14");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("error:"), std::string::npos);
    EXPECT_NE(r.out.find("limit"), std::string::npos);
}

TEST(Cli, AnalyzeTable) {
    const RunResult r = cli("analyze --input " + fixture("thurston.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "darts:                24\n"
              "f-vector (f0..f3):    (1, 2, 4, 2)\n"
              "complexity:           -1\n"
              "euler characteristic: 1\n"
              "connected:            yes\n"
              "underlying map:       2 component(s), 8 vertices, 12 edges, 8 faces\n"
              "genus per component:  0 0\n");
}

TEST(Cli, AnalyzeJson) {
    const RunResult r = cli("analyze --input " + fixture("p2.json") + " --format json");
    EXPECT_EQ(r.status, 0);
    const pavings::json j = pavings::json::parse(r.out);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["stats"]["f0"], 2);
    EXPECT_EQ(j["stats"]["euler_characteristic"], 0);
    EXPECT_TRUE(j["stats"]["connected"].get<bool>());
}

TEST(Cli, AnalyzeRejectsAxiomViolations) {
    const fs::path bad = fs::temp_directory_path() / "pavings_cli_bad_paving.json";
    std::ofstream(bad) << R"({"n": 2, "alpha": [1, 2], "beta": [2, 1], "gamma": [2, 1]})";
    const RunResult r = cli_all("analyze --input " + bad.string());
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("error:"), std::string::npos);
    EXPECT_NE(r.out.find("alpha"), std::string::npos);
    fs::remove(bad);
}

TEST(Cli, MirrorDouble) {
    const RunResult r = cli("mirror-double --map " + fixture("map_single_edge.json") +
                            " --format json");
    EXPECT_EQ(r.status, 0);
    const pavings::json j = pavings::json::parse(r.out);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["stats"]["complexity"], 0);

    const fs::path out = fs::temp_directory_path() / "pavings_cli_doubled.json";
    fs::remove(out);
    const RunResult t = cli("mirror-double --map " + fixture("map_torus.json") + " --out " +
                            out.string() + " --format json");
    EXPECT_EQ(t.status, 0);
    EXPECT_EQ(pavings::json::parse(t.out)["stats"]["complexity"], 2);
    const pavings::Paving doubled = pavings::paving_from_json(pavings::read_json_path(out.string()));
    EXPECT_EQ(doubled.n, 8);
    fs::remove(out);
}

TEST(Cli, VerifySuite) {
    const RunResult ok = cli("verify --max-darts 4");
    EXPECT_EQ(ok.status, 0);
    EXPECT_NE(ok.out.find("PASS  rooted-recurrence-vs-series"), std::string::npos);
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);

    const RunResult bad = cli_all("verify --max-darts 4 --inject-fault");
    EXPECT_EQ(bad.status, 1);
    EXPECT_NE(bad.out.find("FAIL  fault-injection"), std::string::npos);
}

TEST(Cli, CompareAgainstEmbeddedTerms) {
    const RunResult rooted = cli("compare --oeis A005411");
    EXPECT_EQ(rooted.status, 0);
    EXPECT_EQ(rooted.out, "A005411: all 19 terms match\n");

    const RunResult unl = cli("compare --oeis A002831 --max-n 6");
    EXPECT_EQ(unl.status, 0);
    EXPECT_EQ(unl.out, "A002831: all 6 terms match\n");

    const RunResult file = cli("compare --oeis A005411 --bfile " + fixture("b005411.txt"));
    EXPECT_EQ(file.status, 0);
}

TEST(Cli, CompareReportsFirstMismatch) {
    const fs::path bad = fs::temp_directory_path() / "pavings_cli_bad_bfile.txt";
    std::ofstream(bad) << "1 1\n2 5\n3 25\n";
    const RunResult r = cli_all("compare --oeis A005411 --bfile " + bad.string());
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("first mismatch at n = 2"), std::string::npos);
    fs::remove(bad);
}

TEST(Cli, AsymptoticTable) {
    const RunResult r = cli("asympt --max-k 6 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("kind,k,exact,asymptote,ratio\n", 0), 0u);
    EXPECT_NE(r.out.find("rooted,1,1,"), std::string::npos);
    EXPECT_NE(r.out.find("unlabeled,6,2806,"), std::string::npos);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    EXPECT_EQ(lines, 13); // header + 6 rooted + 6 unlabeled
}

TEST(Cli, UsageErrors) {
    EXPECT_NE(cli_all("").status, 0);                          // subcommand required
    EXPECT_NE(cli_all("rooted --method nope").status, 0);      // not in the method list
    EXPECT_NE(cli_all("analyze").status, 0);                   // --input required
    EXPECT_NE(cli_all("compare --oeis A000001").status, 0);    // unknown sequence id
    EXPECT_EQ(cli_all("analyze --input /nonexistent.json").status, 1);
}
