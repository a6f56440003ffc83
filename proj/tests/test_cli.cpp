#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string &args) {
    const std::string cmd = std::string(HBCH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::string temp_file(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, Cosets) {
    auto r = run("cosets --n 91 --q 8");
    ASSERT_EQ(r.status, 0);
    auto l = lines(r.out);
    ASSERT_GE(l.size(), 11u);
    EXPECT_EQ(l[0], "n=91 q=8 multiplier=64 cosets=49");
    EXPECT_EQ(l[2], "Lambda_1 = {1,64}");
    EXPECT_EQ(l[10], "Lambda_9 = {9,30}");

    auto j = nlohmann::json::parse(run("--format json cosets --n 1023 --q 2").out);
    EXPECT_EQ(j.at("cosets").at(1), nlohmann::json::array({1, 4, 16, 64, 256}));

    EXPECT_EQ(run("cosets --n 10 --q 2").status, 2);
}

TEST(Cli, Bound) {
    auto r = run("bound --q 2 --s 5 --n1 93");
    ASSERT_EQ(r.status, 0);
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[1], "2 5 93 3 10 10 1 5 11 2");
    EXPECT_EQ(l[2], "L=10 source=brute_force");
    EXPECT_EQ(lines(run("--format csv bound --q 5 --s 2 --n1 48").out).at(1).substr(0, 15), "5,2,48,3a0,7,7,");
    auto j = nlohmann::json::parse(run("--format json bound --q 8 --s 2 --n1 91").out);
    EXPECT_EQ(j.at("L"), 10);
    EXPECT_EQ(j.at("aly_bound"), 8);
    EXPECT_EQ(run("bound --q 2 --s 5 --n1 94").status, 2);
    EXPECT_EQ(run("bound --q 2 --s 3 --n1 21 --budget 5").status, 2);
}

TEST(Cli, ConstructWorkedCodes) {
    struct Case {
        std::string args, first;
    };
    for (const auto &c : std::vector<Case>{
             {"--q 2 --s 5 --n1 93 --lambda 2 --cosets 1,2,3,5,6,7", "[[186,126,\\geq 9]]_2"},
             {"--q 5 --s 2 --n1 48 --lambda 2 --tau 7", "[[96,68,\\geq 8]]_5"},
             {"--q 5 --s 2 --n1 48 --lambda 2 --tau 6", "[[96,72,\\geq 7]]_5"},
             {"--q 8 --s 2 --n1 91 --tau 9", "[[91,55,\\geq 11]]_8"}}) {
        auto r = run("construct " + c.args);
        ASSERT_EQ(r.status, 0) << c.args;
        EXPECT_EQ(lines(r.out).at(0), c.first);
    }
}

TEST(Cli, ConstructLengthenAndRecord) {
    auto r = run("construct --q 2 --s 5 --n1 93 --lambda 2 --cosets 1,2,3,5,6,7 --lengthen 3");
    ASSERT_EQ(r.status, 0);
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 6u);
    EXPECT_EQ(l[1],
              "record: 2 186 126 9 construction=homothetic q=2 s=5 n1=93 lambda=2 cosets=[1,2,3,5,6,7] zero=false "
              "lengthened=0");
    EXPECT_EQ(l[2], "classical: n=186 rank=30 coset_size_sum=30 k_lower_bound=126 a_max=7 L=10 gram=zero");
    EXPECT_EQ(l[3], "[[187,126,\\geq 9]]_2");
    EXPECT_EQ(l[5], "[[189,126,\\geq 9]]_2");

    auto j = nlohmann::json::parse(run("--format json construct --q 8 --s 2 --n1 91 --tau 9 --lengthen 1").out);
    EXPECT_EQ(j.at("params").at("params"), "[[91,55,\\geq 11]]_8");
    EXPECT_EQ(j.at("rank"), 18);
    EXPECT_EQ(j.at("gram_zero"), true);
    EXPECT_EQ(j.at("lengthened").at(0).at("params"), "[[92,55,\\geq 11]]_8");
}

TEST(Cli, ConstructRejections) {
    EXPECT_EQ(run("construct --q 2 --s 5 --n1 93 --lambda 11 --tau 1").status, 2);
    EXPECT_EQ(run("construct --q 2 --s 5 --n1 93 --lambda 3 --tau 1 --zero").status, 2);
    EXPECT_EQ(run("construct --q 2 --s 5 --n1 93 --lambda 2 --cosets 1,2,3,5,6,7,9,11").status, 2);
    EXPECT_EQ(run("construct --q 6 --s 2 --n1 5 --tau 1").status, 2);
    EXPECT_EQ(run("construct --q 2 --s 5 --n1 93").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, DumpGeneratorReadsBack) {
    auto r = run("construct --q 5 --s 2 --n1 48 --lambda 2 --tau 7 --dump-generator");
    ASSERT_EQ(r.status, 0);
    auto l = lines(r.out);
    auto it = std::find(l.begin(), l.end(), "25 96 14");
    ASSERT_NE(it, l.end());
    EXPECT_EQ(l.end() - it, 15);
}

TEST(Cli, Examples) {
    auto r = run("examples");
    EXPECT_EQ(r.status, 0);
    auto l = lines(r.out);
    ASSERT_FALSE(l.empty());
    EXPECT_EQ(l.back(), "51/51 claims reproduced");
    for (std::size_t i = 0; i + 1 < l.size(); ++i) EXPECT_EQ(l[i].substr(0, 5), "PASS ") << l[i];

    auto j = nlohmann::json::parse(run("examples --json").out);
    EXPECT_EQ(j.at("all_pass"), true);
    EXPECT_EQ(j.at("claims").size(), 51u);
    for (const auto &c : j.at("claims")) {
        EXPECT_TRUE(c.contains("id") && c.contains("expected") && c.contains("actual") && c.contains("pass"));
    }
}

TEST(Cli, ExamplesFailWithCorruptedConwayTable) {
    std::ifstream in(HBCH_CONWAY_PATH);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const std::string good = "2 10 1 1 1 1 0 1 1 0 0 0 1";
    const auto pos = text.find(good);
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, good.size(), "2 10 1 0 0 0 0 0 0 0 0 0 1");  // x^10 + 1 is reducible
    const std::string path = temp_file("hbch_corrupt_conway.txt", text);

    auto r = run("--conway " + path + " examples");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("FAIL "), std::string::npos);
    auto j = nlohmann::json::parse(run("--conway " + path + " examples --json").out);
    EXPECT_EQ(j.at("all_pass"), false);
    // fields that do not use the corrupted entry are unaffected
    EXPECT_EQ(lines(run("--conway " + path + " construct --q 8 --s 2 --n1 91 --tau 9").out).at(0),
              "[[91,55,\\geq 11]]_8");
}

TEST(Cli, Scan) {
    auto pinned = run("scan --pinned");
    ASSERT_EQ(pinned.status, 0);
    auto l = lines(pinned.out);
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l[0].substr(0, 12), "2 186 126 9 ");

    auto empty = run("--format csv scan --q 2 --s 3 --lambda-max 9 --tau-max 5 --budget 0");
    EXPECT_EQ(empty.status, 0);
    EXPECT_EQ(lines(empty.out).size(), 1u);
    EXPECT_EQ(run("scan --q 2 --s 3 --lambda-max 9 --tau-max 5 --budget 2").status, 2);

    const std::string grid = "scan --q 2,3 --s 2,3 --n1-mode all --lambda-max 3 --tau-max 3 --zero";
    auto a = run("--format csv " + grid);
    auto b = run("--format csv " + grid + " --jobs 4");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_GT(lines(a.out).size(), 10u);

    auto j = nlohmann::json::parse(run("--format json scan --q 2 --s 3 --lambda-max 9 --tau-max 5").out);
    ASSERT_TRUE(j.is_array());
    EXPECT_FALSE(j.empty());
    for (const auto &p : j) EXPECT_TRUE(p.contains("params") && p.contains("provenance"));
}
