#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "algokit/cli.hpp"
#include "algokit/tabular/fixture.hpp"

using namespace algokit;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("algokit-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string file(const std::string& name, const std::string& contents) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << contents;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, SortMergeExample) {
    const auto r = run({"sort", "--algo", "merge"}, "38 27 43 3 9 82 10");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3 9 10 27 38 43 82\n");
}

TEST(Cli, SortAcceptsCommasAndReportsStats) {
    const auto r = run({"sort", "--algo", "selection", "--stats"}, "64,25,12,22,11");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "11 12 22 25 64\ncomparisons=10 swaps=3 passes=4\n");
}

TEST(Cli, SortEveryAlgorithm) {
    for (SortAlgorithm a : all_sort_algorithms) {
        const auto r = run({"sort", "--algo", std::string(to_string(a))}, "5 2 4 6 1 3");
        EXPECT_EQ(r.out, "1 2 3 4 5 6\n") << to_string(a);
    }
}

TEST(Cli, SortReadsFile) {
    TempDir d;
    const auto r = run({"sort", "--algo", "insertion", d.file("in.txt", "3\n1\n2\n")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 2 3\n");
    EXPECT_EQ(run({"sort", "--algo", "insertion", d.path("missing.txt")}).code, 1);
}

TEST(Cli, UnknownAlgorithmIsUsageError) {
    const auto r = run({"sort", "--algo", "nosuch"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"sort"}).code, 2);
    EXPECT_EQ(run({"sort", "--algo", "merge", "--bogus"}).code, 2);
    EXPECT_EQ(run({"classics", "factorial"}).code, 2);
    EXPECT_EQ(run({"classics", "factorial", "--bogus"}).code, 2);
    EXPECT_EQ(run({"classics", "nosuch", "1"}).code, 2);
    EXPECT_EQ(run({"table", "run", "--csv", "x.csv"}).code, 2);
}

TEST(Cli, BadInputIsDomainError) {
    const auto r = run({"sort", "--algo", "merge"}, "1 two 3");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
    for (std::vector<std::string> args : {std::vector<std::string>{"--help"}, {"sort", "--help"}, {"search", "--help"},
                                          {"classics", "--help"}, {"growth", "classify", "--help"}, {"bench", "--help"},
                                          {"table", "query", "--help"}, {"exercises", "--help"}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 0);
        EXPECT_NE(r.out.find("Usage"), std::string::npos) << r.out;
    }
}

TEST(Cli, SearchExamples) {
    EXPECT_EQ(run({"search", "--algo", "binary", "--target", "20"}, "5 10 15 20 30").out, "3\n");
    EXPECT_EQ(run({"search", "--algo", "linear", "--target", "20"}, "10 30 20 5 15").out, "2\n");
    EXPECT_EQ(run({"search", "--algo", "linear", "--target", "99"}, "10 30").out, "-1\n");
    EXPECT_EQ(run({"search", "--algo", "binary", "--target", "1", "--verify-sorted"}, "3 1 2").code, 1);
}

TEST(Cli, ClassicsOutputs) {
    EXPECT_EQ(run({"classics", "factorial", "5"}).out, "120\n");
    EXPECT_EQ(run({"classics", "fibonacci", "6", "--mode", "recursive"}).out, "8\n");
    EXPECT_EQ(run({"classics", "sum_list", "1", "2", "3", "4", "5"}).out, "15\n");
    EXPECT_EQ(run({"classics", "power", "-3", "3"}).out, "-27\n");
    EXPECT_EQ(run({"classics", "reverse_shift", "abcdef"}).out, "gfedcb\n");
    EXPECT_EQ(run({"classics", "ascii_sum", "A"}).out, "65\n");
    EXPECT_EQ(run({"classics", "is_prime", "97"}).out, "True\n");
    EXPECT_EQ(run({"classics", "prime_factors", "12"}).out, "[2, 2, 3]\n");
    EXPECT_EQ(run({"classics", "digits_to_list", "12345"}).out, "[1, 2, 3, 4, 5]\n");
    EXPECT_EQ(run({"classics", "hanoi", "2"}).out,
              "move disk 1: A -> B\nmove disk 2: A -> C\nmove disk 1: B -> C\n");
    EXPECT_EQ(run({"classics", "transpose", "1,2;3,4"}).out, "1 3\n2 4\n");
    EXPECT_EQ(run({"classics", "matmul", "1,2", "3;4"}).out, "11\n");
    EXPECT_EQ(run({"classics", "star_pyramid", "3"}).out, "*\n* *\n* * *\n");
    EXPECT_EQ(run({"classics", "iter_suite", "3"}).out, "sum=6\nevens=[2]\nsum_of_squares=14\ncountdown=\n3\n2\n1\n");
    EXPECT_EQ(run({"classics", "sort_text", "banana"}).out, "aaabnn\n");
    EXPECT_EQ(run({"classics", "deep_bubble_sort", "[[2,1],[0]]"}).out, "[[0], [1, 2]]\n");
}

TEST(Cli, ClassicsErrors) {
    EXPECT_EQ(run({"classics", "factorial", "21"}).code, 1);
    EXPECT_EQ(run({"classics", "gcd", "0", "0"}).code, 1);
    EXPECT_EQ(run({"classics", "factorial", "x"}).code, 1);
}

TEST(Cli, GrowthClassify) {
    const auto r = run({"growth", "classify", "--f", "n^2 + 3n", "--g", "n^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "relations: O Theta Omega\nratio: finite-positive\nupper witness: c=4 n0=1\nlower witness: c=1 n0=1\n");
    const auto o = run({"growth", "classify", "--f", "log n", "--g", "sqrt n"});
    EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "relations: O o");
    EXPECT_EQ(run({"growth", "classify", "--f", "n +", "--g", "n"}).code, 1);
}

TEST(Cli, GrowthCheck) {
    EXPECT_EQ(run({"growth", "check", "--f", "2n+1", "--g", "n", "--bound", "upper", "--c", "3", "--n0", "1"}).out,
              "holds\n");
    EXPECT_EQ(run({"growth", "check", "--f", "n^2", "--g", "n", "--c", "100", "--n0", "1"}).out, "fails\n");
}

TEST(Cli, BenchWritesCsvAndFits) {
    TempDir d;
    const std::string csv = d.path("bench.csv");
    const auto r = run({"bench", "--algo", "merge", "--sizes", "16,32,64", "--reps", "3", "--out", csv});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const std::string text = slurp(csv);
    EXPECT_EQ(text.rfind("n,seconds,reps\n16,", 0), 0u) << text;

    const std::string synthetic = d.file("synthetic.csv", "n,seconds,reps\n1,1,3\n2,4,3\n4,16,3\n");
    EXPECT_EQ(run({"bench", "fit", "--in", synthetic}).out, "2.0000\n");
    EXPECT_EQ(run({"bench", "--algo", "heap"}).code, 2);
    EXPECT_EQ(run({"bench"}).code, 2);
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("ALGOKIT_SEED", "7", 1);
    const auto a = run({"sort", "--algo", "quick-random", "--stats"}, "9 8 7 6 5 4 3 2 1 0 11 12 -4");
    const auto b = run({"sort", "--algo", "quick-random", "--stats", "--seed", "7"}, "9 8 7 6 5 4 3 2 1 0 11 12 -4");
    EXPECT_EQ(a.out, b.out);
    ::setenv("ALGOKIT_SEED", "seven", 1);
    EXPECT_EQ(run({"sort", "--algo", "quick-random"}, "2 1").code, 1);
    EXPECT_EQ(run({"sort", "--algo", "quick-random", "--seed", "3"}, "2 1").code, 0);
    ::unsetenv("ALGOKIT_SEED");
}

TEST(Cli, TableQueryPresets) {
    TempDir d;
    const std::string csv = d.file("m.csv", std::string(tabular::migration_fixture_csv));
    const auto q2 = run({"table", "query", "--csv", csv, "--preset", "q2", "--year", "2000"});
    EXPECT_EQ(q2.code, 0);
    EXPECT_EQ(q2.out, "origin_country,dest_country,2000\nGhana,Nigeria,95000\nNigeria,Cameroon,62000\nNigeria,Ghana,25000\n");

    const std::string chart = d.path("q3.chart");
    EXPECT_EQ(run({"table", "query", "--csv", csv, "--preset", "q3", "--out", chart}).code, 0);
    EXPECT_EQ(slurp(chart), slurp(std::string(ALGOKIT_SOURCE_DIR) + "/tests/golden/q3_2000.chart"));

    const auto q4 = run({"table", "query", "--csv", csv, "--preset", "q4"});
    EXPECT_EQ(q4.out, slurp(std::string(ALGOKIT_SOURCE_DIR) + "/tests/golden/q4_nigeria_ghana.chart") +
                          slurp(std::string(ALGOKIT_SOURCE_DIR) + "/tests/golden/q4_ghana_nigeria.chart"));

    EXPECT_EQ(run({"table", "query", "--csv", csv, "--preset", "q5"}).code, 2);
    EXPECT_EQ(run({"table", "query", "--csv", csv, "--preset", "q1", "--year", "1955"}).code, 1);
}

TEST(Cli, TableRunAndInspect) {
    TempDir d;
    const std::string csv = d.file("m.csv", std::string(tabular::migration_fixture_csv));
    const auto r = run({"table", "run", "--csv", csv, "--ops", "filter:origin_country=Ghana\nselect:dest_country,1960"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "dest_country,1960\nNigeria,90000\nUnited Kingdom,8000\n");

    const std::string script = d.file("ops.txt", "sort:1960:desc\nhead:1\nselect:origin_country\n");
    EXPECT_EQ(run({"table", "run", "--csv", csv, "--ops-file", script}).out, "origin_country\n\"Korea, Rep.\"\n");
    EXPECT_EQ(run({"table", "run", "--csv", csv, "--ops", "explode:1"}).code, 1);

    const auto i = run({"table", "inspect", "--csv", csv, "--head", "1"});
    EXPECT_EQ(i.code, 0);
    EXPECT_EQ(i.out.rfind("shape: (12, 9)\norigin_country: Text, 0 null\n", 0), 0u) << i.out;
}

TEST(Cli, ExercisesAllPass) {
    const auto r = run({"exercises"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_GE(cli::all_golden_cases().size(), 25u);
    EXPECT_EQ(run({"exercises"}).out, r.out);
}
