#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "algokit/asymptotics/bench.hpp"

using namespace algokit;
using namespace algokit::asymptotics;

namespace {

std::vector<TimingSample> synthetic(std::initializer_list<std::uint64_t> sizes, double (*cost)(double)) {
    std::vector<TimingSample> out;
    for (std::uint64_t n : sizes) out.push_back({n, cost(static_cast<double>(n)) * 1e-9, 5});
    return out;
}

}  // namespace

TEST(GenerateInput, DeterministicPerSeed) {
    for (auto d : {InputDistribution::random, InputDistribution::sorted, InputDistribution::reversed,
                   InputDistribution::nearly_sorted}) {
        EXPECT_EQ(generate_input(500, d, 7), generate_input(500, d, 7));
        EXPECT_NE(generate_input(500, d, 7), generate_input(500, d, 8));
    }
}

TEST(GenerateInput, Distributions) {
    const auto r = generate_input(2000, InputDistribution::random, 1);
    ASSERT_EQ(r.size(), 2000u);
    for (Key k : r) ASSERT_LE(std::abs(k), bench_key_bound);
    EXPECT_FALSE(std::is_sorted(r.begin(), r.end()));

    const auto s = generate_input(2000, InputDistribution::sorted, 1);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    auto rs = r;
    std::sort(rs.begin(), rs.end());
    EXPECT_EQ(rs, s);  // same multiset as the random draw

    const auto v = generate_input(2000, InputDistribution::reversed, 1);
    EXPECT_TRUE(std::is_sorted(v.rbegin(), v.rend()));

    const auto ns = generate_input(2000, InputDistribution::nearly_sorted, 1);
    std::size_t descents = 0;
    for (std::size_t i = 1; i < ns.size(); ++i) descents += ns[i] < ns[i - 1];
    EXPECT_GT(descents, 0u);
    EXPECT_LE(descents, 100u);

    EXPECT_TRUE(generate_input(0, InputDistribution::nearly_sorted, 1).empty());
    EXPECT_EQ(generate_input(1, InputDistribution::nearly_sorted, 1).size(), 1u);
}

TEST(Distribution, NamesRoundTrip) {
    for (auto d : {InputDistribution::random, InputDistribution::sorted, InputDistribution::reversed,
                   InputDistribution::nearly_sorted})
        EXPECT_EQ(parse_distribution(to_string(d)), d);
    EXPECT_FALSE(parse_distribution("shuffled"));
}

TEST(FitSlope, SyntheticPowerLaws) {
    const auto quad = synthetic({512, 1024, 2048, 4096}, [](double n) { return n * n; });
    EXPECT_NEAR(fit_slope(quad), 2.0, 1e-6);
    const auto lin = synthetic({512, 1024, 2048, 4096}, [](double n) { return 3 * n; });
    EXPECT_NEAR(fit_slope(lin), 1.0, 1e-6);
    const auto nlogn =
        synthetic({1024, 2048, 4096, 8192, 16384}, [](double n) { return n * std::log2(n); });
    const double s = fit_slope(nlogn);
    EXPECT_GT(s, 1.0);
    EXPECT_LT(s, 1.4);
}

TEST(FitSlope, Errors) {
    EXPECT_THROW(fit_slope(synthetic({1, 2}, [](double n) { return n; })), DomainError);
    EXPECT_THROW(fit_slope(synthetic({4, 4, 8}, [](double n) { return n; })), DomainError);
    std::vector<TimingSample> zero{{1, 0.0, 3}, {2, 1.0, 3}, {4, 2.0, 3}};
    EXPECT_THROW(fit_slope(zero), DomainError);
}

TEST(SamplesCsv, RoundTrip) {
    const std::vector<TimingSample> s{{512, 0.000125, 5}, {1024, 0.0005, 5}, {2048, 0.002, 5}};
    std::stringstream io;
    write_samples_csv(io, s);
    EXPECT_EQ(io.str(), "n,seconds,reps\n512,0.000125,5\n1024,0.0005,5\n2048,0.002,5\n");
    EXPECT_EQ(read_samples_csv(io), s);
}

TEST(SamplesCsv, Errors) {
    std::istringstream empty("");
    EXPECT_THROW(read_samples_csv(empty), ParseError);
    std::istringstream header("size,time\n");
    EXPECT_THROW(read_samples_csv(header), ParseError);
    std::istringstream row("n,seconds,reps\n10,abc,3\n");
    EXPECT_THROW(read_samples_csv(row), ParseError);
}

TEST(TimeAlgorithm, RejectsBadArguments) {
    const std::vector<std::uint64_t> sizes{8, 16};
    EXPECT_THROW(time_algorithm("heap", sizes, InputDistribution::random, 3, 0), DomainError);
    EXPECT_THROW(time_algorithm("merge", {}, InputDistribution::random, 3, 0), DomainError);
    EXPECT_THROW(time_algorithm("merge", sizes, InputDistribution::random, 2, 0), DomainError);
    const std::vector<std::uint64_t> backwards{16, 8};
    EXPECT_THROW(time_algorithm("merge", backwards, InputDistribution::random, 3, 0), DomainError);
}

TEST(TimeAlgorithm, SingleSize) {
    const std::vector<std::uint64_t> sizes{1};
    const auto s = time_algorithm("merge", sizes, InputDistribution::random, 3, 0);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].n, 1u);
    EXPECT_EQ(s[0].reps, 3u);
    EXPECT_GT(s[0].seconds, 0.0);
}

TEST(TimeAlgorithm, EveryIdentifierRuns) {
    const std::vector<std::uint64_t> sizes{16, 32, 64};
    for (const auto& id : bench_algorithms()) {
        const auto s = time_algorithm(id, sizes, InputDistribution::nearly_sorted, 3, 1);
        ASSERT_EQ(s.size(), 3u) << id;
        for (const auto& x : s) EXPECT_GT(x.seconds, 0.0) << id;
    }
}

TEST(TimeAlgorithm, QuadraticCostGrowsWithSize) {
    const std::vector<std::uint64_t> sizes{256, 1024};
    const auto s = time_algorithm("bubble", sizes, InputDistribution::random, 3, 42);
    EXPECT_GT(s[1].seconds, s[0].seconds);
}
