#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "algokit/error.hpp"
#include "algokit/search.hpp"
#include "algokit/sort.hpp"

namespace algokit::asymptotics {

/// Median wall-clock seconds for one input size.
struct TimingSample {
    std::uint64_t n = 0;
    double seconds = 0.0;
    std::uint64_t reps = 0;

    friend bool operator==(const TimingSample&, const TimingSample&) = default;
};

enum class InputDistribution { random, sorted, reversed, nearly_sorted };

inline std::string_view to_string(InputDistribution d) {
    switch (d) {
        case InputDistribution::random: return "random";
        case InputDistribution::sorted: return "sorted";
        case InputDistribution::reversed: return "reversed";
        case InputDistribution::nearly_sorted: return "nearly-sorted";
    }
    return "?";
}

inline std::optional<InputDistribution> parse_distribution(std::string_view s) {
    for (auto d : {InputDistribution::random, InputDistribution::sorted, InputDistribution::reversed,
                   InputDistribution::nearly_sorted}) {
        if (to_string(d) == s) return d;
    }
    return std::nullopt;
}

inline constexpr Key bench_key_bound = 1'000'000;

/// Deterministic input of length n. Keys are uniform in [-10^6, 10^6]; "nearly-sorted"
/// is the sorted sequence with ceil(n/20) random adjacent transpositions.
inline KeySequence generate_input(std::uint64_t n, InputDistribution dist, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Key> key(-bench_key_bound, bench_key_bound);
    KeySequence keys(n);
    for (Key& k : keys) k = key(rng);
    switch (dist) {
        case InputDistribution::random: break;
        case InputDistribution::sorted: std::sort(keys.begin(), keys.end()); break;
        case InputDistribution::reversed: std::sort(keys.begin(), keys.end(), std::greater<>{}); break;
        case InputDistribution::nearly_sorted: {
            std::sort(keys.begin(), keys.end());
            if (n >= 2) {
                const std::uint64_t swaps = (n + 19) / 20;
                for (std::uint64_t s = 0; s < swaps; ++s) {
                    const std::size_t i = static_cast<std::size_t>(rng() % (n - 1));
                    std::swap(keys[i], keys[i + 1]);
                }
            }
            break;
        }
    }
    return keys;
}

/// Benchmark identifiers: every sort identifier plus "search-linear" and "search-binary".
/// A search repetition answers `search_probes_per_rep` queries for absent keys (worst case).
inline constexpr std::size_t search_probes_per_rep = 256;

inline std::vector<std::string> bench_algorithms() {
    std::vector<std::string> ids;
    for (SortAlgorithm a : all_sort_algorithms) ids.emplace_back(to_string(a));
    ids.emplace_back("search-linear");
    ids.emplace_back("search-binary");
    return ids;
}

namespace detail {

inline std::atomic<bool>& bench_running() {
    static std::atomic<bool> flag{false};
    return flag;
}

class ExclusiveBenchmark {
public:
    ExclusiveBenchmark() {
        bool expected = false;
        if (!bench_running().compare_exchange_strong(expected, true))
            throw Error("a benchmark is already running in this process");
    }
    ~ExclusiveBenchmark() { bench_running().store(false); }
    ExclusiveBenchmark(const ExclusiveBenchmark&) = delete;
    ExclusiveBenchmark& operator=(const ExclusiveBenchmark&) = delete;
};

// Keeps results observable so the optimiser cannot drop the measured work.
inline volatile std::uint64_t bench_sink = 0;

}  // namespace detail

inline constexpr double min_sample_seconds = 0.03;
inline constexpr std::uint64_t max_batch = 1u << 16;
/// Distinct inputs cycled through within a batch, so repeated runs do not replay one
/// branch pattern the predictor can memorise.
inline constexpr std::uint64_t max_input_pool = 64;

namespace detail {

/// One benchmark size: its inputs, probe keys, and the calibrated batch length.
struct BenchCase {
    std::uint64_t n = 0;
    std::vector<KeySequence> inputs;
    KeySequence probes;
    std::uint64_t batch = 1;
    std::vector<double> times;
};

}  // namespace detail

/// Times `algo` on generated inputs and records the median per-run time for each size.
/// Inputs are generated outside the timed region. A warm-up per size calibrates a batch
/// so one timed sample spans at least `min_sample_seconds`; the `reps` samples are then
/// taken round-robin across sizes so slow periods on a shared machine hit every size
/// alike. Only one benchmark may run per process at a time.
inline std::vector<TimingSample> time_algorithm(std::string_view algo, std::span<const std::uint64_t> sizes,
                                                InputDistribution dist, std::uint64_t reps, std::uint64_t seed) {
    const auto sort_id = parse_sort_algorithm(algo);
    const bool linear = algo == "search-linear";
    const bool binary = algo == "search-binary";
    if (!sort_id && !linear && !binary) throw DomainError("unknown algorithm identifier: " + std::string(algo));
    if (sizes.empty()) throw DomainError("benchmark needs at least one size");
    if (!std::is_sorted(sizes.begin(), sizes.end(), std::less_equal<>{}))
        throw DomainError("benchmark sizes must be strictly increasing");
    if (reps < 3) throw DomainError("benchmark needs at least 3 repetitions");

    detail::ExclusiveBenchmark guard;
    auto run_once = [&](const KeySequence& input, const KeySequence& probes) {
        if (sort_id) {
            auto out = run_sort(*sort_id, input, seed);
            detail::bench_sink = detail::bench_sink + out.comparisons;
        } else {
            std::uint64_t hits = 0;
            for (Key p : probes) {
                hits += linear ? linear_search(input, p).found() : binary_search(input, p).found();
            }
            detail::bench_sink = detail::bench_sink + hits;
        }
    };
    auto time_batch = [&](const detail::BenchCase& c) {
        const auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t b = 0; b < c.batch; ++b) run_once(c.inputs[b % c.inputs.size()], c.probes);
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::vector<detail::BenchCase> cases;
    for (std::uint64_t n : sizes) {
        detail::BenchCase c;
        c.n = n;
        auto make_input = [&](std::uint64_t k) {
            KeySequence input = generate_input(n, dist, seed + k);
            if (binary) std::sort(input.begin(), input.end());
            return input;
        };
        c.inputs.push_back(make_input(0));
        if (linear || binary) {
            // Keys outside the generated range are never present.
            for (std::size_t i = 0; i < search_probes_per_rep; ++i)
                c.probes.push_back(bench_key_bound + 1 + static_cast<Key>(i));
        }
        while (time_batch(c) < min_sample_seconds && c.batch < max_batch) c.batch *= 2;
        for (std::uint64_t k = 1; k < std::min(c.batch, max_input_pool); ++k) c.inputs.push_back(make_input(k));
        time_batch(c);  // warm the freshly generated pool
        cases.push_back(std::move(c));
    }

    const double tick = std::chrono::duration<double>(std::chrono::steady_clock::duration(1)).count();
    for (std::uint64_t r = 0; r < reps; ++r) {
        for (auto& c : cases) {
            const double s = time_batch(c) / static_cast<double>(c.batch);
            // A zero reading means the run fit inside one clock tick; report one tick.
            c.times.push_back(s > 0 ? s : tick);
        }
    }

    std::vector<TimingSample> samples;
    for (auto& c : cases) {
        std::sort(c.times.begin(), c.times.end());
        const double median =
            reps % 2 == 1 ? c.times[reps / 2] : 0.5 * (c.times[reps / 2 - 1] + c.times[reps / 2]);
        samples.push_back({c.n, median, reps});
    }
    return samples;
}

/// Least-squares slope of log2(seconds) against log2(n).
inline double fit_slope(std::span<const TimingSample> samples) {
    if (samples.size() < 3) throw DomainError("slope fit needs at least 3 samples");
    std::set<std::uint64_t> distinct;
    for (const auto& s : samples) {
        if (s.n == 0 || !(s.seconds > 0)) throw DomainError("slope fit needs n > 0 and seconds > 0");
        distinct.insert(s.n);
    }
    if (distinct.size() != samples.size()) throw DomainError("slope fit needs distinct sizes");
    double mx = 0, my = 0;
    for (const auto& s : samples) {
        mx += std::log2(static_cast<double>(s.n));
        my += std::log2(s.seconds);
    }
    const auto count = static_cast<double>(samples.size());
    mx /= count;
    my /= count;
    double sxy = 0, sxx = 0;
    for (const auto& s : samples) {
        const double dx = std::log2(static_cast<double>(s.n)) - mx;
        sxy += dx * (std::log2(s.seconds) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

/// Writes "n,seconds,reps" rows under a header line.
inline void write_samples_csv(std::ostream& os, std::span<const TimingSample> samples) {
    os << "n,seconds,reps\n";
    for (const auto& s : samples) {
        std::ostringstream secs;
        secs.precision(9);
        secs << s.seconds;
        os << s.n << ',' << secs.str() << ',' << s.reps << '\n';
    }
}

inline std::vector<TimingSample> read_samples_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("benchmark file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,seconds,reps") throw ParseError("benchmark file must start with header n,seconds,reps");
    std::vector<TimingSample> samples;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        TimingSample s;
        char c1 = 0, c2 = 0;
        if (!(fields >> s.n >> c1 >> s.seconds >> c2 >> s.reps) || c1 != ',' || c2 != ',' || !(fields >> std::ws).eof())
            throw ParseError("malformed benchmark row " + std::to_string(row));
        samples.push_back(s);
    }
    return samples;
}

}  // namespace algokit::asymptotics
