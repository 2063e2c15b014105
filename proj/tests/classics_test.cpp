#include <gtest/gtest.h>

#include <array>
#include <random>
#include <set>

#include "algokit/classics.hpp"
#include "support/oracles.hpp"

using namespace algokit;
using namespace algokit::classics;

TEST(Factorial, Examples) {
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(factorial(0), 1);
    std::int64_t product = 1;
    for (std::int64_t k = 2; k <= 20; ++k) product *= k;
    EXPECT_EQ(factorial(20), product);
    EXPECT_EQ(factorial(20), 2432902008176640000);
}

TEST(Factorial, Errors) {
    EXPECT_THROW(factorial(21), OverflowError);
    EXPECT_THROW(factorial(21, Mode::iterative), OverflowError);
    EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Fibonacci, Examples) {
    EXPECT_EQ(fibonacci(6), 8);
    EXPECT_EQ(fibonacci(0), 0);
    EXPECT_EQ(fibonacci(30), 832040);
    EXPECT_EQ(fibonacci(92), 7540113804746346429);
    EXPECT_THROW(fibonacci(93), OverflowError);
    EXPECT_THROW(fibonacci(31, Mode::recursive), DomainError);
}

TEST(ModeAgreement, FactorialFibonacciPalindrome) {
    for (std::int64_t n = 0; n <= 20; ++n) EXPECT_EQ(factorial(n, Mode::recursive), factorial(n, Mode::iterative));
    for (std::int64_t n = 0; n <= 25; ++n) EXPECT_EQ(fibonacci(n, Mode::recursive), fibonacci(n, Mode::iterative));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        std::string s(rng() % 9, 'a');
        for (char& c : s) c = static_cast<char>('a' + rng() % 3);
        if (t % 2 == 0) s += std::string(s.rbegin(), s.rend());
        const std::string reversed(s.rbegin(), s.rend());
        EXPECT_EQ(is_palindrome(s, Mode::recursive), s == reversed) << s;
        EXPECT_EQ(is_palindrome(s, Mode::iterative), s == reversed) << s;
    }
}

TEST(Power, Examples) {
    EXPECT_EQ(power(2, 10), 1024);
    EXPECT_EQ(power(5, 0), 1);
    EXPECT_EQ(power(-3, 3), -27);
    EXPECT_THROW(power(2, 63), OverflowError);
    EXPECT_THROW(power(2, -1), DomainError);
}

TEST(Power, MatchesRepeatedMultiplication) {
    for (std::int64_t b = -6; b <= 6; ++b) {
        std::int64_t acc = 1;
        for (std::int64_t e = 0; e <= 20; ++e) {
            EXPECT_EQ(power(b, e), acc) << b << "^" << e;
            acc *= b;
        }
    }
}

TEST(SumOfDigits, Examples) {
    EXPECT_EQ(sum_of_digits(0), 0);
    EXPECT_EQ(sum_of_digits(12345), 15);
    EXPECT_EQ(sum_of_digits(999), 27);
    for (std::int64_t n = 0; n < 5000; n += 7) {
        std::int64_t expected = 0;
        for (char c : std::to_string(n)) expected += c - '0';
        EXPECT_EQ(sum_of_digits(n), expected);
    }
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(gcd(7, 0), 7);
    EXPECT_EQ(gcd(17, 5), 1);
    EXPECT_THROW(gcd(0, 0), DomainError);
}

TEST(Gcd, MatchesDivisorSearch) {
    for (std::int64_t a = 0; a <= 60; ++a)
        for (std::int64_t b = 0; b <= 60; ++b)
            if (a || b) ASSERT_EQ(gcd(a, b), oracle::gcd_by_divisors(a, b)) << a << "," << b;
}

TEST(Hanoi, Examples) {
    const auto one = hanoi(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(to_string(one[0]), "move disk 1: A -> C");
    EXPECT_EQ(hanoi(3).size(), 7u);
    EXPECT_EQ(hanoi(10).size(), 1023u);
    EXPECT_THROW(hanoi(0), DomainError);
    EXPECT_THROW(hanoi(21), DomainError);
}

TEST(Hanoi, ReplayIsLegalAndSolves) {
    for (int n = 1; n <= 10; ++n) {
        std::vector<std::array<int, 3>> replay;
        for (const Move& m : hanoi(n)) replay.push_back({m.disk, m.from - 'A', m.to - 'A'});
        const auto r = oracle::replay_hanoi(n, replay);
        EXPECT_TRUE(r.legal) << n;
        EXPECT_TRUE(r.solved) << n;
        EXPECT_EQ(replay.size(), (std::size_t{1} << n) - 1);
    }
}

TEST(Palindrome, Examples) {
    EXPECT_TRUE(is_palindrome("madam"));
    EXPECT_TRUE(is_palindrome(""));
    EXPECT_FALSE(is_palindrome("abca"));
    EXPECT_FALSE(is_palindrome("Madam"));
    EXPECT_TRUE(is_palindrome("\xc3\xa9t\xc3\xa9"));
}

TEST(GridPaths, Examples) {
    const auto p = grid_paths(1, 1);
    EXPECT_EQ(std::set<std::string>(p.begin(), p.end()), (std::set<std::string>{"RD", "DR"}));
    EXPECT_EQ(grid_paths(2, 2).size(), 6u);
    EXPECT_THROW(grid_paths(1, 0), DomainError);
    EXPECT_THROW(grid_paths(9, 8), DomainError);
}

TEST(GridPaths, CountsAndShapes) {
    for (int m = 1; m <= 9; ++m) {
        for (int n = 1; m + n <= 10; ++n) {
            const auto paths = grid_paths(m, n);
            EXPECT_EQ(paths.size(), oracle::binomial(m + n, m));
            EXPECT_EQ(std::set<std::string>(paths.begin(), paths.end()).size(), paths.size());
            for (const auto& path : paths) {
                EXPECT_EQ(std::count(path.begin(), path.end(), 'D'), m);
                EXPECT_EQ(std::count(path.begin(), path.end(), 'R'), n);
            }
        }
    }
}

TEST(Parity, Examples) {
    EXPECT_TRUE(is_even(0));
    EXPECT_TRUE(is_odd(7));
    EXPECT_TRUE(divisible_by(12, 4));
    EXPECT_FALSE(divisible_by(12, 5));
    EXPECT_TRUE(is_odd(-3));
    EXPECT_THROW(divisible_by(1, 0), DomainError);
    EXPECT_TRUE(divisible_by(std::numeric_limits<std::int64_t>::min(), -1));
}

TEST(Primes, Examples) {
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_EQ(prime_factors(12), (std::vector<std::int64_t>{2, 2, 3}));
    EXPECT_EQ(prime_factors(2), (std::vector<std::int64_t>{2}));
    EXPECT_EQ(prime_factors(97), (std::vector<std::int64_t>{97}));
    EXPECT_THROW(prime_factors(1), DomainError);
    const std::vector<std::int64_t> one_to_ten{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    EXPECT_EQ(sum_primes(one_to_ten), 17);
    EXPECT_EQ(sum_primes(std::vector<std::int64_t>{}), 0);
    EXPECT_EQ(sum_primes(std::vector<std::int64_t>{4, 6, 8}), 0);
    EXPECT_EQ(primes_up_to(10), (std::vector<std::int64_t>{2, 3, 5, 7}));
    EXPECT_TRUE(primes_up_to(1).empty());
    EXPECT_EQ(primes_up_to(2), (std::vector<std::int64_t>{2}));
}

TEST(Primes, AgreeWithFullTrialDivision) {
    for (std::int64_t n = -5; n <= 3000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Primes, FactorsReconstituteAndArePrime) {
    for (std::int64_t n = 2; n <= 5000; ++n) {
        const auto f = prime_factors(n);
        std::int64_t product = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            ASSERT_TRUE(oracle::is_prime(f[i])) << n;
            if (i) ASSERT_LE(f[i - 1], f[i]);
            product *= f[i];
        }
        ASSERT_EQ(product, n);
    }
}

TEST(ReverseShift, Examples) {
    EXPECT_EQ(reverse_shift("abcdef"), "gfedcb");
    EXPECT_EQ(reverse_shift("123abc"), "dcb432");
    EXPECT_EQ(reverse_shift(""), "");
    EXPECT_EQ(reverse_shift("z"), "{");
    EXPECT_THROW(reverse_shift("\xf4\x8f\xbf\xbf"), DomainError);  // U+10FFFF
}

TEST(ReverseShift, UnshiftThenReverseRecoversInput) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        std::string s(rng() % 20, ' ');
        for (char& c : s) c = static_cast<char>(' ' + rng() % 90);
        std::string back = reverse_shift(s);
        for (char& c : back) c = static_cast<char>(c - 1);
        std::reverse(back.begin(), back.end());
        EXPECT_EQ(back, s);
    }
}

TEST(AsciiSum, Examples) {
    EXPECT_EQ(ascii_sum("A"), 65);
    EXPECT_EQ(ascii_sum(""), 0);
    EXPECT_EQ(ascii_sum("USA"), 85 + 83 + 65);
}

TEST(Digits, Examples) {
    EXPECT_EQ(digits_to_list("12345"), (std::vector<int>{1, 2, 3, 4, 5}));
    EXPECT_EQ(digits_to_list("0"), (std::vector<int>{0}));
    EXPECT_EQ(list_to_digits(std::vector<int>{9, 9}), "99");
    EXPECT_THROW(digits_to_list("12a"), ParseError);
    EXPECT_THROW(list_to_digits(std::vector<int>{10}), DomainError);
}

TEST(Digits, RoundTrip) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 1000; ++t) {
        std::string s(1 + rng() % 9, '0');
        for (char& c : s) c = static_cast<char>('0' + rng() % 10);
        EXPECT_EQ(list_to_digits(digits_to_list(s)), s);
    }
}

TEST(Matrix, Examples) {
    const auto m = Matrix::from_rows({{1, 2}, {3, 4}});
    EXPECT_EQ(transpose(m), Matrix::from_rows({{1, 3}, {2, 4}}));
    const auto a = Matrix::from_rows({{1, -2, 3}, {0, 5, 6}, {7, 8, -9}});
    EXPECT_EQ(matmul(a, Matrix::identity(3)), a);
    EXPECT_EQ(matmul(Matrix::from_rows({{1, 2}}), Matrix::from_rows({{3}, {4}})), Matrix::from_rows({{11}}));
    EXPECT_THROW(matmul(m, Matrix::from_rows({{1, 2}})), DomainError);
    const std::int64_t big = std::int64_t{1} << 62;
    EXPECT_THROW(matmul(Matrix::from_rows({{big, big}}), Matrix::from_rows({{1}, {1}})), OverflowError);
}

TEST(Matrix, TransposeInvolutionAndAssociativity) {
    std::mt19937_64 rng(123);
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 41) - 20;
        return m;
    };
    for (int t = 0; t < 200; ++t) {
        const auto a = random_matrix(3, 3), b = random_matrix(3, 3), c = random_matrix(3, 3);
        EXPECT_EQ(matmul(matmul(a, b), c), matmul(a, matmul(b, c)));
        EXPECT_EQ(transpose(transpose(a)), a);
        const auto r = random_matrix(1 + rng() % 4, 1 + rng() % 4);
        EXPECT_EQ(transpose(transpose(r)), r);
        // Brute-force entry of the product.
        const auto ab = matmul(a, b);
        std::int64_t e = 0;
        for (std::size_t k = 0; k < 3; ++k) e += a(1, k) * b(k, 2);
        EXPECT_EQ(ab(1, 2), e);
    }
}

TEST(Renderers, Pyramids) {
    const std::string p = star_pyramid(5);
    EXPECT_EQ(p.substr(p.rfind('\n') + 1), "* * * * *");
    EXPECT_EQ(p, "*\n* *\n* * *\n* * * *\n* * * * *");
    EXPECT_EQ(star_pyramid(1), "*");
    EXPECT_EQ(character_pyramid(2, "#"), "#\n# #");
    EXPECT_THROW(star_pyramid(0), DomainError);
}

TEST(Renderers, MultiplicationTable) {
    const std::string t = multiplication_table(2);
    EXPECT_NE(t.find("2 4"), std::string::npos);
    EXPECT_EQ(t, "1 2\n2 4");
    EXPECT_EQ(multiplication_table(4), " 1  2  3  4\n 2  4  6  8\n 3  6  9 12\n 4  8 12 16");
}

TEST(IterSuite, Examples) {
    EXPECT_EQ(iter_suite(5).sum, 15);
    const auto ten = iter_suite(10);
    EXPECT_EQ(ten.countdown.substr(0, 2), "10");
    EXPECT_EQ(ten.countdown.back(), '1');
    EXPECT_EQ(iter_suite(3).sum_of_squares, 14);
    EXPECT_EQ(iter_suite(6).evens, (std::vector<std::int64_t>{2, 4, 6}));
}

TEST(IterSuite, ClosedForms) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const auto s = iter_suite(n);
        EXPECT_EQ(s.sum, n * (n + 1) / 2);
        EXPECT_EQ(s.sum_of_squares, n * (n + 1) * (2 * n + 1) / 6);
        EXPECT_EQ(static_cast<std::int64_t>(s.evens.size()), n / 2);
        EXPECT_EQ(std::count(s.countdown.begin(), s.countdown.end(), '\n'), n - 1);
    }
}
