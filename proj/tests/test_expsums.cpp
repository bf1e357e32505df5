#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "artin/expsums.hpp"

using namespace artin;

TEST_CASE("direct Gauss sums") {
    auto g3 = gauss_sum_direct(1, 0, 3);
    CHECK(std::abs(g3.value - std::complex<double>(0, std::sqrt(3.0))) < 1e-9);
    auto g5 = gauss_sum_direct(1, 0, 5);
    CHECK(std::abs(g5.value - std::sqrt(5.0)) < 1e-9);
    auto g4 = gauss_sum_direct(1, 0, 4);
    CHECK(std::abs(g4.value - std::complex<double>(2, 2)) < 1e-9);
    CHECK_THROWS_AS(gauss_sum_direct(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_direct(0, 1, 5), std::invalid_argument);
}

TEST_CASE("closed form cases") {
    CHECK(std::abs(gauss_sum_closed(1, 5).value - std::sqrt(5.0)) < 1e-12);
    CHECK(std::abs(gauss_sum_closed(1, 6).value) == 0.0);
    CHECK(std::abs(gauss_sum_closed(1, 3).value - gauss_sum_direct(1, 0, 3).value) < 1e-9);
    CHECK_THROWS_AS(gauss_sum_closed(3, 9), std::invalid_argument);
}

TEST_CASE("closed form equals direct for every modulus up to 200") {
    for (i64 n = 2; n <= 200; ++n) {
        for (i64 a = 1; a <= n; ++a) {
            if (std::gcd(u64(a), u64(n)) != 1) continue;
            auto d = gauss_sum_direct(a, 0, n);
            auto c = gauss_sum_closed(a, n);
            CHECK(std::abs(d.value - c.value) < 1e-9);
            // modulus is 0, sqrt n, or sqrt 2n
            double m = std::abs(d.value);
            bool ok = std::fabs(m) < 1e-9 || std::fabs(m - std::sqrt(double(n))) < 1e-9 ||
                      std::fabs(m - std::sqrt(2.0 * n)) < 1e-9;
            CHECK(ok);
        }
    }
}

TEST_CASE("reciprocity residual vanishes") {
    CHECK(schaar_reciprocity_residual(1, 0, 3) < 1e-9);
    CHECK(schaar_reciprocity_residual(2, 0, 5) < 1e-9);
    CHECK(schaar_reciprocity_residual(1, 1, 4) < 1e-9);
    CHECK_THROWS_AS(schaar_reciprocity_residual(0, 1, 3), std::invalid_argument);
    for (i64 a = -12; a <= 12; ++a) {
        if (a == 0) continue;
        for (i64 c = -12; c <= 12; ++c) {
            if (c == 0) continue;
            for (i64 b = -6; b <= 6; ++b) CHECK(schaar_reciprocity_residual(a, b, c) < 1e-9);
        }
    }
}

TEST_CASE("quadratic polynomial character sums") {
    CHECK(quad_char_poly_sum(1, 0, 0, 5) == 4);
    CHECK(quad_char_poly_sum(1, 0, 1, 5) == -1);
    CHECK(quad_char_poly_sum(1, 0, 0, 3) == 2);
    CHECK_THROWS_AS(quad_char_poly_sum(5, 1, 1, 5), std::invalid_argument);
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull})
        for (i64 a = 1; a < i64(p); ++a)
            for (i64 b = 0; b < i64(p); ++b)
                for (i64 c = 0; c < i64(p); ++c)
                    CHECK_NOTHROW(quad_char_poly_sum(a, b, c, p));  // throws on mismatch
}

TEST_CASE("Weil bound residual") {
    CHECK(weil_residual({0, -1, 1}, 7) >= 0.0);            // x(x-1)
    CHECK(weil_residual({0, 2, -3, 1}, 11) >= 0.0);        // x(x-1)(x-2)
    CHECK(weil_residual({0, -1, 1}, 3) >= 0.0);
    CHECK_THROWS_AS(weil_residual({0, 0, 1}, 7), std::invalid_argument);   // double root
    CHECK_THROWS_AS(weil_residual({1, 0, 1}, 7), std::invalid_argument);   // irreducible mod 7
    std::mt19937_64 rng(2024);
    auto primes = std::vector<u64>{11, 13, 17, 31, 61, 101};
    int accepted = 0;
    while (accepted < 200) {
        u64 p = primes[rng() % primes.size()];
        int d = 2 + int(rng() % 3);
        // build a split polynomial from distinct roots
        std::vector<u64> roots;
        while (int(roots.size()) < d) {
            u64 r = rng() % p;
            bool dup = false;
            for (u64 q : roots) dup |= (q == r);
            if (!dup) roots.push_back(r);
        }
        std::vector<i64> coeffs{1};  // ascending powers, constant first
        for (u64 r : roots) {
            std::vector<i64> next(coeffs.size() + 1, 0);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= coeffs[i] * i64(r);
            }
            coeffs = next;
        }
        CHECK(weil_residual(coeffs, p) >= 0.0);
        ++accepted;
    }
}
