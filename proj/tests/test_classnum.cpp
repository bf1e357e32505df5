#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "artin/classnum.hpp"
#include "artin/primes.hpp"

using namespace artin;

TEST_CASE("digit expansions") {
    auto d = digit_expansion(7, 10);
    CHECK(d.period == 6);
    CHECK(d.digits == std::vector<u32>{1, 4, 2, 8, 5, 7});
    auto d3 = digit_expansion(7, 3);
    CHECK(d3.digits == std::vector<u32>{0, 1, 0, 2, 1, 2});
    auto d2 = digit_expansion(11, 2);
    CHECK(d2.digits == std::vector<u32>{0, 0, 0, 1, 0, 1, 1, 1, 0, 1});
    CHECK(d2.period == mult_order(2, 11));
    CHECK_THROWS_AS(digit_expansion(5, 10), std::invalid_argument);
}

TEST_CASE("digit expansion rational identity") {
    // sum x_i ell^{T-i} * (ell^T - 1)^{-1} reproduces 1/p exactly
    for (u64 p : {7ull, 11ull, 13ull, 19ull, 23ull}) {
        for (u64 ell : {2ull, 3ull, 10ull}) {
            if (ell % p == 0) continue;
            auto d = digit_expansion(p, ell);
            if (d.period > 40) continue;  // keep the integer arithmetic in range
            u128 weighted = 0, power = 1;
            for (u64 i = 0; i < d.period; ++i) weighted = weighted * ell + d.digits[i];
            for (u64 i = 0; i < d.period; ++i) power *= ell;
            // 1/p = weighted / (ell^T - 1)  <=>  p * weighted = ell^T - 1
            CHECK(u128(p) * weighted == power - 1);
        }
    }
}

TEST_CASE("girstmair alternating digit sums") {
    CHECK(girstmair_sum(7, 10) == 11);
    CHECK(girstmair_sum(7, 3) == 4);
    CHECK(girstmair_sum(11, 2) == 3);
    CHECK_THROWS_AS(girstmair_sum(13, 2), std::invalid_argument);  // 13 = 1 mod 4
    CHECK_THROWS_AS(girstmair_sum(7, 2), std::invalid_argument);   // 2 not primitive mod 7
}

TEST_CASE("generalized Bernoulli numbers") {
    CHECK(bernoulli_b1chi(7) == -1);
    CHECK(bernoulli_b1chi(11) == -1);
    CHECK(bernoulli_b1chi(23) == -3);
    CHECK(bernoulli_b1chi(1999) == -27);
}

TEST_CASE("continued fractions of square roots") {
    auto cf7 = sqrt_continued_fraction(7);
    CHECK(cf7.a0 == 2);
    CHECK(cf7.periodic == std::vector<u64>{1, 1, 1, 4});
    CHECK(sqrt_continued_fraction(11).periodic == std::vector<u64>{3, 6});
    CHECK(sqrt_continued_fraction(2).periodic == std::vector<u64>{2});
    CHECK(sqrt_continued_fraction(23).periodic == std::vector<u64>{1, 3, 1, 8});
    CHECK_THROWS_AS(sqrt_continued_fraction(49), std::invalid_argument);
}

TEST_CASE("continued fraction invariants up to 10^4") {
    for (u64 d = 2; d <= 10000; ++d) {
        u64 r = isqrt(d);
        if (r * r == d) continue;
        auto cf = sqrt_continued_fraction(d);
        REQUIRE(!cf.periodic.empty());
        CHECK(cf.periodic.back() == 2 * cf.a0);
        for (size_t i = 0; i + 1 < cf.periodic.size(); ++i)
            CHECK(cf.periodic[i] == cf.periodic[cf.periodic.size() - 2 - i]);
    }
}

TEST_CASE("class numbers of imaginary quadratic fields") {
    CHECK(class_number_imag(7).h == 1);
    CHECK(class_number_imag(23).h == 3);
    CHECK(class_number_imag(47).h == 5);
    CHECK(class_number_imag(479).h == 25);
    CHECK(class_number_imag(1999).h == 27);
}

TEST_CASE("class numbers of real quadratic fields") {
    for (u64 p : {7ull, 11ull, 23ull}) {
        auto r = class_number_real(p);
        CHECK(r.h == 1);
    }
    auto r7 = class_number_real(7);
    REQUIRE(r7.unit.has_value());
    CHECK(r7.unit->first == 8);
    CHECK(r7.unit->second == 3);
    auto r11 = class_number_real(11);
    REQUIRE(r11.unit.has_value());
    CHECK(r11.unit->first == 10);
    CHECK(r11.unit->second == 3);
    CHECK(class_number_real(5).h == 1);   // p = 1 mod 4 route
    CHECK(class_number_real(13).h == 1);
    CHECK(class_number_real(229).h == 3);
}

TEST_CASE("hirzebruch sums") {
    CHECK(hirzebruch_sum(7) == 3);
    CHECK(hirzebruch_sum(11) == 3);
    CHECK(hirzebruch_sum(23) == 9);
}

TEST_CASE("dirichlet L values") {
    CHECK(std::fabs(dirichlet_l_one(7, '-') - M_PI / std::sqrt(7.0)) < 1e-12);
    CHECK(std::fabs(dirichlet_l_one(11, '-') - M_PI / std::sqrt(11.0)) < 1e-12);
    CHECK(std::fabs(dirichlet_l_one(23, '-') - 3.0 * M_PI / std::sqrt(23.0)) < 1e-12);
    // the digit-sum route of the class number formula at p = 3 mod 4
    for (u64 p : {7ull, 11ull, 23ull, 31ull}) {
        u64 ell = least_primitive_root(p);
        double via_digits = M_PI * double(girstmair_sum(p, ell)) / ((ell + 1) * std::sqrt(double(p)));
        CHECK(std::fabs(via_digits - dirichlet_l_one(p, '-')) < 1e-9);
    }
    CHECK_THROWS_AS(dirichlet_l_one(13, '-'), std::invalid_argument);
}

TEST_CASE("girstmair identity across primes and bases") {
    for_each_prime(7, 500, [&](u64 p) {
        if (p % 4 != 3) return;
        u64 h = class_number_imag(p).h;
        for (u64 ell = 2; ell <= 50; ++ell) {
            if (ell % p == 0 || !gauss_primitive_test(ell, p)) continue;
            CHECK(girstmair_sum(p, ell) == i64(ell + 1) * i64(h));
        }
    });
}

TEST_CASE("hirzebruch identity when h(p) = 1") {
    for_each_prime(7, 300, [&](u64 p) {
        if (p % 4 != 3) return;
        if (class_number_real(p).h != 1) return;
        CHECK(hirzebruch_sum(p) == 3 * i64(class_number_imag(p).h));
    });
}

TEST_CASE("alternating digit sum growth envelope") {
    // the square-root cancellation lives in h(-p) = sum / (ell + 1)
    for_each_prime(7, 2000, [&](u64 p) {
        if (p % 4 != 3) return;
        u64 g = least_primitive_root(p);
        CHECK(double(girstmair_sum(p, g)) / double(g + 1) <= std::pow(double(p), 0.8));
    });
}
