#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "artin/arith.hpp"

using namespace artin;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());
    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<u64, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<u64, int>{3, 1});
    // product of the two base-2 Wieferich primes, factored back apart
    auto fw = factorize(3837523);
    REQUIRE(fw.factors.size() == 2);
    CHECK(fw.factors[0] == std::pair<u64, int>{1093, 1});
    CHECK(fw.factors[1] == std::pair<u64, int>{3511, 1});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization invariants on random 63-bit inputs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        u64 n = (rng() >> 1) | 1;
        auto f = factorize(n);
        u64 prod = 1;
        u64 last = 0;
        for (auto& [p, e] : f.factors) {
            CHECK(p > last);
            CHECK(is_prime_u64(p));
            last = p;
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("profile values") {
    auto a13 = profile(13);
    CHECK(a13.phi == 12);
    CHECK(a13.lambda == 12);
    CHECK(a13.mu == -1);
    CHECK(a13.omega == 1);
    CHECK(a13.big_omega == 1);

    auto a8 = profile(8);
    CHECK(a8.phi == 4);
    CHECK(a8.lambda == 2);
    CHECK(a8.mu == 0);
    CHECK(a8.omega == 1);
    CHECK(a8.big_omega == 3);

    auto a15 = profile(15);
    CHECK(a15.phi == 8);
    CHECK(a15.lambda == 4);
    CHECK(a15.mu == 1);
    CHECK(a15.omega == 2);
    CHECK(a15.big_omega == 2);

    CHECK(mobius(30) == -1);
    CHECK(euler_phi(12) == 4);
    CHECK(carmichael_lambda(16) == 4);
    CHECK(prime_divisor_counts(60) == std::pair<int, int>{3, 4});
    CHECK(profile(1).phi == 1);
    CHECK(profile(1).lambda == 1);
}

TEST_CASE("multiplicativity on coprime pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        u64 m = rng() % 9999 + 1, n = rng() % 9999 + 1;
        if (std::gcd(m, n) != 1) continue;
        auto am = profile(m), an = profile(n), amn = profile(m * n);
        CHECK(amn.phi == am.phi * an.phi);
        CHECK(amn.mu == am.mu * an.mu);
        CHECK(amn.lambda == lcm_u64(am.lambda, an.lambda));
    }
}

TEST_CASE("Fermat-Euler over all moduli up to 2000") {
    for (u64 n = 2; n <= 2000; ++n) {
        auto a = profile(n);
        for (u64 x = 1; x < n; ++x) {
            if (std::gcd(x, n) != 1) continue;
            CHECK(powmod(x, a.phi, n) == 1);
            CHECK(powmod(x, a.lambda, n) == 1);
        }
    }
}

TEST_CASE("phi as a Moebius divisor sum") {
    for (u64 n = 1; n <= 10000; ++n) {
        auto ds = divisors(factorize(n));
        i64 s = 0;
        for (u64 d : ds) s += i64(mobius(d)) * i64(n / d);
        CHECK(u64(s) == euler_phi(n));
    }
}

TEST_CASE("omega upper bound with slack") {
    for (u64 n = 100; n <= 1000000; n += 37) {
        auto [omega, Omega] = prime_divisor_counts(n);
        double bound = std::log(double(n)) / std::log(std::log(double(n))) * 1.5;
        CHECK(double(omega) <= bound);
        CHECK(omega <= Omega);
    }
}

TEST_CASE("jacobi and legendre agree at odd primes") {
    for (u64 p : {3ull, 7ull, 11ull, 101ull, 997ull}) {
        for (i64 a = -30; a <= 30; ++a) {
            if (a % i64(p) == 0) continue;
            CHECK(jacobi(a, p) == legendre(a, p));
        }
    }
    CHECK(jacobi(2, 15) == 1);   // (2|3)(2|5) = (-1)(-1)
    CHECK(jacobi(7, 15) == -1);
}

TEST_CASE("sieve tables match direct computation") {
    SieveTables t(5000);
    for (u64 n = 2; n <= 5000; ++n) {
        CHECK(t.phi(n) == euler_phi(n));
        CHECK(t.lambda(n) == carmichael_lambda(n));
        CHECK(t.mu(n) == mobius(n));
    }
}
