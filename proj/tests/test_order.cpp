#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "artin/order.hpp"
#include "artin/primes.hpp"

using namespace artin;

namespace {

// brute-force order by repeated multiplication
u64 order_oracle(u64 u, u64 n) {
    u %= n;
    u64 t = 1, v = u;
    while (v != 1) {
        v = mulmod(v, u, n);
        ++t;
    }
    return t;
}

}  // namespace

TEST_CASE("mult_order examples and oracle") {
    CHECK(mult_order(2, 13) == 12);
    CHECK(mult_order(1, 97) == 1);
    CHECK(mult_order(2, 41) == 20);
    CHECK_THROWS_AS(mult_order(6, 12), std::invalid_argument);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 300; ++t) {
        u64 n = rng() % 5000 + 2;
        u64 u = rng() % n;
        if (u < 2 || std::gcd(u, n) != 1) continue;
        CHECK(mult_order(u, n) == order_oracle(u, n));
    }
}

TEST_CASE("order records") {
    auto r = order_record(2, 13);
    CHECK(r.modulus == 13);
    CHECK(r.element == 2);
    CHECK(r.order == 12);
    CHECK(r.is_primitive);
    auto s = order_record(3, 16);
    CHECK(s.order == 4);
    CHECK(s.is_primitive);  // lambda(16) = 4
    CHECK_FALSE(order_record(7, 16).is_primitive);
}

TEST_CASE("gauss primitive test") {
    CHECK(gauss_primitive_test(2, 13, 1));
    CHECK_FALSE(gauss_primitive_test(4, 13, 1));
    CHECK_FALSE(gauss_primitive_test(2, 1093, 2));  // Wieferich: 2^1092 = 1 mod 1093^2
    CHECK(gauss_primitive_test(2, 3, 2));
    CHECK(gauss_primitive_test(3, 2, 2));
    CHECK_FALSE(gauss_primitive_test(5, 2, 2));
    // agreement with the order definition over p^k
    for (u64 p : {3ull, 5ull, 7ull, 11ull}) {
        for (int k = 1; k <= 3; ++k) {
            u64 pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            for (u64 u = 1; u < pk; ++u) {
                if (u % p == 0) continue;
                CHECK(gauss_primitive_test(u, p, k) == (mult_order(u, pk) == euler_phi(pk)));
            }
        }
    }
}

TEST_CASE("primitive root counts per prime match phi(p-1)") {
    for_each_prime(3, 10000, [&](u64 p) {
        u64 c = 0;
        for (u64 u = 1; u < p; ++u) c += gauss_primitive_test(u, p) ? 1 : 0;
        CHECK(c == euler_phi(p - 1));
    });
}

TEST_CASE("power nonresidue indicator") {
    CHECK(power_nonresidue_indicator(2, 3, 1, 2));
    CHECK_FALSE(power_nonresidue_indicator(2, 7, 1, 2));
    CHECK(power_nonresidue_indicator(2, 7, 1, 3));
    CHECK_FALSE(power_nonresidue_indicator(2, 5, 1, 3));  // 3 does not divide 4
    CHECK_THROWS_AS(power_nonresidue_indicator(3, 3, 1, 2), std::invalid_argument);
    // quadratic case agrees with the Legendre symbol at k = 1
    for (u64 p : {3ull, 5ull, 11ull, 13ull, 101ull})
        for (i64 r = 2; r < i64(p); ++r)
            CHECK(power_nonresidue_indicator(r, p, 1, 2) == (legendre(r, p) == -1));
}

TEST_CASE("discrete log") {
    CHECK(discrete_log(1, 2, 13) == 0);
    CHECK(discrete_log(6, 2, 13) == 5);
    CHECK(discrete_log(11, 2, 13) == 7);
    CHECK_THROWS_AS(discrete_log(5, 4, 13), std::invalid_argument);
    std::mt19937_64 rng(99);
    auto primes = prime_sieve(100000).primes;
    for (int t = 0; t < 500; ++t) {
        u64 p = primes[rng() % primes.size()];
        if (p < 3) continue;
        u64 u = rng() % (p - 1) + 1;
        u64 g = least_primitive_root(p);
        u64 e = discrete_log(u, g, p);
        CHECK(powmod(g, e, p) == u);
    }
}

TEST_CASE("least roots") {
    CHECK(least_primitive_root(2) == 1);
    CHECK(least_primitive_root(13) == 2);
    CHECK(least_primitive_root(41) == 6);
    CHECK(least_prime_primitive_root(13) == 2);
    CHECK(least_prime_primitive_root(7) == 3);
    CHECK(least_prime_primitive_root(41) == 7);
    // g*(p) >= g(p): the prime scan can never beat the unrestricted scan
    for_each_prime(3, 20000, [&](u64 p) {
        CHECK(least_prime_primitive_root(p) >= least_primitive_root(p));
    });
}

TEST_CASE("lifting to p^2") {
    auto r = lift_primitive_root(2, 13);
    CHECK(r.lifts);
    CHECK(lift_primitive_root(2, 3).lifts);
    // 2 is a base-1093 Wieferich residue but has order 364 there, so the
    // primitivity precondition rejects it; 14 mod 29 is the classic genuine case
    CHECK(mult_order(2, 1093) == 364);
    CHECK_THROWS_AS(lift_primitive_root(2, 1093), std::invalid_argument);
    auto w = lift_primitive_root(14, 29);
    CHECK_FALSE(w.lifts);
    CHECK(w.exceptional_x == 0);
    CHECK_FALSE(gauss_primitive_test(14, 29, 2));
    CHECK_THROWS_AS(lift_primitive_root(4, 13), std::invalid_argument);

    // Every g + p x with x != exceptional_x is primitive mod p^2, and the
    // count over all primitive g mod p is (p-1) phi(p-1).
    for_each_prime(3, 200, [&](u64 p) {
        u64 p2 = p * p;
        u64 found = 0;
        for (u64 g = 1; g < p; ++g) {
            if (!gauss_primitive_test(g, p)) continue;
            auto lift = lift_primitive_root(g, p);
            for (u64 x = 0; x < p; ++x) {
                bool prim = gauss_primitive_test(g + p * x, p, 2);
                CHECK(prim == (x != lift.exceptional_x));
                found += prim ? 1 : 0;
            }
        }
        u64 brute = 0;
        for (u64 z = 1; z < p2; ++z) {
            if (z % p == 0) continue;
            brute += (mult_order(z, p2) == p * (p - 1)) ? 1 : 0;
        }
        CHECK(found == (p - 1) * euler_phi(p - 1));
        CHECK(brute == (p - 1) * euler_phi(p - 1));
    });
}

TEST_CASE("primitive lambda-root counts") {
    CHECK(primitive_root_count(13) == 4);
    CHECK(primitive_root_count(8) == 3);
    CHECK(primitive_root_count(1) == 1);
    // brute force over all moduli, primitive-root moduli or not
    for (u64 n = 3; n <= 600; ++n) {
        u64 lam = carmichael_lambda(n);
        u64 c = 0;
        for (u64 z = 1; z < n; ++z)
            if (std::gcd(z, n) == 1 && mult_order(z, n) == lam) ++c;
        CHECK(primitive_root_count(n) == c);
    }
}

TEST_CASE("lucas primality") {
    CHECK(lucas_primality(7, 3) == LucasVerdict::proved_prime);
    CHECK(lucas_primality(15, 2) == LucasVerdict::composite);
    CHECK(lucas_primality(7, 2) == LucasVerdict::inconclusive);
    CHECK_THROWS_AS(lucas_primality(15, 3), std::invalid_argument);
    for (u64 n = 3; n <= 10000; ++n) {
        bool proved = false;
        for (u64 u = 2; u <= 40 && u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            if (lucas_primality(n, u) == LucasVerdict::proved_prime) { proved = true; break; }
        }
        CHECK(proved == is_prime(n));
    }
}
