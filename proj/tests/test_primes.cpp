#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "artin/primes.hpp"

using namespace artin;

namespace {

// independent oracle: bit sieve, no segmentation
std::vector<bool> bit_sieve(u64 n) {
    std::vector<bool> is(n + 1, true);
    is[0] = is[1] = false;
    for (u64 i = 2; i * i <= n; ++i)
        if (is[i])
            for (u64 j = i * i; j <= n; j += i) is[j] = false;
    return is;
}

// independent li oracle via the classical series li(x) = gamma + log log x
// + sum (log x)^n / (n n!), shifted to the lower limit 2
double li_series(double x) {
    const double gamma = 0.5772156649015328606;
    const double li_pv_2 = 1.0451637801174927848;  // li(2) in the principal-value sense
    double lx = std::log(x);
    double term = 1.0, s = 0.0;
    for (int n = 1; n < 200; ++n) {
        term *= lx / n;
        s += term / n;
        if (term / n < 1e-17 * (1 + std::fabs(s))) break;
    }
    return gamma + std::log(lx) + s - li_pv_2;
}

}  // namespace

TEST_CASE("prime_sieve small values") {
    auto t = prime_sieve(10);
    CHECK(t.primes == std::vector<u64>{2, 3, 5, 7});
    CHECK(prime_sieve(100).primes.size() == 25);
    CHECK(prime_sieve(1000000).primes.size() == 78498);
    CHECK_THROWS_AS(prime_sieve(1), std::invalid_argument);
}

TEST_CASE("prime_sieve matches the bit-sieve oracle") {
    auto oracle = bit_sieve(300000);
    u64 count = 0;
    for (u64 n = 0; n <= 300000; ++n)
        if (oracle[n]) ++count;
    auto t = prime_sieve(300000);
    CHECK(t.primes.size() == count);
    for (u64 p : t.primes) CHECK(oracle[p]);
}

TEST_CASE("is_prime exact against a sieve") {
    auto oracle = bit_sieve(2000000);
    for (u64 n = 1; n <= 2000000; ++n) CHECK(is_prime(n) == oracle[n]);
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(3511));
    CHECK(is_prime(1006003));
    CHECK(is_prime(u64(1000000007)));
    CHECK_FALSE(is_prime(u64(1000000007) * 998244353));
}

TEST_CASE("log_integral against the series oracle") {
    CHECK(log_integral(2.0) == 0.0);
    CHECK(std::fabs(log_integral(10.0) - 5.1204357246698052) < 1e-9);
    CHECK(std::fabs(log_integral(1e6) - 78626.503995682064) < 1e-6 * 78626.5);
    for (double x : {3.0, 10.0, 100.0, 1e4, 1e6, 1e9}) {
        CHECK(std::fabs(log_integral(x) - li_series(x)) < 1e-9 * std::max(1.0, li_series(x)));
    }
    CHECK_THROWS_AS(log_integral(1.5), std::invalid_argument);
}

TEST_CASE("li envelopes") {
    // li(1e6) within 0.2% of pi(1e6)
    CHECK(std::fabs(log_integral(1e6) - 78498.0) / 78498.0 < 0.002);
    double prev = 0.0;
    for (double x = 1000; x <= 1e9; x *= 10) {
        double v = log_integral(x);
        CHECK(v > prev);
        prev = v;
        double ratio = v / (x / std::log(x));
        CHECK(ratio > 1.0);
        CHECK(ratio < 1.3);
    }
}
