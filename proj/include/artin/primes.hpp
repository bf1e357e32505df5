#pragma once

// Prime generation (segmented), deterministic primality, and the logarithmic
// integral li(x) = int_2^x dt/log t used as the predicted main term.

#include <cmath>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

inline bool is_prime(u64 n) { return is_prime_u64(n); }

namespace detail {

// base primes up to sqrt(limit), simple sieve
inline std::vector<u32> base_primes(u64 sqrt_limit) {
    std::vector<bool> comp(sqrt_limit + 1, false);
    std::vector<u32> ps;
    for (u64 i = 2; i <= sqrt_limit; ++i) {
        if (!comp[i]) {
            ps.push_back(u32(i));
            for (u64 j = i * i; j <= sqrt_limit; j += i) comp[j] = true;
        }
    }
    return ps;
}

}  // namespace detail

constexpr u64 kSieveSegment = 1u << 16;

// visit all primes in [lo, hi] in ascending order; memory O(sqrt(hi) + segment)
template <class F>
void for_each_prime(u64 lo, u64 hi, F&& visit) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<u64>(lo, 2);
    auto base = detail::base_primes(isqrt(hi));
    std::vector<bool> seg;
    for (u64 start = lo; start <= hi; start += kSieveSegment) {
        u64 end = std::min(hi, start + kSieveSegment - 1);
        seg.assign(end - start + 1, true);
        for (u32 p : base) {
            u64 pp = u64(p) * p;
            if (pp > end) break;
            u64 first = std::max(pp, (start + p - 1) / p * p);
            for (u64 j = first; j <= end; j += p) seg[j - start] = false;
        }
        for (u64 i = start; i <= end; ++i)
            if (seg[i - start]) visit(i);
    }
}

struct PrimeTable {
    u64 limit = 0;
    std::vector<u64> primes;
};

inline PrimeTable prime_sieve(u64 limit) {
    if (limit < 2) throw std::invalid_argument("prime_sieve: limit must be >= 2");
    PrimeTable t;
    t.limit = limit;
    for_each_prime(2, limit, [&](u64 p) { t.primes.push_back(p); });
    return t;
}

// ---------------------------------------------------------------------------
// logarithmic integral, lower limit fixed at 2
// ---------------------------------------------------------------------------

namespace detail {

inline double li_simpson(std::function<double(double)> const& f, double a, double b, double fa,
                         double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double d = left + right - whole;
    if (depth <= 0 || std::fabs(d) <= 15.0 * tol) return left + right + d / 15.0;
    return li_simpson(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           li_simpson(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace detail

// adaptive quadrature; absolute error well below 1e-9 for x <= 1e12
inline double log_integral(double x) {
    if (x < 2.0) throw std::invalid_argument("log_integral: x must be >= 2");
    if (x == 2.0) return 0.0;
    // integrate exp(u)/u on [log 2, log x]: the integrand is gentle there
    auto f = [](double u) { return std::exp(u) / u; };
    double a = std::log(2.0), b = std::log(x);
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::li_simpson(f, a, b, fa, fm, fb, whole, 1e-13 * std::max(1.0, whole), 60);
}

}  // namespace artin
