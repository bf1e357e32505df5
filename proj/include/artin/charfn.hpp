#pragma once

// Characteristic functions of primitive elements (divisor-sum, exponential-sum
// and quasi forms) and the associated Dirichlet series partial sums.

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "artin/arith.hpp"
#include "artin/order.hpp"

namespace artin {

enum class IndicatorMethod { divisor_sum, exponential_sum, quasi, brute_force };

struct CharacterIndicator {
    u64 p = 2;
    u64 u = 1;
    double value = 0.0;
    IndicatorMethod method = IndicatorMethod::brute_force;
};

constexpr u64 kExpSumPrimeCap = 997;  // keeps the O(p*phi(p-1)) double sums cheap and accurate

inline CharacterIndicator brute_force_indicator(u64 u, u64 p) {
    CharacterIndicator c{p, u % p, 0.0, IndicatorMethod::brute_force};
    c.value = (mult_order(u, p) == p - 1) ? 1.0 : 0.0;
    return c;
}

// Moebius-weighted divisor sum evaluated in exact rational arithmetic:
//   (phi(p-1)/(p-1)) * sum_{d | p-1} mu(d) mu(d/e) / phi(d/e),  e = gcd(d, log u)
inline CharacterIndicator charsum_indicator(u64 u, u64 p) {
    u %= p;
    if (u == 0) throw std::invalid_argument("charsum_indicator: gcd(u,p) != 1");
    using i128 = __int128;
    u64 tau = least_primitive_root(p);
    u64 v = (p == 2) ? 0 : discrete_log(u, tau, p);
    auto ds = divisors(factorize(p - 1));
    i128 num = 0;
    i128 den = 1;
    auto gcd128 = [](i128 a, i128 b) {
        if (a < 0) a = -a;
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    };
    for (u64 d : ds) {
        auto pd = profile(d);
        if (pd.mu == 0) continue;
        u64 e = std::gcd(d, v);
        auto pde = profile(d / e);
        if (pde.mu == 0) continue;
        i128 tn = i128(pd.mu) * pde.mu;
        i128 td = i128(pde.phi);
        i128 g = gcd128(den, td);
        i128 scale = td / g;
        num = num * scale + tn * (den / g);
        den *= scale;
        g = gcd128(num, den);
        if (g > 1) num /= g, den /= g;
    }
    auto pp = profile(p - 1);
    // times phi(p-1)/(p-1); the result is exactly 0 or 1
    i128 rn = num * i128(pp.phi);
    i128 rd = den * i128(p - 1);
    CharacterIndicator c{p, u, 0.0, IndicatorMethod::divisor_sum};
    if (rn == 0) c.value = 0.0;
    else if (rn == rd) c.value = 1.0;
    else c.value = double(i64(rn)) / double(i64(rd));
    return c;
}

namespace detail {

inline std::vector<std::complex<double>> unit_roots(u64 p) {
    std::vector<std::complex<double>> w(p);
    for (u64 j = 0; j < p; ++j) {
        double ang = 2.0 * M_PI * double(j) / double(p);
        w[j] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

}  // namespace detail

// divisor-free form: (1/p) sum_{gcd(n,p-1)=1} sum_{0<=k<p} e^{2 pi i (tau^n - u) k / p}
inline CharacterIndicator expsum_indicator(u64 u, u64 p) {
    if (p > kExpSumPrimeCap) throw std::invalid_argument("expsum_indicator: p above cost cap");
    u %= p;
    if (u == 0) throw std::invalid_argument("expsum_indicator: gcd(u,p) != 1");
    u64 tau = least_primitive_root(p);
    auto w = detail::unit_roots(p);
    std::complex<double> s = 0.0;
    u64 tn = 1;
    for (u64 n = 1; n <= p - 1; ++n) {
        tn = mulmod(tn, tau, p);
        if (std::gcd(n, p - 1) != 1) continue;
        u64 a = (tn + p - u) % p;
        u64 idx = 0;
        for (u64 k = 0; k < p; ++k) {
            s += w[idx];
            idx += a;
            if (idx >= p) idx -= p;
        }
    }
    return {p, u, s.real() / double(p), IndicatorMethod::exponential_sum};
}

namespace detail {

struct QuasiParts {
    std::complex<double> direct;
    std::complex<double> closed;
    double main = 0.0;  // recovered 0/1 term, direct minus the Jacobi remainder
};

inline QuasiParts quasi_parts(u64 u, u64 p) {
    if (p % 2 == 0) throw std::invalid_argument("quasi_indicator: p must be odd");
    if (p > kExpSumPrimeCap) throw std::invalid_argument("quasi_indicator: p above cost cap");
    u %= p;
    if (u == 0) throw std::invalid_argument("quasi_indicator: gcd(u,p) != 1");
    u64 tau = least_primitive_root(p);
    auto w = unit_roots(p);
    std::vector<u64> sq(p);
    for (u64 k = 0; k < p; ++k) sq[k] = mulmod(k, k, p);
    QuasiParts q;
    std::complex<double> direct = 0.0;
    double jac = 0.0;  // sum of Legendre symbols (tau^n - u | p)
    u64 tn = 1;
    for (u64 n = 1; n <= p - 1; ++n) {
        tn = mulmod(tn, tau, p);
        if (std::gcd(n, p - 1) != 1) continue;
        u64 a = (tn + p - u) % p;
        for (u64 k = 0; k < p; ++k) direct += w[mulmod(a, sq[k], p)];
        jac += legendre(i64(a), p);
    }
    direct /= double(p);
    std::complex<double> beta = (p % 4 == 1) ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
    std::complex<double> remainder = beta * jac / std::sqrt(double(p));
    double indicator = (mult_order(u, p) == p - 1) ? 1.0 : 0.0;
    q.direct = direct;
    q.closed = indicator + remainder;
    q.main = (direct - remainder).real();
    return q;
}

}  // namespace detail

// quasi form (quadratic exponent k^2): value is the recovered 0/1 main term
inline CharacterIndicator quasi_indicator(u64 u, u64 p) {
    auto q = detail::quasi_parts(u, p);
    return {p, u % p, q.main, IndicatorMethod::quasi};
}

// |direct double sum - closed form|, the two sides computed independently
inline double quasi_residual(u64 u, u64 p) {
    auto q = detail::quasi_parts(u, p);
    return std::abs(q.direct - q.closed);
}

// ---------------------------------------------------------------------------
// Dirichlet series partial sums over the primitive residues
// ---------------------------------------------------------------------------

struct LSeriesValue {
    u64 p = 2;
    double s = 2.0;
    bool weighted = false;
    u64 terms = 0;
    double value = 0.0;
};

namespace detail {

inline std::vector<bool> primitive_residue_table(u64 p) {
    std::vector<bool> prim(p, false);
    auto qs = prime_divisors(factorize(p - 1));
    for (u64 r = 1; r < p; ++r) {
        bool ok = true;
        for (u64 q : qs)
            if (powmod(r, (p - 1) / q, p) == 1) { ok = false; break; }
        prim[r] = ok;
    }
    if (p == 2) prim[1] = true;
    return prim;
}

}  // namespace detail

// sum_{n <= terms} Psi(n)/n^s, optionally vonMangoldt-weighted, where Psi(n)
// tests the residue n mod p for primitivity
inline LSeriesValue lseries_partial(u64 p, double s, bool weighted, u64 terms) {
    if (s <= 1.0) throw std::invalid_argument("lseries_partial: s must exceed 1");
    if (terms < p) throw std::invalid_argument("lseries_partial: need terms >= p");
    auto prim = detail::primitive_residue_table(p);
    double sum = 0.0, comp = 0.0;
    auto add = [&](double t) {
        double y = t - comp;
        double v = sum + y;
        comp = (v - sum) - y;
        sum = v;
    };
    if (!weighted) {
        for (u64 n = 1; n <= terms; ++n) {
            if (!prim[n % p]) continue;
            double term = (s == 2.0) ? 1.0 / (double(n) * double(n)) : std::pow(double(n), -s);
            add(term);
        }
    } else {
        // only prime powers carry vonMangoldt weight log q
        for_each_prime(2, terms, [&](u64 q) {
            double lq = std::log(double(q));
            for (u64 qk = q; qk <= terms; ) {
                if (prim[qk % p]) {
                    double term = (s == 2.0) ? lq / (double(qk) * double(qk)) : lq * std::pow(double(qk), -s);
                    add(term);
                }
                if (qk > terms / q) break;
                qk *= q;
            }
        });
    }
    return {p, s, weighted, terms, sum};
}

// count of primitive elements along the power sequence tau^1, tau^2, ..., tau^x;
// exactly k phi(p-1) whenever x = k (p-1)
inline u64 summatory_indicator(u64 p, u64 x) {
    if (x == 0) return 0;
    u64 tau = least_primitive_root(p);
    auto prim = detail::primitive_residue_table(p);
    u64 count = 0;
    u64 full = x / (p - 1);
    u64 per_period = 0;
    u64 tn = 1;
    std::vector<bool> hit(p - 1, false);
    for (u64 n = 1; n <= p - 1; ++n) {
        tn = mulmod(tn, tau, p);
        hit[n - 1] = prim[tn];
        if (prim[tn]) ++per_period;
    }
    count = full * per_period;
    for (u64 n = 1; n <= x % (p - 1); ++n)
        if (hit[n - 1]) ++count;
    return count;
}

}  // namespace artin
