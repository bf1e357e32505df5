#pragma once

// High-accuracy evaluation of the named constants: the Artin product and its
// series form, Hooley's corrected densities, Euler/Mertens constants by
// rapidly convergent series, connecting constants over prime subsets, Mertens
// products, the delta products, and fractional-part sums.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/arith.hpp"
#include "artin/order.hpp"
#include "artin/parallel.hpp"
#include "artin/primes.hpp"

namespace artin {

enum class EstimateMethod { euler_product, zeta_series, partial_sum, closed_form };

struct ConstantEstimate {
    std::string name;
    double value = 0.0;
    EstimateMethod method = EstimateMethod::partial_sum;
    u64 cutoff_or_terms = 0;
    double error_estimate = 0.0;  // explicit truncation bound, not a guess
};

// ---------------------------------------------------------------------------
// zeta at integer arguments: direct sum plus Euler-Maclaurin tail
// ---------------------------------------------------------------------------

namespace detail {

inline double zeta_minus_one(int n) {  // zeta(n) - 1, n >= 2, avoids cancellation
    const int K = 10000;
    KahanSum s;
    for (int k = 2; k <= K; ++k) s.add(std::pow(double(k), -n));
    double Kd = K;
    double tail = std::pow(Kd, 1.0 - n) / (n - 1) - 0.5 * std::pow(Kd, double(-n)) +
                  n / 12.0 * std::pow(Kd, -n - 1.0) -
                  double(n) * (n + 1) * (n + 2) / 720.0 * std::pow(Kd, -n - 3.0);
    return s.value() + tail;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Artin constant: Euler product and Moebius series
// ---------------------------------------------------------------------------

inline ConstantEstimate artin_product(u64 cutoff) {
    if (cutoff < 100) throw std::invalid_argument("artin_product: cutoff must be >= 100");
    KahanSum logs;
    for_each_prime(2, cutoff, [&](u64 p) { logs.add(std::log1p(-1.0 / (double(p) * double(p - 1)))); });
    ConstantEstimate c;
    c.name = "artin";
    c.value = std::exp(logs.value());
    c.method = EstimateMethod::euler_product;
    c.cutoff_or_terms = cutoff;
    c.error_estimate = std::log(double(cutoff) / double(cutoff - 1));  // bounds sum_{p>X} 1/(p(p-1))
    return c;
}

// partial sums of sum mu(n) / (n phi(n)), the series form of the same constant
inline ConstantEstimate artin_series(u64 terms) {
    std::vector<u32> phi(terms + 1);
    std::vector<signed char> mu(terms + 1, 1);
    for (u64 i = 0; i <= terms; ++i) phi[i] = u32(i);
    for (u64 p = 2; p <= terms; ++p) {
        if (phi[p] != p) continue;  // p composite already touched
        for (u64 j = p; j <= terms; j += p) {
            phi[j] -= phi[j] / u32(p);
            mu[j] = -mu[j];
        }
        if (p <= terms / p)
            for (u64 j = p * p; j <= terms; j += p * p) mu[j] = 0;
    }
    KahanSum s;
    for (u64 n = 1; n <= terms; ++n)
        if (mu[n]) s.add(double(mu[n]) / (double(n) * double(phi[n])));
    ConstantEstimate c;
    c.name = "artin-series";
    c.value = s.value();
    c.method = EstimateMethod::partial_sum;
    c.cutoff_or_terms = terms;
    double ll = std::log(std::log(double(terms)));
    c.error_estimate = (std::exp(0.5772156649015329) * ll + 3.0) / double(terms);
    return c;
}

// tail of sum_{p>X} 1/(2 p^2) and friends, as the integral of 1/(2 t^2 log t)
inline double prime_square_tail(double X) {
    auto f = [](double t) { return 1.0 / (2.0 * t * t * std::log(t)); };
    double lo = X, hi = 1e13;
    const int steps = 4000;
    double s = 0.0;
    double la = std::log(lo), lb = std::log(hi);
    double h = (lb - la) / steps;
    for (int i = 0; i < steps; ++i) {
        double u0 = la + i * h, u2 = u0 + h, u1 = 0.5 * (u0 + u2);
        double t0 = std::exp(u0), t1 = std::exp(u1), t2 = std::exp(u2);
        s += (u2 - u0) / 6.0 * (f(t0) * t0 + 4.0 * f(t1) * t1 + f(t2) * t2);
    }
    return s;
}

namespace detail {

// the Artin constant with the product tail folded in; good to ~1e-11
inline const ConstantEstimate& artin_reference() {
    static const ConstantEstimate a = [] {
        auto c = artin_product(10000000);
        double tail = 2.0 * prime_square_tail(double(c.cutoff_or_terms));
        c.value *= std::exp(-tail);
        c.error_estimate = tail * 0.01;
        return c;
    }();
    return a;
}

// largest odd m with a = b^m, and that b
inline std::pair<i64, int> odd_power_root(i64 a) {
    for (int m = 61; m >= 3; m -= 2) {
        double est = std::pow(std::fabs(double(a)), 1.0 / m);
        for (i64 b = i64(est) - 1; b <= i64(est) + 1; ++b) {
            if (b < 2) continue;
            __int128 v = 1;
            for (int i = 0; i < m; ++i) v *= b;
            if (a > 0 && v == a) return {b, m};
            if (a < 0 && -v == a) return {-b, m};
        }
    }
    return {a, 1};
}

}  // namespace detail

// corrected density of primes with fixed primitive root a: C(m) with the
// squarefree-part adjustment when the squarefree part is 1 mod 4
inline ConstantEstimate hooley_density(i64 a) {
    if (a == 0 || a == 1 || a == -1)
        throw std::invalid_argument("hooley_density: 0 and +-1 are never primitive roots");
    if (a > 1) {
        u64 r = isqrt(u64(a));
        if (r * r == u64(a))
            throw std::invalid_argument("hooley_density: perfect squares are never primitive roots");
    }
    auto [b, m] = detail::odd_power_root(a);
    auto bf = factorize(u64(b < 0 ? -b : b));
    i64 a1 = b < 0 ? -1 : 1;  // squarefree part, sign included
    for (auto& [p, e] : bf.factors)
        if (e % 2) a1 *= i64(p);
    double dens = detail::artin_reference().value;
    auto hf = factorize(u64(m));
    for (auto& [q, e] : hf.factors) {
        double qd = double(q);
        dens *= (1.0 - 1.0 / (qd - 1.0)) / (1.0 - 1.0 / (qd * (qd - 1.0)));
    }
    i64 a1m4 = ((a1 % 4) + 4) % 4;
    if (a1m4 == 1) {
        double prod = 1.0;
        auto sf = factorize(u64(a1 < 0 ? -a1 : a1));
        int mu_a1 = (sf.factors.size() % 2) ? -1 : 1;  // |a1| is squarefree
        for (auto& [q, e] : sf.factors) {
            double qd = double(q);
            if (u64(m) % q == 0) prod *= 1.0 / (qd - 2.0);
            else prod *= 1.0 / (qd * qd - qd - 1.0);
        }
        dens *= (1.0 - double(mu_a1) * prod);
    }
    ConstantEstimate c;
    c.name = "hooley-density";
    c.value = dens;
    c.method = EstimateMethod::euler_product;
    c.cutoff_or_terms = detail::artin_reference().cutoff_or_terms;
    c.error_estimate = detail::artin_reference().error_estimate;
    return c;
}

// ---------------------------------------------------------------------------
// Euler and Mertens constants by rapidly convergent zeta series
// ---------------------------------------------------------------------------

inline ConstantEstimate euler_mertens_series(const std::string& which) {
    ConstantEstimate c;
    c.method = EstimateMethod::zeta_series;
    KahanSum s;
    s.add(1.0 - std::log(2.0));
    int terms = 0;
    if (which == "gamma") {
        for (int n = 2; n <= 72; ++n) {
            double zm1 = detail::zeta_minus_one(n);
            double t = ((n % 2 == 0) ? 1.0 : -1.0) * zm1 / n;
            s.add(t);
            terms = n;
            if (zm1 < 1e-18) break;
        }
        c.name = "gamma";
    } else if (which == "B1") {
        for (int n = 2; n <= 72; ++n) {
            double zm1 = detail::zeta_minus_one(n);
            double t = ((n % 2 == 0) ? 1.0 : -1.0) * zm1;
            int mun = mobius(u64(n));
            if (mun) t += double(mun) * std::log1p(zm1);
            s.add(t / n);
            terms = n;
            if (zm1 < 1e-18) break;
        }
        c.name = "B1";
    } else {
        throw std::invalid_argument("euler_mertens_series: unknown constant");
    }
    c.value = s.value();
    c.cutoff_or_terms = u64(terms);
    c.error_estimate = std::pow(2.0, -double(terms));
    return c;
}

// B2 = sum_p sum_{k>=2} 1/(k p^k), B3 its alternating companion
inline ConstantEstimate prime_power_sum(const std::string& which, u64 cutoff) {
    KahanSum s;
    bool alt = (which == "B3");
    if (!alt && which != "B2") throw std::invalid_argument("prime_power_sum: unknown constant");
    for_each_prime(2, cutoff, [&](u64 p) {
        double x = 1.0 / double(p);
        s.add(alt ? (x - std::log1p(x)) : (-std::log1p(-x) - x));
    });
    ConstantEstimate c;
    c.name = which;
    double tail = prime_square_tail(double(cutoff));
    c.value = s.value() + tail;
    c.method = EstimateMethod::partial_sum;
    c.cutoff_or_terms = cutoff;
    c.error_estimate = tail * 0.05 + 1.0 / (3.0 * double(cutoff) * double(cutoff));
    return c;
}

// ---------------------------------------------------------------------------
// connecting constants over a prime subset
// ---------------------------------------------------------------------------

struct ConnectingConstants {
    ConstantEstimate beta;    // sum 1/p - density log log x
    ConstantEstimate gamma_c; // sum log p/(p-1) - density log x
    // Mertens-identity residual beta + gamma + sum_{p<=x} sum_{k>=2} 1/(k p^k);
    // tends to zero for the full prime set, where the limits of -gamma and of
    // the power tail are the Euler constant and its Mertens companion
    double crosscheck = 0.0;
    u64 counted = 0;
};

inline ConnectingConstants connecting_constants(const std::function<bool(u64)>& in_subset,
                                                double density, u64 cutoff) {
    if (cutoff < 10) throw std::invalid_argument("connecting_constants: cutoff too small");
    KahanSum recip, logs, tail;
    u64 counted = 0;
    for_each_prime(2, cutoff, [&](u64 p) {
        if (!in_subset(p)) return;
        ++counted;
        double x = 1.0 / double(p);
        recip.add(x);
        logs.add(std::log(double(p)) / double(p - 1));
        tail.add(-std::log1p(-x) - x);
    });
    ConnectingConstants out;
    out.counted = counted;
    double lx = std::log(double(cutoff));
    out.beta = {"beta", recip.value() - density * std::log(lx), EstimateMethod::partial_sum, cutoff, 0.0};
    out.gamma_c = {"gamma", logs.value() - density * lx, EstimateMethod::partial_sum, cutoff, 0.0};
    out.crosscheck = out.beta.value + out.gamma_c.value + tail.value();
    return out;
}

// the primes with a fixed primitive root u, decided by the order test
inline std::function<bool(u64)> primitive_root_subset(i64 u) {
    return [u](u64 p) {
        i64 v = ((u % i64(p)) + i64(p)) % i64(p);
        if (v == 0) return false;
        if (p == 2) return true;
        auto qs = prime_divisors(factorize(p - 1));
        for (u64 q : qs)
            if (powmod(u64(v), (p - 1) / q, p) == 1) return false;
        return true;
    };
}

// ---------------------------------------------------------------------------
// Mertens products and the log-weighted nu series
// ---------------------------------------------------------------------------

enum class MertensVariant { inverse, plus, log_weighted };

struct MertensProduct {
    ConstantEstimate product;
    double predicted = 0.0;
    double nu_partial = 0.0;  // only for the log-weighted variant
};

constexpr double kEulerGamma = 0.5772156649015328606;

inline MertensProduct mertens_products(u64 cutoff, MertensVariant variant) {
    if (cutoff < 10) throw std::invalid_argument("mertens_products: cutoff must be >= 10");
    KahanSum logs, nu;
    for_each_prime(2, cutoff, [&](u64 p) {
        double x = 1.0 / double(p);
        switch (variant) {
            case MertensVariant::inverse: logs.add(-std::log1p(-x)); break;
            case MertensVariant::plus: logs.add(std::log1p(x)); break;
            case MertensVariant::log_weighted: {
                double r = std::log(double(p)) / double(p - 1);
                logs.add(-std::log1p(-r));
                nu.add(-std::log1p(-r) - r);
                break;
            }
        }
    });
    MertensProduct out;
    out.product.method = EstimateMethod::euler_product;
    out.product.cutoff_or_terms = cutoff;
    out.product.value = std::exp(logs.value());
    double lx = std::log(double(cutoff));
    switch (variant) {
        case MertensVariant::inverse:
            out.product.name = "mertens-inverse";
            out.predicted = std::exp(kEulerGamma) * lx;
            break;
        case MertensVariant::plus:
            out.product.name = "mertens-plus";
            out.predicted = 6.0 * std::exp(kEulerGamma) / (M_PI * M_PI) * lx;
            break;
        case MertensVariant::log_weighted:
            out.product.name = "mertens-log";
            out.nu_partial = nu.value();
            out.predicted = std::exp(out.nu_partial - kEulerGamma) * double(cutoff);
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// delta products and the least-root densities D(m)
// ---------------------------------------------------------------------------

inline ConstantEstimate delta_products(int j, u64 cutoff) {
    if (j < 1 || j > 4) throw std::invalid_argument("delta_products: j must be 1..4");
    if (cutoff < 100) throw std::invalid_argument("delta_products: cutoff must be >= 100");
    static const double binom[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    KahanSum logs;
    for_each_prime(2, cutoff, [&](u64 p) {
        double pd = double(p);
        double base = 1.0 / (pd * (pd - 1.0));
        double f = 0.0;
        double pw = 1.0;  // p^{1-i} starting at i = 1
        for (int i = 1; i <= j; ++i) {
            double sign = (i % 2) ? -1.0 : 1.0;
            f += binom[j][i] * sign * pw * base;
            pw /= pd;
        }
        logs.add(std::log1p(f));
    });
    ConstantEstimate c;
    c.name = "delta" + std::to_string(j);
    c.value = std::exp(logs.value());
    c.method = EstimateMethod::euler_product;
    c.cutoff_or_terms = cutoff;
    c.error_estimate = double(j) * std::log(double(cutoff) / double(cutoff - 1));
    return c;
}

// the delta factors are also the k-th moment constants of phi(p-1)/(p-1):
// 1 - (1 - (1-1/p)^k)/(p-1) expands to the same displayed product
inline double phi_moment_constant(int k, u64 cutoff = 1000000) {
    if (k >= 1 && k <= 4) return delta_products(k, cutoff).value;
    KahanSum logs;
    for_each_prime(2, cutoff, [&](u64 p) {
        double q = 1.0 - std::pow(1.0 - 1.0 / double(p), k);
        logs.add(std::log1p(-q / double(p - 1)));
    });
    return std::exp(logs.value());
}

// density of primes whose least primitive root equals m, for the m with a
// published delta-product expansion; zero for other m
inline double least_root_density_constant(u64 m, u64 cutoff = 1000000) {
    double d1 = delta_products(1, cutoff).value;
    double d2 = delta_products(2, cutoff).value;
    double d3 = delta_products(3, cutoff).value;
    double d4 = delta_products(4, cutoff).value;
    switch (m) {
        case 2: return d1;
        case 3: return d1 - d2;
        case 5: return 20.0 / 19 * d1 - 200.0 / 91 * d2 + 500.0 / 439 * d3;
        case 6: return d1 - 282.0 / 91 * d2 + 1000.0 / 439 * d3;
        case 7:
            return d1 - (4 + 9.0 / 91 + 5.0 / 281) * d2 +
                   (6 + 183.0 / 439 + 4836.0 / 67585 + 147193.0 / 29669815) * d3 -
                   (3 + 1107.0 / 2131 + 71825.0 / 12901197 + 26503425.0 / 2749409807) * d4;
        default: return 0.0;
    }
}

// ---------------------------------------------------------------------------
// fractional part sums
// ---------------------------------------------------------------------------

enum class FractionalMode { integers, primes, primes_in_ap };

inline double fractional_part_sum(u64 x, FractionalMode mode, int k = 1, u64 q = 0, u64 a = 0) {
    if (x < 1) throw std::invalid_argument("fractional_part_sum: x must be >= 1");
    if (k < 1) throw std::invalid_argument("fractional_part_sum: k must be >= 1");
    KahanSum s;
    auto term = [&](u64 n) {
        if (k == 1) {
            s.add(double(x % n) / double(n));
            return;
        }
        u128 nk = 1;
        bool big = false;
        for (int i = 0; i < k; ++i) {
            nk *= n;
            if (nk > u128(x)) { big = true; break; }
        }
        if (!big) s.add(double(x % u64(nk)) / double(nk));
        else s.add(double(x) * std::pow(double(n), -k));
    };
    switch (mode) {
        case FractionalMode::integers:
            for (u64 n = 1; n <= x; ++n) term(n);
            break;
        case FractionalMode::primes:
            for_each_prime(2, x, term);
            break;
        case FractionalMode::primes_in_ap:
            if (q < 2 || std::gcd(q, a) != 1) throw std::invalid_argument("fractional_part_sum: bad progression");
            for_each_prime(2, x, [&](u64 p) { if (p % q == a % q) term(p); });
            break;
    }
    return s.value();
}

// (phi(u)/u) / Gamma(alpha_u) times the base-u Wieferich correction product;
// the constant in the integer-count main term
inline ConstantEstimate integer_count_constant(i64 u, u64 wieferich_cutoff = 2000000) {
    double alpha = hooley_density(u).value;
    u64 au = u64(u < 0 ? -u : u);
    double phi_ratio = double(euler_phi(au)) / double(au);
    KahanSum corr;
    for_each_prime(2, wieferich_cutoff, [&](u64 p) {
        if (au % p == 0) return;
        u64 p2 = p * p;
        u64 v = u64(((u % i64(p2)) + i64(p2))) % p2;
        if (powmod(v, p - 1, p2) == 1) corr.add(std::log1p(-1.0 / (double(p) * double(p))));
    });
    ConstantEstimate c;
    c.name = "integer-count-constant";
    c.value = phi_ratio / std::tgamma(alpha) * std::exp(corr.value());
    c.method = EstimateMethod::closed_form;
    c.cutoff_or_terms = wieferich_cutoff;
    c.error_estimate = 1e-12;
    return c;
}

}  // namespace artin
