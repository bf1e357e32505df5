#pragma once

// Digit expansions of 1/p, continued fractions of sqrt(d), generalized
// Bernoulli numbers, and class numbers of Q(sqrt(-p)) and Q(sqrt(p)) with
// independent cross-checking routes.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "artin/arith.hpp"
#include "artin/order.hpp"

namespace artin {

struct DigitExpansion {
    u64 p = 7;
    u64 base = 10;
    std::vector<u32> digits;  // x_1 ... x_T, one full period of 1/p in the base
    u64 period = 0;
};

inline DigitExpansion digit_expansion(u64 p, u64 base) {
    if (base < 2) throw std::invalid_argument("digit_expansion: base must be >= 2");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("digit_expansion: p must be an odd prime");
    if (base % p == 0) throw std::invalid_argument("digit_expansion: p divides the base");
    DigitExpansion d;
    d.p = p;
    d.base = base;
    d.period = mult_order(base % p, p);
    d.digits.reserve(d.period);
    u64 r = 1;
    for (u64 i = 0; i < d.period; ++i) {
        u128 t = u128(r) * base;
        d.digits.push_back(u32(u64(t / p)));
        r = u64(t % p);
    }
    if (r != 1) throw std::logic_error("digit_expansion: period did not close");
    return d;
}

// alternating digit sum of 1/p in base ell, ell a primitive root mod p;
// equals (ell+1) h(-p) for p = 3 mod 4
inline i64 girstmair_sum(u64 p, u64 ell) {
    if (p % 4 != 3 || p < 7) throw std::invalid_argument("girstmair_sum: p must be 7 or larger, 3 mod 4");
    if (!gauss_primitive_test(ell % p, p)) throw std::invalid_argument("girstmair_sum: base not primitive mod p");
    auto d = digit_expansion(p, ell);
    i64 s = 0;
    for (u64 n = 1; n <= d.period; ++n) s += (n % 2 == 0 ? i64(d.digits[n - 1]) : -i64(d.digits[n - 1]));
    return s;
}

// B_{1,chi} = (1/p) sum a (a|p); an integer equal to -h(-p) for p = 3 mod 4, p > 3
inline i64 bernoulli_b1chi(u64 p) {
    if (p % 4 != 3 || p < 7) throw std::invalid_argument("bernoulli_b1chi: p must be 7 or larger, 3 mod 4");
    i64 s = 0;
    for (u64 a = 1; a < p; ++a) s += i64(a) * legendre(i64(a), p);
    if (s % i64(p) != 0) throw std::logic_error("bernoulli_b1chi: sum not divisible by p");
    return s / i64(p);
}

struct ContinuedFractionExpansion {
    u64 d = 2;
    u64 a0 = 1;
    std::vector<u64> periodic;  // a_1 ... a_L with a_L = 2 a_0
};

inline ContinuedFractionExpansion sqrt_continued_fraction(u64 d) {
    if (d < 2) throw std::invalid_argument("sqrt_continued_fraction: d must be >= 2");
    u64 a0 = isqrt(d);
    if (a0 * a0 == d) throw std::invalid_argument("sqrt_continued_fraction: d is a perfect square");
    ContinuedFractionExpansion cf;
    cf.d = d;
    cf.a0 = a0;
    u64 m = 0, q = 1, a = a0;
    do {
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        cf.periodic.push_back(a);
    } while (q != 1 || a != 2 * a0);
    return cf;
}

// ---------------------------------------------------------------------------
// fundamental units and L(1,chi)
// ---------------------------------------------------------------------------

namespace detail {

// log of the fundamental unit of Q(sqrt p): the product of the complete
// quotients (P_i + sqrt D)/Q_i over one period of the continued fraction of
// sqrt(p) (p = 2,3 mod 4) or (1 + sqrt p)/2 (p = 1 mod 4)
inline double fundamental_unit_log(u64 p) {
    u64 P, Q;
    if (p % 4 == 1) { P = 1; Q = 2; } else { P = 0; Q = 1; }
    double sd = std::sqrt(double(p));
    u64 a = u64((double(P) + sd) / double(Q));
    std::vector<std::pair<u64, u64>> hist;
    for (;;) {
        P = a * Q - P;
        Q = (p - P * P) / Q;
        a = u64((double(P) + sd) / double(Q));
        for (size_t i = 0; i < hist.size(); ++i) {
            if (hist[i].first == P && hist[i].second == Q) {
                double s = 0.0;
                for (size_t j = i; j < hist.size(); ++j)
                    s += std::log((double(hist[j].first) + sd) / double(hist[j].second));
                return s;
            }
        }
        hist.emplace_back(P, Q);
        if (hist.size() > 100000) throw std::logic_error("fundamental_unit_log: period not found");
    }
}

// fundamental Pell solution x^2 - d y^2 = +-1 from the convergents; nullopt on overflow
inline std::optional<std::pair<u64, u64>> pell_fundamental(u64 d) {
    auto cf = sqrt_continued_fraction(d);
    u128 pk = cf.a0, pk1 = 1;
    u128 qk = 1, qk1 = 0;
    const u128 cap = u128(1) << 63;
    for (size_t i = 0; i + 1 < cf.periodic.size(); ++i) {
        u64 a = cf.periodic[i];
        u128 pn = u128(a) * pk + pk1;
        u128 qn = u128(a) * qk + qk1;
        if (pn >= cap || qn >= cap) return std::nullopt;
        pk1 = pk; pk = pn;
        qk1 = qk; qk = qn;
    }
    return std::make_pair(u64(pk), u64(qk));
}

}  // namespace detail

// Kronecker symbol of the fundamental discriminant attached to sign*p
inline int field_character(u64 n, u64 p, bool negative) {
    if (negative) return legendre(i64(n % p), p);  // p = 3 mod 4, conductor p, odd character
    if (p % 4 == 1) return legendre(i64(n % p), p);  // conductor p, even character
    if (n % 2 == 0) return 0;  // conductor 4p
    int s = legendre(i64(n % p), p);
    return (n % 4 == 3) ? -s : s;
}

// L(1,chi) for the quadratic character attached to -p (sign '-') or +p ('+').
// '-': exact finite form via the generalized Bernoulli number.
// '+': log-sine kernel over a full period of the field character.
inline double dirichlet_l_one(u64 p, char sign) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("dirichlet_l_one: p must be a prime >= 5");
    if (sign == '-') {
        if (p % 4 != 3) throw std::invalid_argument("dirichlet_l_one: odd character needs p = 3 mod 4");
        i64 b1 = bernoulli_b1chi(p);
        return -M_PI * double(b1) / std::sqrt(double(p));
    }
    u64 D = (p % 4 == 1) ? p : 4 * p;
    double s = 0.0;
    for (u64 a = 1; a < D; ++a) {
        int c = field_character(a, p, false);
        if (c) s += double(c) * std::log(std::sin(M_PI * double(a) / double(D)));
    }
    return -s / std::sqrt(double(D));
}

enum class ClassNumberMethod { reduced_forms, analytic_l, bernoulli, girstmair, hirzebruch };

struct ClassNumberRecord {
    bool negative = true;  // discriminant sign
    u64 p = 7;
    u64 h = 1;
    ClassNumberMethod method = ClassNumberMethod::reduced_forms;
    double l_value = 0.0;                              // L(1,chi) when computed
    std::optional<std::pair<u64, u64>> unit;           // fundamental Pell pair (a,b) when it fits
};

// h(-p) by exhaustive enumeration of reduced primitive forms of discriminant -p,
// cross-checked against -B_{1,chi} and the analytic formula
inline ClassNumberRecord class_number_imag(u64 p) {
    if (p % 4 != 3 || p < 7) throw std::invalid_argument("class_number_imag: p must be 7 or larger, 3 mod 4");
    u64 count = 0;
    for (u64 b = 1; 3 * b * b <= p; b += 2) {
        u64 ac4 = b * b + p;
        if (ac4 % 4) continue;
        u64 ac = ac4 / 4;
        for (u64 a = b; a * a <= ac; ++a) {
            if (a < b || ac % a) continue;
            u64 c = ac / a;
            if (a == b || a == c) count += 1;  // boundary forms carry b > 0 only
            else count += 2;                   // interior forms come in +-b pairs
        }
    }
    i64 b1 = bernoulli_b1chi(p);
    if (i64(count) != -b1) throw std::logic_error("class_number_imag: forms vs Bernoulli mismatch");
    double L = dirichlet_l_one(p, '-');
    double analytic = std::sqrt(double(p)) * L / M_PI;  // w = 2 for p > 3
    if (std::llround(analytic) != i64(count)) throw std::logic_error("class_number_imag: analytic mismatch");
    ClassNumberRecord r;
    r.negative = true;
    r.p = p;
    r.h = count;
    r.method = ClassNumberMethod::reduced_forms;
    r.l_value = L;
    return r;
}

// h(p) = round(sqrt(D) L(1,chi) / (2 log eps0)); rounding distance must be < 0.1
inline ClassNumberRecord class_number_real(u64 p) {
    if (p < 5 || !is_prime(p) || p % 4 == 0) throw std::invalid_argument("class_number_real: bad p");
    double L = dirichlet_l_one(p, '+');
    double log_eps = detail::fundamental_unit_log(p);
    double D = (p % 4 == 1) ? double(p) : 4.0 * double(p);
    double h = std::sqrt(D) * L / (2.0 * log_eps);
    double rounded = std::llround(h);
    if (std::fabs(h - rounded) >= 0.1) throw std::runtime_error("class_number_real: precision insufficient");
    ClassNumberRecord r;
    r.negative = false;
    r.p = p;
    r.h = u64(rounded);
    r.method = ClassNumberMethod::analytic_l;
    r.l_value = L;
    if (p % 4 != 1) r.unit = detail::pell_fundamental(p);
    return r;
}

// alternating sum over one period of the continued fraction of sqrt(p);
// equals 3 h(-p) when h(p) = 1 (checked internally)
inline i64 hirzebruch_sum(u64 p) {
    if (p % 4 != 3 || p < 7) throw std::invalid_argument("hirzebruch_sum: p must be 7 or larger, 3 mod 4");
    if (class_number_real(p).h != 1) throw std::runtime_error("hirzebruch_sum: hypothesis h(p) = 1 fails");
    auto cf = sqrt_continued_fraction(p);
    if (cf.periodic.size() % 2) throw std::logic_error("hirzebruch_sum: odd period");
    i64 s = 0;
    for (u64 n = 1; n <= cf.periodic.size(); ++n)
        s += (n % 2 == 0) ? i64(cf.periodic[n - 1]) : -i64(cf.periodic[n - 1]);
    return s;
}

}  // namespace artin
