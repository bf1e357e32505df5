#pragma once

// Quadratic Gauss sums in direct and closed form, the Landsberg-Schaar
// reciprocity residual, quadratic-polynomial character sums, and the Weil
// bound as a numeric inequality.

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "artin/arith.hpp"
#include "artin/primes.hpp"

namespace artin {

enum class GaussMethod { direct, closed_form };

struct GaussSumValue {
    i64 a = 1;
    i64 b = 0;
    i64 n = 1;
    std::complex<double> value;
    GaussMethod method = GaussMethod::direct;
};

namespace detail {

// angles are reduced mod 2 pi through the integer residue before exponentiation
inline std::complex<double> cis_frac(i64 num, i64 den) {
    // e^{2 pi i num/den}, den != 0
    i64 r = num % den;
    double ang = 2.0 * M_PI * double(r) / double(den);
    return {std::cos(ang), std::sin(ang)};
}

inline std::complex<double> cis_half_frac(i64 num, i64 den) {
    // e^{i pi num/den}
    i64 r = num % (2 * den);
    double ang = M_PI * double(r) / double(den);
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace detail

// S(a,b,n) = sum_{x=0}^{|n|-1} e^{2 pi i (a x^2 + b x)/n}
inline GaussSumValue gauss_sum_direct(i64 a, i64 b, i64 n) {
    if (n == 0) throw std::invalid_argument("gauss_sum_direct: modulus must be nonzero");
    if (a == 0) throw std::invalid_argument("gauss_sum_direct: a must be nonzero");
    GaussSumValue g{a, b, n, {0.0, 0.0}, GaussMethod::direct};
    u64 m = u64(n < 0 ? -n : n);
    for (u64 x = 0; x < m; ++x) {
        __int128 e = (__int128(a) * i64(x) * i64(x) + __int128(b) * i64(x)) % n;
        g.value += detail::cis_frac(i64(e), n);
    }
    return g;
}

// half-exponent variant used by the reciprocity identity
inline std::complex<double> gauss_sum_direct_half(i64 a, i64 b, i64 n) {
    if (n == 0) throw std::invalid_argument("gauss_sum_direct_half: modulus must be nonzero");
    std::complex<double> s = 0.0;
    u64 m = u64(n < 0 ? -n : n);
    for (u64 x = 0; x < m; ++x) {
        __int128 e = (__int128(a) * i64(x) * i64(x) + __int128(b) * i64(x)) % (2 * __int128(n));
        s += detail::cis_half_frac(i64(e), n);
    }
    return s;
}

// classical four-case evaluation of sum_x e^{2 pi i a x^2 / n}, gcd(a,n) = 1:
//   n = 1 mod 4:  (a|n)  sqrt n
//   n = 3 mod 4:  i(a|n) sqrt n
//   n = 2 mod 4:  0
//   n = 0 mod 4:  (1+i) eps_a^{-1} (n|a) sqrt n   (a odd)
inline GaussSumValue gauss_sum_closed(i64 a, i64 n) {
    if (n < 1) throw std::invalid_argument("gauss_sum_closed: modulus must be positive");
    u64 un = u64(n);
    i64 am = ((a % n) + n) % n;
    if (std::gcd(u64(am), un) != 1) throw std::invalid_argument("gauss_sum_closed: gcd(a,n) != 1");
    GaussSumValue g{a, 0, n, {0.0, 0.0}, GaussMethod::closed_form};
    double rt = std::sqrt(double(n));
    switch (un % 4) {
        case 1:
            g.value = {jacobi(a, un) * rt, 0.0};
            break;
        case 3:
            g.value = {0.0, jacobi(a, un) * rt};
            break;
        case 2:
            g.value = {0.0, 0.0};
            break;
        default: {  // n = 0 mod 4, gcd forces a odd
            u64 ua = u64(am);
            int sym = (ua == 1) ? 1 : jacobi(i64(un % ua), ua);
            std::complex<double> eps_inv = (am % 4 == 1) ? std::complex<double>(1, 0)
                                                         : std::complex<double>(0, -1);
            g.value = std::complex<double>(1, 1) * eps_inv * (double(sym) * rt);
            break;
        }
    }
    return g;
}

// |S(a,b,c) - |c/a|^{1/2} e^{i pi (sgn(ac) - b^2/(ac))/4} S~(-c,-b,a)| where the
// right-hand sum is evaluated in the half-exponent convention that makes the
// identity hold for every a, c != 0
inline double schaar_reciprocity_residual(i64 a, i64 b, i64 c) {
    if (a == 0 || c == 0) throw std::invalid_argument("schaar_reciprocity_residual: ac must be nonzero");
    std::complex<double> lhs = gauss_sum_direct(a, b, c).value;
    double sgn = (double(a) * double(c) > 0) ? 1.0 : -1.0;
    double phase = (sgn - double(2 * b) * double(2 * b) / (2.0 * double(a) * double(c))) * M_PI / 4.0;
    std::complex<double> factor = std::sqrt(std::fabs(double(c) / double(2 * a))) *
                                  std::complex<double>(std::cos(phase), std::sin(phase));
    std::complex<double> rhs = factor * gauss_sum_direct_half(-c, -2 * b, 2 * a);
    return std::abs(lhs - rhs);
}

// sum_x (f(x)|p) for f = a x^2 + b x + c, p odd prime, p not dividing a;
// asserts agreement with the closed form -(a|p) resp. (p-1)(a|p)
inline i64 quad_char_poly_sum(i64 a, i64 b, i64 c, u64 p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("quad_char_poly_sum: p must be an odd prime");
    if (a % i64(p) == 0) throw std::invalid_argument("quad_char_poly_sum: p divides a");
    i64 s = 0;
    for (u64 x = 0; x < p; ++x) {
        i64 fx = (a % i64(p)) * i64(mulmod(x, x, p)) + (b % i64(p)) * i64(x) + c;
        s += legendre(fx, p);
    }
    i64 disc = b * b - 4 * a * c;
    i64 expected = (disc % i64(p) == 0) ? i64(p - 1) * legendre(a, p) : -legendre(a, p);
    if (s != expected) throw std::logic_error("quad_char_poly_sum: closed form mismatch");
    return s;
}

// (d-1) sqrt p - |sum_x chi(f(x))| for a polynomial with distinct roots mod p
// given by its coefficient list (constant term first); must be >= 0
inline double weil_residual(const std::vector<i64>& coeffs, u64 p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("weil_residual: p must be an odd prime");
    int d = int(coeffs.size()) - 1;
    while (d >= 0 && coeffs[d] % i64(p) == 0) --d;
    if (d < 2) throw std::invalid_argument("weil_residual: degree must be >= 2");
    // check the distinct-root hypothesis: f splits with simple roots mod p
    std::vector<u64> f(d + 1);
    for (int i = 0; i <= d; ++i) f[i] = u64(((coeffs[i] % i64(p)) + i64(p))) % p;
    int roots = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (int i = d; i >= 0; --i) v = (mulmod(v, x, p) + f[i]) % p;
        if (v == 0) {
            ++roots;
            // simple root: derivative must not vanish
            u64 dv = 0;
            for (int i = d; i >= 1; --i) dv = (mulmod(dv, x, p) + mulmod(u64(i) % p, f[i], p)) % p;
            if (dv == 0) throw std::invalid_argument("weil_residual: repeated root mod p");
        }
    }
    if (roots != d) throw std::invalid_argument("weil_residual: polynomial does not split mod p");
    i64 s = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (int i = d; i >= 0; --i) v = (mulmod(v, x, p) + f[i]) % p;
        s += legendre(i64(v), p);
    }
    return double(d - 1) * std::sqrt(double(p)) - std::fabs(double(s));
}

}  // namespace artin
