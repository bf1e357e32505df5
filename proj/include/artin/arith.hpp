#pragma once

// Exact 64-bit integer arithmetic and the multiplicative functions
// (phi, lambda, mu, omega, Omega) every other component builds on.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace artin {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return r;
}

// mod inverse via extended gcd; m need not be prime, gcd(a,m)=1 required
inline u64 invmod(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = i64(m), nr = i64(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("invmod: arguments not coprime");
    return u64(t < 0 ? t + i64(m) : t);
}

inline u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

// ---------------------------------------------------------------------------
// factorization: trial division over a sieved base, Pollard rho for the rest
// ---------------------------------------------------------------------------

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;  // ascending primes, exponents >= 1
};

namespace detail {

inline const std::vector<u32>& small_primes() {
    static const std::vector<u32> table = [] {
        const u32 limit = 1000000;
        std::vector<bool> comp(limit + 1, false);
        std::vector<u32> ps;
        for (u32 i = 2; i <= limit; ++i) {
            if (!comp[i]) {
                ps.push_back(i);
                for (u64 j = u64(i) * i; j <= limit; j += i) comp[j] = true;
            }
        }
        return ps;
    }();
    return table;
}

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

// deterministic for all n < 2^64 with this witness set
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!detail::miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

namespace detail {

// Brent-cycle Pollard rho with the deterministic increment sequence c = 1,2,3,...
inline u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y;
        const u64 m = 128;
        u64 q = 1;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

inline Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u64 m = n;
    for (u32 p : detail::small_primes()) {
        if (u64(p) * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) m /= p, ++e;
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        std::vector<u64> rest;
        detail::factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            f.factors.emplace_back(rest[i], int(j - i));
            i = j;
        }
    }
    return f;
}

inline std::vector<u64> prime_divisors(const Factorization& f) {
    std::vector<u64> ps;
    ps.reserve(f.factors.size());
    for (auto& [p, e] : f.factors) ps.push_back(p);
    return ps;
}

inline std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (auto& [p, e] : f.factors) {
        size_t sz = ds.size();
        u64 pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// ---------------------------------------------------------------------------
// multiplicative functions
// ---------------------------------------------------------------------------

struct ArithmeticProfile {
    u64 n = 1;
    u64 phi = 1;
    u64 lambda = 1;
    int mu = 1;
    int omega = 0;
    int big_omega = 0;
};

inline u64 lambda_prime_power(u64 p, int v) {
    u64 pv = 1;
    for (int i = 0; i < v; ++i) pv *= p;
    if (p == 2 && v >= 3) return pv >> 2;
    return pv / p * (p - 1);
}

inline ArithmeticProfile profile(const Factorization& f) {
    ArithmeticProfile a;
    a.n = f.n;
    for (auto& [p, e] : f.factors) {
        u64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        a.phi *= pe / p * (p - 1);
        a.lambda = lcm_u64(a.lambda, lambda_prime_power(p, e));
        a.mu = (e >= 2) ? 0 : -a.mu;
        a.omega += 1;
        a.big_omega += e;
    }
    return a;
}

inline ArithmeticProfile profile(u64 n) { return profile(factorize(n)); }

inline int mobius(u64 n) { return profile(n).mu; }
inline u64 euler_phi(u64 n) { return profile(n).phi; }
inline u64 carmichael_lambda(u64 n) { return profile(n).lambda; }
inline std::pair<int, int> prime_divisor_counts(u64 n) {
    auto a = profile(n);
    return {a.omega, a.big_omega};
}

// ---------------------------------------------------------------------------
// quadratic symbols
// ---------------------------------------------------------------------------

// Jacobi symbol (a|n) for odd n >= 1; a may be negative
inline int jacobi(i64 a, u64 n) {
    if (n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd");
    int t = 1;
    if (a < 0) {
        a = -a;
        if (n % 4 == 3) t = -t;
    }
    u64 x = u64(a) % n;
    while (x) {
        while (x % 2 == 0) {
            x >>= 1;
            if (n % 8 == 3 || n % 8 == 5) t = -t;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) t = -t;
        x %= n;
    }
    return n == 1 ? t : 0;
}

// Legendre symbol via Euler's criterion, p an odd prime
inline int legendre(i64 a, u64 p) {
    u64 r = u64(((a % i64(p)) + i64(p))) % p;
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// bulk sieve tables for the counting experiments
// ---------------------------------------------------------------------------

struct SieveTables {
    u64 limit = 0;
    std::vector<u32> spf;  // smallest prime factor, spf[0]=spf[1]=0

    explicit SieveTables(u64 n) : limit(n), spf(n + 1, 0) {
        for (u64 i = 2; i <= n; ++i) {
            if (spf[i] == 0) {
                for (u64 j = i; j <= n; j += i)
                    if (spf[j] == 0) spf[j] = u32(i);
            }
        }
    }

    template <class F>
    void factor_visit(u64 n, F&& f) const {  // f(p, e)
        while (n > 1) {
            u64 p = spf[n];
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            f(p, e);
        }
    }

    u64 phi(u64 n) const {
        u64 r = n;
        factor_visit(n, [&](u64 p, int) { r -= r / p; });
        return r;
    }

    u64 lambda(u64 n) const {
        u64 r = 1;
        factor_visit(n, [&](u64 p, int e) { r = lcm_u64(r, lambda_prime_power(p, e)); });
        return r;
    }

    int mu(u64 n) const {
        int r = 1;
        bool sq = false;
        factor_visit(n, [&](u64, int e) {
            if (e >= 2) sq = true;
            r = -r;
        });
        return sq ? 0 : r;
    }
};

}  // namespace artin
