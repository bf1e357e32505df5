#pragma once

// Multiplicative orders, primitive-root predicates and searches, discrete
// logarithms, lifting to prime squares, and primitive lambda-root counts.

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "artin/arith.hpp"
#include "artin/primes.hpp"

namespace artin {

struct OrderRecord {
    u64 modulus = 2;
    u64 element = 1;
    u64 order = 1;
    bool is_primitive = false;
};

namespace detail {

// order of u mod n given a multiple m of it and the prime divisors of m
inline u64 order_from_multiple(u64 u, u64 n, u64 m, const std::vector<u64>& m_primes) {
    u64 t = m;
    for (u64 q : m_primes) {
        while (t % q == 0 && powmod(u, t / q, n) == 1) t /= q;
    }
    return t;
}

}  // namespace detail

inline u64 mult_order(u64 u, u64 n) {
    if (n < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    u %= n;
    if (std::gcd(u, n) != 1) throw std::invalid_argument("mult_order: element not coprime to modulus");
    u64 lam = carmichael_lambda(n);
    auto lf = factorize(lam);
    return detail::order_from_multiple(u, n, lam, prime_divisors(lf));
}

inline OrderRecord order_record(u64 u, u64 n) {
    OrderRecord r;
    r.modulus = n;
    r.element = u % n;
    r.order = mult_order(u, n);
    r.is_primitive = (r.order == carmichael_lambda(n));
    return r;
}

// u primitive mod p^k iff u^{p^{k-1}(p-1)/q} != 1 (mod p^k) for all primes q | p^{k-1}(p-1).
// p = 2 is handled directly: only 2 and 4 have primitive roots.
inline bool gauss_primitive_test(u64 u, u64 p, int k = 1) {
    if (k < 1) throw std::invalid_argument("gauss_primitive_test: exponent must be >= 1");
    if (p == 2) {
        if (k == 1) return u % 2 == 1;
        if (k == 2) return u % 4 == 3;
        return false;
    }
    if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("gauss_primitive_test: p must be an odd prime");
    u64 pk = p;
    for (int i = 1; i < k; ++i) {
        if (pk > (u64(1) << 62) / p) throw std::overflow_error("gauss_primitive_test: p^k too large");
        pk *= p;
    }
    u %= pk;
    if (u % p == 0) throw std::invalid_argument("gauss_primitive_test: element divisible by p");
    u64 m = pk / p * (p - 1);
    auto qs = prime_divisors(factorize(p - 1));
    if (k >= 2) qs.push_back(p);
    for (u64 q : qs)
        if (powmod(u, m / q, pk) == 1) return false;
    return true;
}

// characteristic function of m-th power nonresidues mod p^k (m in {2,3,4});
// when m in {3,4} does not divide p-1 every unit is an m-th power, so false
inline bool power_nonresidue_indicator(i64 r, u64 p, int k, int m) {
    if (m != 2 && m != 3 && m != 4) throw std::invalid_argument("power_nonresidue_indicator: m must be 2, 3 or 4");
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("power_nonresidue_indicator: p must be an odd prime");
    u64 pk = p;
    for (int i = 1; i < k; ++i) pk *= p;
    u64 rr = u64(((r % i64(pk)) + i64(pk))) % pk;
    if (rr % p == 0) throw std::invalid_argument("power_nonresidue_indicator: gcd(r,p) != 1");
    if ((m == 3 || m == 4) && (p - 1) % u64(m) != 0) return false;
    u64 e = pk / p * (p - 1) / u64(m);
    return powmod(rr, e, pk) != 1;
}

// baby-step giant-step; base must be primitive mod p
inline u64 discrete_log(u64 u, u64 base, u64 p) {
    if (!gauss_primitive_test(base, p)) throw std::invalid_argument("discrete_log: base not primitive");
    u %= p;
    if (u == 0) throw std::invalid_argument("discrete_log: element not coprime to modulus");
    u64 m = isqrt(p - 2) + 1;
    std::unordered_map<u64, u64> baby;
    baby.reserve(m * 2);
    u64 v = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(v, j);
        v = mulmod(v, base, p);
    }
    u64 giant = powmod(invmod(base, p), m, p);
    u64 g = u;
    for (u64 i = 0; i <= m; ++i) {
        auto it = baby.find(g);
        if (it != baby.end()) return (i * m + it->second) % (p - 1);
        g = mulmod(g, giant, p);
    }
    throw std::logic_error("discrete_log: not found");
}

// least primitive root g(p); g(2) = 1 by convention
inline u64 least_primitive_root(u64 p) {
    if (p == 2) return 1;
    auto qs = prime_divisors(factorize(p - 1));
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : qs)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
}

// least prime primitive root g*(p); the p^2 scan bound is defensive only
inline u64 least_prime_primitive_root(u64 p) {
    if (p < 3) throw std::invalid_argument("least_prime_primitive_root: p must be >= 3");
    auto qs = prime_divisors(factorize(p - 1));
    u64 bound = p * p;
    for (u64 g = 2; g <= bound; ++g) {
        if (!is_prime(g)) continue;
        if (g % p == 0) continue;
        bool ok = true;
        for (u64 q : qs)
            if (powmod(g % p, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::runtime_error("least_prime_primitive_root: no prime generator below p^2");
}

struct LiftReport {
    u64 p = 3;
    u64 root_mod_p = 2;
    u64 exceptional_x = 0;  // the unique offset x with root + p*x not primitive mod p^2
    bool lifts = true;      // whether root itself stays primitive mod p^2
};

inline LiftReport lift_primitive_root(u64 g, u64 p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("lift_primitive_root: p must be an odd prime");
    if (!gauss_primitive_test(g, p)) throw std::invalid_argument("lift_primitive_root: g not primitive mod p");
    LiftReport r;
    r.p = p;
    r.root_mod_p = g % p;
    u64 p2 = p * p;
    u64 t = powmod(g, p - 1, p2);
    r.lifts = (t != 1);
    // x = ((1 - g^{p-1})/p) * ((p-1) g^{p-2})^{-1}  (mod p)
    u64 w = (t - 1) / p % p;                       // (g^{p-1} - 1)/p mod p
    u64 denom = mulmod((p - 1) % p, powmod(g, p - 2, p), p);
    r.exceptional_x = mulmod((p - w) % p, invmod(denom, p), p);
    return r;
}

// number of residues of maximal order lambda(N) in (Z/N)^*
// computed from the cyclic decomposition of the unit group
inline u64 primitive_root_count(u64 N) {
    if (N == 0) throw std::invalid_argument("primitive_root_count: N must be positive");
    if (N <= 2) return 1;
    std::vector<u64> cyclic;  // orders of the cyclic factors
    auto f = factorize(N);
    for (auto& [p, e] : f.factors) {
        u64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 2) cyclic.push_back(2);
            else if (e >= 3) { cyclic.push_back(2); cyclic.push_back(pe >> 2); }
        } else {
            cyclic.push_back(pe / p * (p - 1));
        }
    }
    u64 lam = 1, phi = 1;
    for (u64 d : cyclic) { lam = lcm_u64(lam, d); phi *= d; }
    u64 count = phi;
    auto lf = factorize(lam);
    for (auto& [q, e] : lf.factors) {
        u64 qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        int m = 0;
        for (u64 d : cyclic)
            if (d % qe == 0) ++m;
        u64 qm = 1;
        for (int i = 0; i < m; ++i) qm *= q;
        count = count / qm * (qm - 1);
    }
    return count;
}

enum class LucasVerdict { proved_prime, composite, inconclusive };

// n prime iff some unit u has u^{n-1} = 1 and u^{(n-1)/q} != 1 for all q | n-1
inline LucasVerdict lucas_primality(u64 n, u64 u) {
    if (n < 2) throw std::invalid_argument("lucas_primality: n must be >= 2");
    u %= n;
    if (std::gcd(u, n) != 1) throw std::invalid_argument("lucas_primality: witness not coprime");
    if (powmod(u, n - 1, n) != 1) return LucasVerdict::composite;
    for (u64 q : prime_divisors(factorize(n - 1)))
        if (powmod(u, (n - 1) / q, n) == 1) return LucasVerdict::inconclusive;
    return LucasVerdict::proved_prime;
}

}  // namespace artin
