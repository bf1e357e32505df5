#pragma once

// Counting experiments: primes and integers with a fixed primitive root,
// Wieferich searches, nonresidue-supported integers, totient/Carmichael
// statistics, least-root densities, and the totient ratio approximation chain.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "artin/arith.hpp"
#include "artin/constants.hpp"
#include "artin/order.hpp"
#include "artin/parallel.hpp"
#include "artin/primes.hpp"

namespace artin {

struct DensityReport {
    double x = 0.0;
    u64 count = 0;
    double predicted = 0.0;
    double constant = 0.0;
    double ratio = 0.0;
};

struct WieferichSet {
    i64 base = 2;
    u64 cutoff = 0;
    std::vector<u64> primes;
};

namespace detail {

// divide-out factorization of one segment [lo, hi]; visit(idx, p, k) runs for
// every prime power p^k || (lo + idx), the leftover prime included
template <class Visit>
void factor_segment(u64 lo, u64 hi, const std::vector<u64>& base, Visit&& visit) {
    size_t len = size_t(hi - lo + 1);
    std::vector<u64> rem(len);
    for (size_t i = 0; i < len; ++i) rem[i] = lo + u64(i);
    for (u64 p : base) {
        if (p * p > hi) break;
        u64 first = (lo + p - 1) / p * p;
        for (u64 j = first; j <= hi; j += p) {
            size_t i = size_t(j - lo);
            int k = 0;
            while (rem[i] % p == 0) rem[i] /= p, ++k;
            visit(i, p, k);
        }
    }
    for (size_t i = 0; i < len; ++i)
        if (rem[i] > 1) visit(i, rem[i], 1);
}

inline std::vector<u64> factoring_base(u64 hi) {
    std::vector<u64> base;
    for_each_prime(2, isqrt(hi) + 1, [&](u64 p) { base.push_back(p); });
    return base;
}

// primality flags for a segment, given base primes up to sqrt(hi)
inline std::vector<bool> prime_segment(u64 lo, u64 hi, const std::vector<u64>& base) {
    std::vector<bool> seg(size_t(hi - lo + 1), true);
    if (lo <= 1)
        for (u64 i = lo; i <= std::min<u64>(1, hi); ++i) seg[size_t(i - lo)] = false;
    for (u64 p : base) {
        if (p * p > hi) break;
        u64 first = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 j = first; j <= hi; j += p) seg[size_t(j - lo)] = false;
    }
    return seg;
}

// order of v mod p by descending through the prime factors of p-1
inline u64 prime_order(u64 v, u64 p) {
    if (p == 2) return 1;
    u64 t = p - 1;
    auto f = factorize(p - 1);
    for (auto& [q, e] : f.factors)
        while (t % q == 0 && powmod(v, t / q, p) == 1) t /= q;
    return t;
}

// order of u mod p^k, lifted level by level from the order mod p
struct PrimePowerOrders {
    i64 u = 2;
    std::unordered_map<u64, u64> cache;  // keyed by p^k

    u64 order(u64 p, int k, u64 base_order) {
        u64 pk = p;
        for (int i = 1; i < k; ++i) pk *= p;
        auto it = cache.find(pk);
        if (it != cache.end()) return it->second;
        u64 t = base_order;
        u64 pj = p;
        for (int j = 2; j <= k; ++j) {
            pj *= p;
            u64 v = u64(((u % i64(pj)) + i64(pj))) % pj;
            if (powmod(v, t, pj) != 1) t *= p;
        }
        cache.emplace(pk, t);
        return t;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Wieferich search: primes with u^{p-1} = 1 (mod p^2)
// ---------------------------------------------------------------------------

inline WieferichSet wieferich_search(i64 u, u64 x, unsigned threads = 0) {
    if (u > -2 && u < 2) throw std::invalid_argument("wieferich_search: |u| must be >= 2");
    WieferichSet w;
    w.base = u;
    w.cutoff = x;
    if (x < 2) return w;
    auto base = detail::factoring_base(x);
    u64 au = u64(u < 0 ? -u : u);
    auto blocks = parallel_block_map<std::vector<u64>>(
        2, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
            std::vector<u64> found;
            auto seg = detail::prime_segment(lo, hi, base);
            for (u64 p = lo; p <= hi; ++p) {
                if (!seg[size_t(p - lo)] || au % p == 0) continue;
                u64 p2 = p * p;
                u64 v = u64(((u % i64(p2)) + i64(p2))) % p2;
                if (powmod(v, p - 1, p2) == 1) found.push_back(p);
            }
            return found;
        });
    for (auto& b : blocks) w.primes.insert(w.primes.end(), b.begin(), b.end());
    return w;
}

// ---------------------------------------------------------------------------
// primes with a fixed primitive root
// ---------------------------------------------------------------------------

struct ResidueFilter {
    u64 q = 0;  // 0 means no filter
    u64 a = 0;
};

// counts primes p <= x with ord(num/den mod p) = p - 1
inline DensityReport fixed_proot_prime_count_rational(i64 num, i64 den, u64 x,
                                                      unsigned threads = 0,
                                                      ResidueFilter filter = {}) {
    if (num == 0 || den == 0) throw std::invalid_argument("fixed_proot_prime_count: zero value");
    if (den == 1) {
        if (num == 1 || num == -1)
            throw std::invalid_argument("fixed_proot_prime_count: +-1 is never a primitive root");
        if (num > 1 && isqrt(u64(num)) * isqrt(u64(num)) == u64(num))
            throw std::invalid_argument("fixed_proot_prime_count: perfect squares are never primitive roots");
    }
    auto base = detail::factoring_base(x);
    u64 anum = u64(num < 0 ? -num : num), aden = u64(den < 0 ? -den : den);
    auto blocks = parallel_block_map<u64>(2, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        u64 count = 0;
        auto seg = detail::prime_segment(lo, hi, base);
        for (u64 p = lo; p <= hi; ++p) {
            if (!seg[size_t(p - lo)]) continue;
            if (anum % p == 0 || aden % p == 0) continue;
            if (filter.q && p % filter.q != filter.a % filter.q) continue;
            u64 v = u64(((num % i64(p)) + i64(p))) % p;
            if (aden > 1) v = mulmod(v, invmod(aden % p, p), p);
            if (p == 2) { count += (v == 1); continue; }
            bool prim = true;
            auto f = factorize(p - 1);
            for (auto& [q, e] : f.factors)
                if (powmod(v, (p - 1) / q, p) == 1) { prim = false; break; }
            count += prim;
        }
        return count;
    });
    DensityReport r;
    r.x = double(x);
    for (u64 c : blocks) r.count += c;
    double dens = (den == 1 && aden == 1) ? hooley_density(num).value
                                          : detail::artin_reference().value;
    r.constant = dens;
    r.predicted = dens * log_integral(double(x));
    if (filter.q) r.predicted /= double(euler_phi(filter.q));
    r.ratio = r.count / r.predicted;
    return r;
}

inline DensityReport fixed_proot_prime_count(i64 u, u64 x, unsigned threads = 0,
                                             ResidueFilter filter = {}) {
    return fixed_proot_prime_count_rational(u, 1, x, threads, filter);
}

// ---------------------------------------------------------------------------
// integers with a fixed primitive root: ord(u mod n) = lambda(n)
// ---------------------------------------------------------------------------

namespace detail {

// order of u mod p for every prime p <= x with p coprime to u, as a flat table
inline std::vector<u32> prime_order_table(i64 u, u64 x, unsigned threads) {
    std::vector<u32> ord(size_t(x + 1), 0);
    auto base = factoring_base(x);
    u64 au = u64(u < 0 ? -u : u);
    parallel_block_map<int>(2, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        auto seg = prime_segment(lo, hi, base);
        for (u64 p = lo; p <= hi; ++p) {
            if (!seg[size_t(p - lo)] || au % p == 0) continue;
            u64 v = u64(((u % i64(p)) + i64(p))) % p;
            if (v == 0) continue;
            ord[size_t(p)] = u32(prime_order(v, p));
        }
        return 0;
    });
    return ord;
}

}  // namespace detail

// counts 3 <= n <= x, gcd(u,n) = 1, with ord(u mod n) = lambda(n);
// n = 1, 2 are excluded (every unit is trivially primitive there)
inline DensityReport fixed_proot_integer_count(i64 u, u64 x, unsigned threads = 0) {
    if (u == 0 || u == 1 || u == -1)
        throw std::invalid_argument("fixed_proot_integer_count: 0 and +-1 are never primitive roots");
    if (u > 1 && isqrt(u64(u)) * isqrt(u64(u)) == u64(u))
        throw std::invalid_argument("fixed_proot_integer_count: perfect squares are never primitive roots");
    DensityReport r;
    r.x = double(x);
    if (x >= 3) {
        auto ordp = detail::prime_order_table(u, x, threads);
        auto base = detail::factoring_base(x);
        u64 au = u64(u < 0 ? -u : u);
        auto blocks = parallel_block_map<u64>(3, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
            size_t len = size_t(hi - lo + 1);
            std::vector<u64> lam(len, 1), ord(len, 1);
            std::vector<char> ok(len, 1);
            detail::PrimePowerOrders lifts{u, {}};
            detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int k) {
                if (!ok[i]) return;
                if (au % p == 0) { ok[i] = 0; return; }
                lam[i] = lcm_u64(lam[i], lambda_prime_power(p, k));
                u64 o;
                if (p == 2) {
                    u64 pk = u64(1) << k;
                    u64 v = u64(((u % i64(pk)) + i64(pk))) % pk;
                    o = lambda_prime_power(2, k);
                    while (o > 1 && powmod(v, o / 2, pk) == 1) o /= 2;
                } else {
                    o = (k == 1) ? ordp[size_t(p)] : lifts.order(p, k, ordp[size_t(p)]);
                }
                ord[i] = lcm_u64(ord[i], o);
            });
            u64 count = 0;
            for (size_t i = 0; i < len; ++i)
                if (ok[i] && ord[i] == lam[i]) ++count;
            return count;
        });
        for (u64 c : blocks) r.count += c;
    }
    auto cst = integer_count_constant(u);
    double alpha = hooley_density(u).value;
    r.constant = cst.value;
    r.predicted = cst.value * double(x) / std::pow(std::log(double(x)), 1.0 - alpha);
    r.ratio = r.count / r.predicted;
    return r;
}

// ---------------------------------------------------------------------------
// integers whose every prime-power factor keeps r an m-th power nonresidue
// ---------------------------------------------------------------------------

inline DensityReport nonresidue_integer_count(i64 r, int m, u64 x, unsigned threads = 0) {
    if (r == 1 || r == -1) throw std::invalid_argument("nonresidue_integer_count: excluded base");
    if (m != 2 && m != 3 && m != 4) throw std::invalid_argument("nonresidue_integer_count: m must be 2,3,4");
    {  // reject perfect m-th powers
        bool power = false;
        if (r > 0 || m % 2 == 1) {
            double est = std::pow(std::fabs(double(r)), 1.0 / m);
            for (i64 c = i64(est) - 1; c <= i64(est) + 1 && !power; ++c) {
                if (c < 2) continue;
                __int128 v = 1;
                for (int i = 0; i < m; ++i) v *= c;
                power = (r > 0 && v == r) || (r < 0 && -v == r);
            }
        }
        if (power) throw std::invalid_argument("nonresidue_integer_count: base is a perfect m-th power");
    }
    DensityReport rep;
    rep.x = double(x);
    u64 ar = u64(r < 0 ? -r : r);
    auto base = detail::factoring_base(x);
    // nonresidue flags for k = 1 over all odd primes <= x
    std::vector<char> flag(size_t(x + 1), 0);
    parallel_block_map<int>(3, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        auto seg = detail::prime_segment(lo, hi, base);
        for (u64 p = lo; p <= hi; ++p) {
            if (!seg[size_t(p - lo)] || p == 2 || ar % p == 0) continue;
            flag[size_t(p)] = power_nonresidue_indicator(r, p, 1, m) ? 1 : 0;
        }
        return 0;
    });
    u64 start = 1;
    auto blocks = parallel_block_map<u64>(start, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        size_t len = size_t(hi - lo + 1);
        std::vector<char> ok(len, 1);
        std::unordered_map<u64, char> cache;  // p^k -> indicator for k >= 2
        detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int k) {
            if (!ok[i]) return;
            if (p == 2 || ar % p == 0) { ok[i] = 0; return; }
            if (k == 1) { ok[i] = flag[size_t(p)]; return; }
            u64 pk = p;
            for (int j = 1; j < k; ++j) pk *= p;
            auto it = cache.find(pk);
            char good;
            if (it != cache.end()) good = it->second;
            else {
                good = power_nonresidue_indicator(r, p, k, m) ? 1 : 0;
                cache.emplace(pk, good);
            }
            ok[i] = good;
        });
        u64 count = 0;
        for (size_t i = 0; i < len; ++i)
            if (ok[i]) ++count;
        return count;
    });
    for (u64 c : blocks) rep.count += c;  // n = 1 qualifies vacuously and is counted
    double phi_ratio = double(euler_phi(ar)) / double(ar);
    if (m == 2) {
        rep.constant = phi_ratio / std::sqrt(M_PI);
        rep.predicted = rep.constant * double(x) / std::sqrt(std::log(double(x)));
        rep.ratio = rep.count / rep.predicted;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// squarefree totients
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<bool> squarefree_flags(u64 x) {
    std::vector<bool> sf(size_t(x + 1), true);
    sf[0] = false;
    for (u64 d = 2; d * d <= x; ++d)
        for (u64 j = d * d; j <= x; j += d * d) sf[size_t(j)] = false;
    return sf;
}

}  // namespace detail

inline DensityReport squarefree_totient_prime_count(u64 x) {
    auto sf = detail::squarefree_flags(x);
    u64 count = 0;
    for_each_prime(2, x, [&](u64 p) { count += sf[size_t(p - 1)]; });
    DensityReport r;
    r.x = double(x);
    r.count = count;
    r.constant = detail::artin_reference().value;
    r.predicted = r.constant * log_integral(double(std::max<u64>(x, 3)));
    r.ratio = r.predicted > 0 ? r.count / r.predicted : 0.0;
    return r;
}

inline u64 squarefree_totient_summatory(u64 x, unsigned threads = 0) {
    auto sf = detail::squarefree_flags(x);
    auto base = detail::factoring_base(x);
    auto blocks = parallel_block_map<u64>(1, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        size_t len = size_t(hi - lo + 1);
        std::vector<u64> phi(len);
        for (size_t i = 0; i < len; ++i) phi[i] = lo + u64(i);
        detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int) { phi[i] -= phi[i] / p; });
        u64 count = 0;
        for (size_t i = 0; i < len; ++i)
            if (sf[size_t(phi[i])]) ++count;
        return count;
    });
    u64 total = 0;
    for (u64 c : blocks) total += c;
    return total;
}

// ---------------------------------------------------------------------------
// image counts of phi and lambda, and the phi = lambda set
// ---------------------------------------------------------------------------

struct ImageCounts {
    u64 totient_values = 0;    // V(x)
    u64 lambda_values = 0;     // U(x)
    u64 phi_equals_lambda = 0; // R(x)
};

inline ImageCounts image_counts(u64 x, unsigned threads = 0) {
    ImageCounts out;
    if (x == 0) return out;
    // V: every n with phi(n) <= x satisfies n <= B by the explicit
    // n/phi(n) < e^gamma loglog n + 2.5/loglog n bound (safety factor applied)
    double ll = std::log(std::log(double(16 * x + 100)));
    u64 B = u64(1.1 * double(x) * (std::exp(kEulerGamma) * ll + 2.5 / ll)) + 64;
    {
        std::vector<bool> seen(size_t(x + 1), false);
        auto base = detail::factoring_base(B);
        for (u64 lo = 1; lo <= B; lo += kCountingBlock) {
            u64 hi = std::min(B, lo + kCountingBlock - 1);
            size_t len = size_t(hi - lo + 1);
            std::vector<u64> phi(len);
            for (size_t i = 0; i < len; ++i) phi[i] = lo + u64(i);
            detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int) { phi[i] -= phi[i] / p; });
            for (size_t i = 0; i < len; ++i)
                if (phi[i] <= x) seen[size_t(phi[i])] = true;
        }
        for (u64 v = 1; v <= x; ++v)
            if (seen[size_t(v)]) ++out.totient_values;
    }
    // U: a value m is attained by lambda iff the lcm of all prime-power
    // exponents lambda(q) dividing m recovers m itself
    {
        std::vector<bool> atom(size_t(x + 1), false);
        for (u64 v = 1; v <= x; v <<= 1) {  // lambda over the 2-power moduli
            atom[size_t(v)] = true;
            if (v > x / 2) break;
        }
        for_each_prime(3, x + 1, [&](u64 p) {
            u64 v = p - 1;
            while (v <= x) {
                atom[size_t(v)] = true;
                if (v > x / p) break;
                v *= p;
            }
        });
        std::vector<u32> best(size_t(x + 1), 1);
        for (u64 a = 2; a <= x; ++a) {
            if (!atom[size_t(a)]) continue;
            for (u64 m = a; m <= x; m += a) best[size_t(m)] = u32(lcm_u64(best[size_t(m)], a));
        }
        for (u64 m = 1; m <= x; ++m)
            if (best[size_t(m)] == m) ++out.lambda_values;
    }
    // R: direct comparison of phi and lambda over [1, x]
    {
        auto base = detail::factoring_base(x);
        auto blocks = parallel_block_map<u64>(1, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
            size_t len = size_t(hi - lo + 1);
            std::vector<u64> phi(len), lam(len, 1);
            for (size_t i = 0; i < len; ++i) phi[i] = lo + u64(i);
            detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int k) {
                phi[i] -= phi[i] / p;
                lam[i] = lcm_u64(lam[i], lambda_prime_power(p, k));
            });
            u64 c = 0;
            for (size_t i = 0; i < len; ++i)
                if (phi[i] == lam[i]) ++c;
            return c;
        });
        for (u64 c : blocks) out.phi_equals_lambda += c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// least primitive root densities
// ---------------------------------------------------------------------------

inline DensityReport least_proot_density(u64 m, u64 x, unsigned threads = 0) {
    if (m < 2) throw std::invalid_argument("least_proot_density: m must be >= 2");
    auto base = detail::factoring_base(x);
    struct Tally { u64 hits = 0; u64 primes = 0; };
    auto blocks = parallel_block_map<Tally>(3, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        Tally t;
        auto seg = detail::prime_segment(lo, hi, base);
        for (u64 p = lo; p <= hi; ++p) {
            if (!seg[size_t(p - lo)]) continue;
            ++t.primes;
            auto f = factorize(p - 1);
            auto qs = prime_divisors(f);
            u64 g = 2;
            for (;; ++g) {
                bool prim = true;
                for (u64 q : qs)
                    if (powmod(g % p, (p - 1) / q, p) == 1) { prim = false; break; }
                if (prim) break;
            }
            if (g == m) ++t.hits;
        }
        return t;
    });
    DensityReport r;
    r.x = double(x);
    u64 primes = (x >= 2) ? 1 : 0;  // p = 2 has g(2) = 1 by convention, never m
    for (auto& t : blocks) { r.count += t.hits; primes += t.primes; }
    r.constant = least_root_density_constant(m);
    r.predicted = double(primes);
    r.ratio = primes ? double(r.count) / double(primes) : 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// summatory statistics
// ---------------------------------------------------------------------------

enum class TotientSummatoryKind { phi, phi_over_n, reciprocal_phi, n_over_phi };

inline double totient_summatory(u64 x, TotientSummatoryKind kind, unsigned threads = 0) {
    auto base = detail::factoring_base(x);
    auto blocks = parallel_block_map<double>(1, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        size_t len = size_t(hi - lo + 1);
        std::vector<u64> phi(len);
        for (size_t i = 0; i < len; ++i) phi[i] = lo + u64(i);
        detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int) { phi[i] -= phi[i] / p; });
        KahanSum s;
        for (size_t i = 0; i < len; ++i) {
            u64 n = lo + u64(i);
            switch (kind) {
                case TotientSummatoryKind::phi: s.add(double(phi[i])); break;
                case TotientSummatoryKind::phi_over_n: s.add(double(phi[i]) / double(n)); break;
                case TotientSummatoryKind::reciprocal_phi: s.add(1.0 / double(phi[i])); break;
                case TotientSummatoryKind::n_over_phi: s.add(double(n) / double(phi[i])); break;
            }
        }
        return s.value();
    });
    KahanSum total;
    for (double v : blocks) total.add(v);
    return total.value();
}

inline u64 totient_summatory_exact(u64 x, unsigned threads = 0) {
    auto base = detail::factoring_base(x);
    auto blocks = parallel_block_map<u64>(1, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        size_t len = size_t(hi - lo + 1);
        std::vector<u64> phi(len);
        for (size_t i = 0; i < len; ++i) phi[i] = lo + u64(i);
        detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int) { phi[i] -= phi[i] / p; });
        u64 s = 0;
        for (size_t i = 0; i < len; ++i) s += phi[i];
        return s;
    });
    u64 s = 0;
    for (u64 v : blocks) s += v;
    return s;
}

inline u64 lambda_summatory(u64 x, unsigned threads = 0) {
    auto base = detail::factoring_base(x);
    auto blocks = parallel_block_map<u64>(1, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        size_t len = size_t(hi - lo + 1);
        std::vector<u64> lam(len, 1);
        detail::factor_segment(lo, hi, base, [&](size_t i, u64 p, int k) {
            lam[i] = lcm_u64(lam[i], lambda_prime_power(p, k));
        });
        u64 s = 0;
        for (size_t i = 0; i < len; ++i) s += lam[i];
        return s;
    });
    u64 s = 0;
    for (u64 v : blocks) s += v;
    return s;
}

// k-th moment of phi(p-1)/(p-1) over primes; weighted replaces one ratio
// factor with phi(p-1) itself
inline double phi_ratio_moment(u64 x, int k, bool weighted, unsigned threads = 0) {
    if (k < 1) throw std::invalid_argument("phi_ratio_moment: k must be >= 1");
    auto base = detail::factoring_base(x);
    auto blocks = parallel_block_map<double>(2, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        // phi over [lo-1, hi], primality over [lo, hi]
        u64 flo = lo - 1;
        size_t len = size_t(hi - flo + 1);
        std::vector<u64> phi(len);
        for (size_t i = 0; i < len; ++i) phi[i] = flo + u64(i);
        detail::factor_segment(flo, hi, base, [&](size_t i, u64 p, int) { phi[i] -= phi[i] / p; });
        auto seg = detail::prime_segment(lo, hi, base);
        KahanSum s;
        for (u64 p = lo; p <= hi; ++p) {
            if (!seg[size_t(p - lo)]) continue;
            double ratio = double(phi[size_t(p - 1 - flo)]) / double(p - 1);
            double term = weighted ? double(phi[size_t(p - 1 - flo)]) : ratio;
            for (int i = 1; i < k; ++i) term *= ratio;
            s.add(term);
        }
        return s.value();
    });
    KahanSum total;
    for (double v : blocks) total.add(v);
    return total.value();
}

inline u64 omega_summatory(u64 x, bool with_multiplicity, unsigned threads = 0) {
    auto base = detail::factoring_base(x);
    auto blocks = parallel_block_map<u64>(1, x, kCountingBlock, threads, [&](u64 lo, u64 hi) {
        u64 s = 0;
        detail::factor_segment(lo, hi, base, [&](size_t, u64, int k) {
            s += with_multiplicity ? u64(k) : 1;
        });
        return s;
    });
    u64 s = 0;
    for (u64 v : blocks) s += v;
    return s;
}

// ---------------------------------------------------------------------------
// totient ratio approximation chain
// ---------------------------------------------------------------------------

struct TotientRatioStep {
    u64 prime = 2;
    boost::multiprecision::cpp_int num;
    boost::multiprecision::cpp_int den;
    double value = 0.0;
};

// greedy chain of primes whose product keeps phi(n)/n just above the target;
// the admissibility test quantizes the running ratio down to 5 decimal places,
// which pins a canonical chain independent of the float environment
inline std::vector<TotientRatioStep> totient_ratio_approx(double target, int steps) {
    using boost::multiprecision::cpp_int;
    if (!(target > 0.0 && target < 1.0))
        throw std::invalid_argument("totient_ratio_approx: target must lie in (0,1)");
    if (steps < 1 || steps > 20) throw std::invalid_argument("totient_ratio_approx: steps must be 1..20");
    std::vector<TotientRatioStep> out;
    cpp_int num = 1, den = 1;
    std::vector<u64> used;
    for (int s = 0; s < steps; ++s) {
        double r = num.convert_to<double>() / den.convert_to<double>();
        double rq = std::floor(r * 100000.0) / 100000.0;
        if (rq <= target) rq = r;  // inside the quantum of the target, use the exact ratio
        if (rq <= target) throw std::runtime_error("totient_ratio_approx: target reached exactly");
        double threshold = rq / (rq - target);
        if (threshold > 9e18) throw std::runtime_error("totient_ratio_approx: prime search out of range");
        u64 q = threshold > 4.0 ? u64(threshold) - 2 : 2;
        for (;; ++q) {
            if (rq * (1.0 - 1.0 / double(q)) < target) continue;
            if (!is_prime(q)) continue;
            if (std::find(used.begin(), used.end(), q) != used.end()) continue;
            break;
        }
        used.push_back(q);
        num *= (q - 1);
        den *= q;
        cpp_int g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
        TotientRatioStep step;
        step.prime = q;
        step.num = num;
        step.den = den;
        step.value = num.convert_to<double>() / den.convert_to<double>();
        out.push_back(step);
    }
    return out;
}

}  // namespace artin
