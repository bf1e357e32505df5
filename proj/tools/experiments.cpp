#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "artin/arith.hpp"
#include "artin/charfn.hpp"
#include "artin/classnum.hpp"
#include "artin/constants.hpp"
#include "artin/densities.hpp"
#include "artin/expsums.hpp"
#include "artin/order.hpp"
#include "artin/primes.hpp"

namespace artin::cli {

std::string fmt_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string density_row(const char* id, i64 base, const DensityReport& r) {
    std::ostringstream out;
    out << id << ',' << base << ',' << u64(r.x) << ',' << r.count << ',' << fmt_real(r.constant)
        << ',' << fmt_real(r.predicted) << ',' << fmt_real(r.ratio) << '\n';
    return out.str();
}

}  // namespace

std::string run_least_proot(const Options& o) {
    std::ostringstream out;
    out << "p,g,gstar\n";
    std::vector<std::pair<u64, u64>> rows;
    auto base = detail::factoring_base(o.max);
    auto blocks = parallel_block_map<std::string>(
        3, o.max, kCountingBlock, o.threads, [&](u64 lo, u64 hi) {
            std::ostringstream chunk;
            auto seg = detail::prime_segment(lo, hi, base);
            for (u64 p = lo; p <= hi; ++p) {
                if (!seg[size_t(p - lo)]) continue;
                chunk << p << ',' << least_primitive_root(p) << ',' << least_prime_primitive_root(p)
                      << '\n';
            }
            return chunk.str();
        });
    // g(2) = 1 by convention; the least prime unit mod 2 is 3
    if (o.max >= 2) out << "2,1,3\n";
    for (auto& b : blocks) out << b;
    return out.str();
}

std::string run_artin_count(const Options& o) {
    std::ostringstream out;
    out << "experiment,base,x,count,constant,predicted,ratio\n";
    ResidueFilter f{o.q, o.res};
    auto r = (o.den != 1) ? fixed_proot_prime_count_rational(o.base, o.den, o.max, o.threads, f)
                          : fixed_proot_prime_count(o.base, o.max, o.threads, f);
    out << density_row("artin-count", o.base, r);
    return out.str();
}

std::string run_integer_count(const Options& o) {
    std::ostringstream out;
    out << "experiment,base,x,count,constant,predicted,ratio\n";
    out << density_row("integer-count", o.base, fixed_proot_integer_count(o.base, o.max, o.threads));
    return out.str();
}

std::string run_wieferich(const Options& o) {
    std::ostringstream out;
    out << "p\n";
    auto w = wieferich_search(o.base, o.max, o.threads);
    for (u64 p : w.primes) out << p << '\n';
    return out.str();
}

std::string run_gauss_sum(const Options& o) {
    std::ostringstream out;
    if (o.q == 0) {  // single evaluation mode: --base = a, --b = b, --max = n
        out << "a,b,n,re_direct,im_direct,re_closed,im_closed,reciprocity_residual\n";
        i64 a = o.base, b = o.b, n = i64(o.max);
        auto d = gauss_sum_direct(a, b, n);
        out << a << ',' << b << ',' << n << ',' << fmt_real(d.value.real()) << ','
            << fmt_real(d.value.imag());
        if (b == 0 && n >= 1 && std::gcd(u64(a < 0 ? -a : a) % u64(n), u64(n)) == 1) {
            auto c = gauss_sum_closed(a, n);
            out << ',' << fmt_real(c.value.real()) << ',' << fmt_real(c.value.imag());
        } else {
            out << ",0,0";
        }
        out << ',' << fmt_real(schaar_reciprocity_residual(a, b, n)) << '\n';
        return out.str();
    }
    // sweep mode: worst closed-vs-direct residual per modulus n <= max
    out << "n,max_residual\n";
    for (u64 n = 1; n <= o.max; ++n) {
        double worst = 0.0;
        for (u64 a = 1; a <= n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            auto d = gauss_sum_direct(i64(a), 0, i64(n));
            auto c = gauss_sum_closed(i64(a), i64(n));
            worst = std::max(worst, std::abs(d.value - c.value));
        }
        out << n << ',' << fmt_real(worst) << '\n';
    }
    return out.str();
}

std::string run_charfn_check(const Options& o) {
    std::ostringstream out;
    out << "p,indicator_sum,phi_pminus1,max_disagreement\n";
    for_each_prime(3, o.max, [&](u64 p) {
        double worst = 0.0;
        u64 total = 0;
        for (u64 u = 1; u < p; ++u) {
            double cs = charsum_indicator(u, p).value;
            double es = expsum_indicator(u, p).value;
            double bf = brute_force_indicator(u, p).value;
            worst = std::max({worst, std::fabs(cs - es), std::fabs(cs - bf)});
            total += u64(bf + 0.5);
        }
        out << p << ',' << total << ',' << euler_phi(p - 1) << ',' << fmt_real(worst) << '\n';
    });
    return out.str();
}

std::string run_constants(const Options& o) {
    std::ostringstream out;
    out << "name,value,cutoff_or_terms,error_estimate\n";
    auto emit = [&](const ConstantEstimate& c) {
        out << c.name << ',' << fmt_real(c.value) << ',' << c.cutoff_or_terms << ','
            << fmt_real(c.error_estimate) << '\n';
    };
    if (o.name == "artin") emit(artin_product(o.cutoff));
    else if (o.name == "artin-series") emit(artin_series(o.terms));
    else if (o.name == "gamma" || o.name == "B1") emit(euler_mertens_series(o.name));
    else if (o.name == "B2" || o.name == "B3") emit(prime_power_sum(o.name, o.cutoff));
    else if (o.name == "hooley") emit(hooley_density(o.base));
    else if (o.name == "integer-count") emit(integer_count_constant(o.base, o.cutoff));
    else if (o.name == "nu1") {
        auto m = mertens_products(o.cutoff, MertensVariant::log_weighted);
        out << "nu1," << fmt_real(m.nu_partial) << ',' << o.cutoff << ",0\n";
    } else if (o.name == "mertens-inverse" || o.name == "mertens-plus" || o.name == "mertens-log") {
        MertensVariant v = o.name == "mertens-inverse" ? MertensVariant::inverse
                          : o.name == "mertens-plus"   ? MertensVariant::plus
                                                       : MertensVariant::log_weighted;
        auto m = mertens_products(o.cutoff, v);
        out << m.product.name << ',' << fmt_real(m.product.value) << ',' << o.cutoff << ','
            << fmt_real(m.predicted) << '\n';
    } else {
        throw std::invalid_argument("constants: unknown --name " + o.name);
    }
    return out.str();
}

std::string run_harmonic(const Options& o) {
    std::ostringstream out;
    out << "subset,cutoff,counted,density,beta,gamma,crosscheck\n";
    std::function<bool(u64)> pred;
    double density = 1.0;
    if (o.subset == "all") {
        pred = [](u64) { return true; };
    } else if (o.subset == "proot") {
        pred = primitive_root_subset(o.base);
        density = hooley_density(o.base).value;
    } else {
        throw std::invalid_argument("harmonic: unknown --subset " + o.subset);
    }
    auto c = connecting_constants(pred, density, o.cutoff);
    out << o.subset << ',' << o.cutoff << ',' << c.counted << ',' << fmt_real(density) << ','
        << fmt_real(c.beta.value) << ',' << fmt_real(c.gamma_c.value) << ','
        << fmt_real(c.crosscheck) << '\n';
    return out.str();
}

std::string run_girstmair(const Options& o) {
    std::ostringstream out;
    out << "p,ell,alternating_digit_sum,h_imag,identity_holds\n";
    for_each_prime(7, o.max, [&](u64 p) {
        if (p % 4 != 3) return;
        u64 ell = (o.base >= 2) ? u64(o.base) : least_primitive_root(p);
        if (o.base >= 2 && !gauss_primitive_test(ell, p)) return;
        i64 s = girstmair_sum(p, ell);
        u64 h = class_number_imag(p).h;
        out << p << ',' << ell << ',' << s << ',' << h << ','
            << (s == i64(ell + 1) * i64(h) ? 1 : 0) << '\n';
    });
    return out.str();
}

std::string run_hirzebruch(const Options& o) {
    std::ostringstream out;
    out << "p,alternating_cf_sum,h_imag,identity_holds\n";
    for_each_prime(7, o.max, [&](u64 p) {
        if (p % 4 != 3) return;
        if (class_number_real(p).h != 1) return;
        i64 s = hirzebruch_sum(p);
        u64 h = class_number_imag(p).h;
        out << p << ',' << s << ',' << h << ',' << (s == 3 * i64(h) ? 1 : 0) << '\n';
    });
    return out.str();
}

std::string run_classnum(const Options& o) {
    std::ostringstream out;
    if (!o.real_field) {
        out << "p,h_forms,minus_b1chi,l_value\n";
        for_each_prime(7, o.max, [&](u64 p) {
            if (p % 4 != 3) return;
            auto r = class_number_imag(p);
            out << p << ',' << r.h << ',' << -bernoulli_b1chi(p) << ',' << fmt_real(r.l_value)
                << '\n';
        });
        return out.str();
    }
    out << "p,h,l_value,fund_unit_a,fund_unit_b\n";
    for_each_prime(5, o.max, [&](u64 p) {
        auto r = class_number_real(p);
        out << p << ',' << r.h << ',' << fmt_real(r.l_value) << ',';
        if (r.unit) out << r.unit->first << ',' << r.unit->second << '\n';
        else out << "0,0\n";
    });
    return out.str();
}

std::string run_images(const Options& o) {
    std::ostringstream out;
    out << "x,totient_values,lambda_values,phi_equals_lambda\n";
    auto c = image_counts(o.max, o.threads);
    out << o.max << ',' << c.totient_values << ',' << c.lambda_values << ','
        << c.phi_equals_lambda << '\n';
    return out.str();
}

std::string run_nonresidue_count(const Options& o) {
    std::ostringstream out;
    out << "experiment,base,x,count,constant,predicted,ratio\n";
    auto r = nonresidue_integer_count(o.base, o.m, o.max, o.threads);
    out << "nonresidue-m" << o.m << ',' << o.base << ',' << u64(r.x) << ',' << r.count << ','
        << fmt_real(r.constant) << ',' << fmt_real(r.predicted) << ',' << fmt_real(r.ratio)
        << '\n';
    return out.str();
}

std::string run_delta(const Options& o) {
    std::ostringstream out;
    out << "name,value\n";
    if (o.j >= 1 && o.j <= 4) {
        out << "delta" << o.j << ',' << fmt_real(delta_products(o.j, o.cutoff).value) << '\n';
        return out.str();
    }
    for (int j = 1; j <= 4; ++j)
        out << "delta" << j << ',' << fmt_real(delta_products(j, o.cutoff).value) << '\n';
    for (u64 m : {2, 3, 5, 6, 7})
        out << "D(" << m << ")," << fmt_real(least_root_density_constant(m, o.cutoff)) << '\n';
    return out.str();
}

std::string run_summatory(const Options& o) {
    std::ostringstream out;
    out << "kind,x,value,main_term,ratio\n";
    double x = double(o.max);
    double lx = std::log(x), llx = std::log(lx);
    double value = 0.0, main = 0.0;
    const double c0 = (1.0 + detail::zeta_minus_one(2)) * (1.0 + detail::zeta_minus_one(3)) /
                      (1.0 + detail::zeta_minus_one(6));
    if (o.kind == "phi") {
        value = double(totient_summatory_exact(o.max, o.threads));
        main = 3.0 / (M_PI * M_PI) * x * x;
    } else if (o.kind == "phi-over-n") {
        value = totient_summatory(o.max, TotientSummatoryKind::phi_over_n, o.threads);
        main = 6.0 / (M_PI * M_PI) * x;
    } else if (o.kind == "reciprocal-phi") {
        value = totient_summatory(o.max, TotientSummatoryKind::reciprocal_phi, o.threads);
        main = c0 * lx;
    } else if (o.kind == "n-over-phi") {
        value = totient_summatory(o.max, TotientSummatoryKind::n_over_phi, o.threads);
        main = c0 * x;
    } else if (o.kind == "lambda") {
        value = double(lambda_summatory(o.max, o.threads));
        const double B = 0.34537;  // e^{-gamma} prod (1 - 1/((p-1)^2 (p+1)))
        main = x * x / lx * std::exp(B * llx / std::log(llx));
    } else if (o.kind == "omega") {
        value = double(omega_summatory(o.max, false, o.threads));
        main = x * llx + 0.26149721284764278 * x + (kEulerGamma - 1.0) * x / lx;
    } else if (o.kind == "big-omega") {
        value = double(omega_summatory(o.max, true, o.threads));
        main = x * llx + 1.03465381412171155 * x + (kEulerGamma - 1.0) * x / lx;
    } else if (o.kind == "moment") {
        value = phi_ratio_moment(o.max, o.k, o.weighted, o.threads);
        main = o.weighted ? phi_moment_constant(o.k) / 2.0 * x * x / lx
                          : phi_moment_constant(o.k) * log_integral(x);
    } else {
        throw std::invalid_argument("summatory: unknown --kind " + o.kind);
    }
    out << o.kind << ',' << o.max << ',' << fmt_real(value) << ',' << fmt_real(main) << ','
        << fmt_real(value / main) << '\n';
    return out.str();
}

std::string run_fractional(const Options& o) {
    std::ostringstream out;
    out << "mode,x,k,value,main_term,ratio\n";
    FractionalMode mode = o.mode == "integers"  ? FractionalMode::integers
                          : o.mode == "primes"  ? FractionalMode::primes
                                                : FractionalMode::primes_in_ap;
    double v = fractional_part_sum(o.max, mode, o.k, o.q, o.res);
    double main = 0.0;
    if (o.k == 1) {
        double x = double(o.max);
        if (mode == FractionalMode::integers) main = (1.0 - kEulerGamma) * x;
        else if (mode == FractionalMode::primes) main = (1.0 - kEulerGamma) * x / std::log(x);
        else main = (1.0 - kEulerGamma) / double(euler_phi(o.q)) * double(o.max) / std::log(x);
    }
    out << o.mode << ',' << o.max << ',' << o.k << ',' << fmt_real(v) << ',' << fmt_real(main)
        << ',' << fmt_real(main > 0 ? v / main : 0.0) << '\n';
    return out.str();
}

std::string run_lseries(const Options& o) {
    std::ostringstream out;
    out << "p,s,weighted,terms,value\n";
    auto v = lseries_partial(u64(o.base), o.s, o.weighted, o.terms);
    out << v.p << ',' << fmt_real(v.s) << ',' << (v.weighted ? 1 : 0) << ',' << v.terms << ','
        << fmt_real(v.value) << '\n';
    return out.str();
}

std::string run_ratio_chain(const Options& o) {
    std::ostringstream out;
    out << "step,prime,numerator,denominator,value\n";
    auto chain = totient_ratio_approx(o.target, o.steps);
    for (size_t i = 0; i < chain.size(); ++i) {
        out << (i + 1) << ',' << chain[i].prime << ',' << chain[i].num.str() << ','
            << chain[i].den.str() << ',' << fmt_real(chain[i].value) << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// per-subcommand selftests: small-range oracle comparisons
// ---------------------------------------------------------------------------

namespace {

int check(bool ok, int& fails) {
    if (!ok) ++fails;
    return fails;
}

int selftest_order_like() {
    int fails = 0;
    check(least_primitive_root(13) == 2, fails);
    check(least_primitive_root(41) == 6, fails);
    check(least_prime_primitive_root(7) == 3, fails);
    check(mult_order(2, 41) == 20, fails);
    // brute-force count of primitive roots matches phi(p-1)
    for (u64 p : {5ull, 13ull, 41ull, 101ull}) {
        u64 c = 0;
        for (u64 u = 1; u < p; ++u) c += gauss_primitive_test(u, p) ? 1 : 0;
        check(c == euler_phi(p - 1), fails);
    }
    return fails;
}

int selftest_counts() {
    int fails = 0;
    check(fixed_proot_prime_count(2, 100, 1).count == 12, fails);
    check(fixed_proot_integer_count(2, 10, 1).count == 3, fails);
    auto w = wieferich_search(2, 10000, 1);
    check(w.primes == std::vector<u64>{1093, 3511}, fails);
    return fails;
}

int selftest_gauss() {
    int fails = 0;
    for (u64 n = 2; n <= 40; ++n)
        for (u64 a = 1; a <= n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            auto d = gauss_sum_direct(i64(a), 0, i64(n));
            auto c = gauss_sum_closed(i64(a), i64(n));
            check(std::abs(d.value - c.value) < 1e-9, fails);
        }
    check(schaar_reciprocity_residual(1, 0, 3) < 1e-9, fails);
    return fails;
}

int selftest_charfn() {
    int fails = 0;
    for (u64 p : {5ull, 13ull, 31ull}) {
        for (u64 u = 1; u < p; ++u) {
            double bf = brute_force_indicator(u, p).value;
            check(std::fabs(charsum_indicator(u, p).value - bf) == 0.0, fails);
            check(std::fabs(expsum_indicator(u, p).value - bf) < 1e-9, fails);
        }
    }
    check(summatory_indicator(13, 12) == 4, fails);
    return fails;
}

int selftest_constants() {
    int fails = 0;
    check(std::fabs(euler_mertens_series("gamma").value - 0.57721566490153286) < 1e-12, fails);
    check(std::fabs(euler_mertens_series("B1").value - 0.26149721284764278) < 1e-10, fails);
    check(std::fabs(artin_product(500000).value - 0.373955866776891) < 1e-11, fails);
    return fails;
}

int selftest_classnum() {
    int fails = 0;
    check(class_number_imag(7).h == 1, fails);
    check(class_number_imag(23).h == 3, fails);
    check(class_number_imag(47).h == 5, fails);
    check(girstmair_sum(7, 10) == 11, fails);
    check(hirzebruch_sum(7) == 3, fails);
    check(bernoulli_b1chi(23) == -3, fails);
    auto cf = sqrt_continued_fraction(7);
    check(cf.a0 == 2 && cf.periodic == std::vector<u64>{1, 1, 1, 4}, fails);
    return fails;
}

int selftest_images() {
    int fails = 0;
    auto c = image_counts(10, 1);
    check(c.totient_values == 6 && c.lambda_values == 6 && c.phi_equals_lambda == 9, fails);
    check(squarefree_totient_prime_count(50).count == 8, fails);
    check(squarefree_totient_summatory(10, 1) == 7, fails);
    return fails;
}

int selftest_fractional() {
    int fails = 0;
    check(fractional_part_sum(1, FractionalMode::integers, 1) == 0.0, fails);
    check(std::fabs(fractional_part_sum(100, FractionalMode::integers, 1) - 36.737751764) < 1e-6,
          fails);
    return fails;
}

int selftest_ratio_chain() {
    int fails = 0;
    auto chain = totient_ratio_approx(0.70710678118654752, 4);
    check(chain.size() == 4, fails);
    check(chain[0].prime == 5 && chain[1].prime == 11 && chain[2].prime == 37, fails);
    check(chain[3].num == 36864 && chain[3].den == 52133, fails);
    return fails;
}

}  // namespace

int selftest(const std::string& command) {
    if (command == "least-proot") return selftest_order_like();
    if (command == "artin-count" || command == "integer-count" || command == "wieferich")
        return selftest_counts();
    if (command == "gauss-sum") return selftest_gauss();
    if (command == "charfn-check" || command == "lseries") return selftest_charfn();
    if (command == "constants" || command == "harmonic" || command == "delta")
        return selftest_constants();
    if (command == "girstmair" || command == "hirzebruch" || command == "classnum")
        return selftest_classnum();
    if (command == "images" || command == "nonresidue-count") return selftest_images();
    if (command == "fractional") return selftest_fractional();
    if (command == "ratio-chain") return selftest_ratio_chain();
    return 1;
}

}  // namespace artin::cli
