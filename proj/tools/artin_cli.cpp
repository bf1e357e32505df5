// Command-line surface: every experiment streams CSV to stdout, diagnostics
// go to stderr. Exit codes: 0 success, 1 computation error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "experiments.hpp"

using artin::cli::Options;

namespace {

struct Command {
    const char* name;
    const char* help;
    std::string (*run)(const Options&);
};

const Command kCommands[] = {
    {"least-proot", "least and least prime primitive roots per prime", artin::cli::run_least_proot},
    {"artin-count", "primes with a fixed primitive root", artin::cli::run_artin_count},
    {"integer-count", "integers with a fixed primitive root", artin::cli::run_integer_count},
    {"wieferich", "primes p with base^(p-1) = 1 mod p^2", artin::cli::run_wieferich},
    {"gauss-sum", "quadratic Gauss sums, closed form vs direct", artin::cli::run_gauss_sum},
    {"charfn-check", "characteristic function triple agreement", artin::cli::run_charfn_check},
    {"constants", "named constants", artin::cli::run_constants},
    {"harmonic", "connecting constants over a prime subset", artin::cli::run_harmonic},
    {"girstmair", "alternating digit sums vs h(-p)", artin::cli::run_girstmair},
    {"hirzebruch", "alternating continued-fraction sums vs h(-p)", artin::cli::run_hirzebruch},
    {"classnum", "class numbers with cross-checks", artin::cli::run_classnum},
    {"images", "totient and lambda image counts", artin::cli::run_images},
    {"nonresidue-count", "integers supported on nonresidue primes", artin::cli::run_nonresidue_count},
    {"delta", "delta products and least-root densities", artin::cli::run_delta},
    {"fractional", "fractional part sums", artin::cli::run_fractional},
    {"lseries", "Dirichlet series partial sums over primitive residues", artin::cli::run_lseries},
    {"ratio-chain", "totient ratio approximation chain", artin::cli::run_ratio_chain},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive root experiments"};
    app.require_subcommand(1);

    Options opt;
    bool selftest = false;

    for (const auto& cmd : kCommands) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_option("--max", opt.max, "range limit");
        sub->add_option("--cutoff", opt.cutoff, "prime or series cutoff");
        sub->add_option("--terms", opt.terms, "number of series terms");
        sub->add_option("--base", opt.base, "base / element / numerator");
        sub->add_option("--den", opt.den, "denominator for rational bases");
        sub->add_option("--b", opt.b, "linear coefficient for gauss-sum");
        sub->add_option("--m", opt.m, "power-residue degree (2, 3 or 4)");
        sub->add_option("--k", opt.k, "exponent parameter");
        sub->add_option("--j", opt.j, "delta product index (1..4)");
        sub->add_option("--s", opt.s, "Dirichlet series exponent");
        sub->add_option("--target", opt.target, "ratio chain target in (0,1)");
        sub->add_option("--steps", opt.steps, "ratio chain length");
        sub->add_flag("--weighted", opt.weighted, "vonMangoldt-weighted series");
        sub->add_flag("--real", opt.real_field, "real quadratic field");
        sub->add_option("--mod", opt.q, "residue-class modulus filter");
        sub->add_option("--res", opt.res, "residue class for --mod");
        sub->add_option("--threads", opt.threads, "worker count (0 = all cores)");
        sub->add_option("--name", opt.name, "constant name");
        sub->add_option("--subset", opt.subset, "prime subset: all | proot");
        sub->add_option("--mode", opt.mode, "fractional mode: integers | primes | primes-ap");
        sub->add_flag("--selftest", selftest, "run the module oracle checks and exit");
        sub->callback([&opt, &selftest, &cmd] {
            if (selftest) {
                int fails = artin::cli::selftest(cmd.name);
                if (fails) {
                    std::cerr << cmd.name << ": selftest failed " << fails << " check(s)\n";
                    std::exit(1);
                }
                std::cerr << cmd.name << ": selftest ok\n";
                std::exit(0);
            }
            std::fputs(cmd.run(opt).c_str(), stdout);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
