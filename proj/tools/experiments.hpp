#pragma once

// CSV experiment runners shared by the command-line tool and the acceptance
// suite. Each runner returns the full CSV text (header first, '\n' endings,
// numeric fields only); identical options must yield byte-identical output
// regardless of the thread count.

#include <string>

#include "artin/arith.hpp"

namespace artin::cli {

struct Options {
    u64 max = 100;
    u64 cutoff = 500000;
    u64 terms = 1000000;
    i64 base = 2;
    i64 den = 1;
    i64 b = 0;
    int m = 2;
    int k = 1;
    int j = 0;  // delta index; 0 means all four plus the D(m) table
    double s = 2.0;
    double target = 0.70710678118654752;
    int steps = 4;
    bool weighted = false;
    bool real_field = false;
    u64 q = 0;
    u64 res = 0;
    unsigned threads = 0;
    std::string name = "artin";
    std::string subset = "all";
    std::string mode = "integers";
    std::string kind = "phi";
};

std::string fmt_real(double v);

std::string run_least_proot(const Options& o);
std::string run_artin_count(const Options& o);
std::string run_integer_count(const Options& o);
std::string run_wieferich(const Options& o);
std::string run_gauss_sum(const Options& o);
std::string run_charfn_check(const Options& o);
std::string run_constants(const Options& o);
std::string run_harmonic(const Options& o);
std::string run_girstmair(const Options& o);
std::string run_hirzebruch(const Options& o);
std::string run_classnum(const Options& o);
std::string run_images(const Options& o);
std::string run_nonresidue_count(const Options& o);
std::string run_delta(const Options& o);
std::string run_fractional(const Options& o);
std::string run_lseries(const Options& o);
std::string run_ratio_chain(const Options& o);

// small oracle comparisons behind every subcommand's --selftest flag;
// returns the number of failed checks
int selftest(const std::string& command);

}  // namespace artin::cli
