// Acceptance gate: runs every suite at full scale and prints one line per
// criterion. Nonzero exit on any failure.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "vcr/suites.hpp"

int main(int argc, char** argv) {
    vcr::suite::SuiteOptions opt;
    std::string only;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--seed") == 0)
            opt.seed = std::strtoull(argv[i + 1], nullptr, 10);
        else if (std::strcmp(argv[i], "--scale") == 0)
            opt.scale = std::strtod(argv[i + 1], nullptr);
        else if (std::strcmp(argv[i], "--budget") == 0)
            opt.budget = std::strtoull(argv[i + 1], nullptr, 10);
        else if (std::strcmp(argv[i], "--only") == 0)
            only = argv[i + 1];
        else {
            std::cerr << "usage: vcr_acceptance [--seed N] [--scale X] [--budget N] [--only NAME]\n";
            return 2;
        }
    }
    if (!only.empty()) {
        vcr::suite::SuiteResult r = vcr::suite::run_suite(only, opt);
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " ("
                  << r.seconds << "s)\n";
        return r.pass ? 0 : 1;
    }
    return vcr::suite::run_all(opt, std::cout) ? 0 : 1;
}
