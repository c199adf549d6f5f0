// Runs every acceptance check with the default fixed seed and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <cstring>
#include <iostream>

#include "fm/acceptance.hpp"

int main(int argc, char** argv) {
    fm::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-rmt") == 0) opts.run_rmt = false;
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) opts.only = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
    }
    auto results = fm::run_acceptance(opts, std::cout);
    return fm::report(results, std::cout) ? 0 : 1;
}
