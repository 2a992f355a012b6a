// Runs the full acceptance suite and reports through the exit code, so the
// same gate works under ctest and by hand.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "copieslab/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    int jobs = 1;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--jobs" && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--seed N] [--jobs N]\n";
            return 2;
        }
    }
    const auto suite = copieslab::acceptance::run_all(std::cout, seed, jobs);
    return suite.all_passed ? 0 : 1;
}
