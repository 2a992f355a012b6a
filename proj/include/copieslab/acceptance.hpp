#pragma once
// The project's exit gate: fifteen independently-numbered checks covering the
// finite collapse of the similarity hierarchy, the embedding calculus, the
// order toolkit against its definitional oracles, and the padding transfer.
// Each check prints one [PASS]/[FAIL] line; the suite passes iff all do.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace copieslab::acceptance {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // counts, witnesses, or the failure reason
    double runtime_ms = 0.0;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_passed = false;
};

// Runs every check in order, streaming one result line each plus a summary
// line.  `seed` drives the randomized suites; `jobs` parallelizes pair grids.
SuiteResult run_all(std::ostream& out, std::uint64_t seed, int jobs);

}  // namespace copieslab::acceptance
