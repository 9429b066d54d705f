#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tvw::accept {

// The acceptance suite pins every desk-scale result the library claims:
// exact partition counts on the named configurations and drawings, bound
// tables, counterexample emptiness, and cross-checks of independent
// implementations (LP vs Fourier-Motzkin, two winding algorithms,
// planarity vs minor search). Each criterion reports one pass/fail line.

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double wall_ms = 0;
};

struct Criterion {
    int id;
    const char* name;
    const char* suite; // "paper-tables" or "oracles"
    std::function<CriterionResult(int threads)> run;
};

const std::vector<Criterion>& all_criteria();

// suite: "paper-tables", "oracles", or "all". Throws std::invalid_argument
// on unknown suite names.
std::vector<CriterionResult> run_suite(const std::string& suite, int threads);

// "criterion <id> [<name>] PASS|FAIL (<time>) <detail>"
std::string format_result_line(const CriterionResult& r);

} // namespace tvw::accept
