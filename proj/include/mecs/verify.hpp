#pragma once

#include <string>
#include <vector>

namespace mecs::verify {

struct Check {
    std::string name;
    double value;      // measured worst case (meaning depends on the check)
    double tolerance;  // pass iff value <= tolerance
    bool pass;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
};

// Closed-form pair concurrence vs Wootters on the reduced density matrix,
// lambda structure, Eq. (28) vs brute-force partial trace, pure-split oracle.
SuiteReport run_wootters();

// N-tangle numeric vs closed form, 3-tangle routes, odd-N nullity, ranges.
SuiteReport run_tangle();

// Outcome completeness, Eq. (5) denominators, end-to-end swap fidelity,
// gate G unitarity/bijectivity, stage-by-stage norms.
SuiteReport run_protocol();

// Conditional-displacement CNOT identity on the truncated Fock space.
SuiteReport run_cnot();

// The six special-state concurrence rows.
SuiteReport run_table1();

std::vector<std::string> suite_names();  // excludes "all"
std::vector<SuiteReport> run_suites(const std::string &name);  // name or "all"

}  // namespace mecs::verify
