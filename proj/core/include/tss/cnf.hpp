#pragma once

#include <string>
#include <vector>

#include "tss/geometry.hpp"

namespace tss {

/// CNF formula; literals are nonzero signed 1-based variable indices, DIMACS
/// style. No empty clauses, no duplicate literal inside a clause.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// Total truth assignment; value[i] is the value of variable i+1.
using Assignment = std::vector<int>;

CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& f);

// Clause sizes <= 3 and every variable occurring exactly twice as a positive
// literal and once as a negative one. Planarity of the incidence graph is
// not checked.
ValidationReport validate_restricted_3sat(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);

// 2^n scan; the satisfiability oracle used when vetting the SAT reductions.
bool satisfiable_naive(const CnfFormula& f, Assignment* witness = nullptr);

} // namespace tss
