#include "tss/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tss/errors.hpp"

namespace tss {

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    bool header_seen = false;
    int declared_clauses = 0;
    std::vector<int> current;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw input_error("DIMACS line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                fail("malformed header");
            if (f.num_vars < 0 || declared_clauses < 0) fail("negative counts in header");
            header_seen = true;
            continue;
        }
        if (!header_seen) fail("clause before header");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            char* end = nullptr;
            long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') fail("bad literal '" + tok + "'");
            if (lit == 0) {
                if (current.empty()) fail("empty clause");
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > f.num_vars) fail("literal out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header_seen) throw input_error("DIMACS: missing header");
    if (!current.empty()) f.clauses.push_back(current); // tolerate missing final 0

    for (const auto& cl : f.clauses) {
        auto sorted = cl;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("DIMACS: duplicate literal inside a clause");
    }
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses) {
        for (int lit : cl) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

ValidationReport validate_restricted_3sat(const CnfFormula& f) {
    ValidationReport rep;
    std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (int j = 0; j < f.num_clauses(); ++j) {
        const auto& cl = f.clauses[j];
        if (cl.empty() || cl.size() > 3) {
            rep.ok = false;
            rep.violations.push_back("clause " + std::to_string(j) + " has size " +
                                     std::to_string(cl.size()));
        }
        for (int lit : cl) (lit > 0 ? pos : neg)[std::abs(lit)]++;
    }
    for (int x = 1; x <= f.num_vars; ++x) {
        if (pos[x] != 2 || neg[x] != 1) {
            rep.ok = false;
            rep.violations.push_back("variable " + std::to_string(x) + " occurs " +
                                     std::to_string(pos[x]) + "+ / " + std::to_string(neg[x]) +
                                     "- (want 2+ / 1-)");
        }
    }
    return rep;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw input_error("assignment must cover all variables");
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int lit : cl) {
            int val = a[std::abs(lit) - 1];
            if ((lit > 0 && val) || (lit < 0 && !val)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool satisfiable_naive(const CnfFormula& f, Assignment* witness) {
    const int n = f.num_vars;
    Assignment a(n, 0);
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        for (int i = 0; i < n; ++i) a[i] = static_cast<int>(mask >> i & 1);
        if (satisfies(f, a)) {
            if (witness) *witness = a;
            return true;
        }
    }
    return false;
}

} // namespace tss
