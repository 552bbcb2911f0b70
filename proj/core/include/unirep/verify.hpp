#pragma once

#include <string>
#include <vector>

#include "unirep/tables.hpp"
#include "unirep/uniserial.hpp"

namespace unirep {

struct VerifyOptions {
    int n_min = 1, n_max = 3; // heisenberg range, m = 2n-1
    int max_weight = 3;       // bound on constructor weight parameters
    int max_length = 2;       // bound on the type-Z length parameter
    int jobs = 1;
};

struct VerifyPoint {
    std::string theorem;
    std::string subject;
    bool pass = true;
    std::string detail; // per-degree expected/computed mismatches
};

struct TheoremSummary {
    std::string theorem;
    int points = 0;
    int failures = 0;
};

struct VerifyReport {
    std::vector<VerifyPoint> points;
    std::vector<TheoremSummary> summaries() const;
    int failures() const;
};

/// Known scopes: thm-4.1, thm-4.3, thm-4.5, thm-4.6, sec-5.
/// Enumerates every parameter point of each scoped regression within the
/// bounds, computes the socle strata (or hom dimension) with the engine and
/// compares against the expected-value tables. Failures are data.
VerifyReport verify_theorems(const std::vector<std::string>& scope, const VerifyOptions& options,
                             const TableSet& tables);

/// Mutation check of the harness itself: perturbs a copy of the tables and
/// confirms the verifier reports discrepancies. True when the planted
/// mutation was caught.
bool verify_self_test(const TableSet& tables);

} // namespace unirep
