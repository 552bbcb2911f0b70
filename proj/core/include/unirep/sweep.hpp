#pragma once

#include <string>
#include <vector>

#include "unirep/tensorsocle.hpp"

namespace unirep {

struct SweepOptions {
    std::vector<int> m_list{1, 3, 5};
    int max_weight = 8;   // bound on each of a, b, c, d
    int max_pair_sum = -1; // when >= 0, additionally bound a+b and c+d
    int jobs = 1;
};

/// One canonical pair E(a,b) (x) E(c,d), a<c or (a=c and b<=d).
struct SweepPoint {
    int m = 0, a = 0, b = 0, c = 0, d = 0;
    std::string cases;      // matching case labels ("1", "2.1", ... or "none")
    std::string s1_status;  // "theorem" or "empirical"
    std::string s2_status;
    IrrepMultiset predicted_s1;
    IrrepMultiset s1, s2;
    bool s1_ok = true, s2_ok = true;
    bool symmetric = true; // observation: S_t agrees under factor exchange
    std::string witness;   // offending kernel vectors on discrepancy
};

struct SweepReport {
    std::vector<SweepPoint> points;
    int discrepancies() const;
    int asymmetric_points() const;
};

/// Enumerates all valid length-2 pairs over abelian sl(2) x| a_m within the
/// bounds, computes S_1 and S_2 exactly, classifies each point against the
/// predicted case list, and separates theorem-backed points from purely
/// empirical ones. The swapped factor order is always recomputed as a
/// symmetry observation.
SweepReport sweep_conjecture(const SweepOptions& options);

} // namespace unirep
