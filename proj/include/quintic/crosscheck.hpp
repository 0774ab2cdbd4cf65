#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "quintic/classifier.hpp"
#include "quintic/oracle.hpp"

namespace quintic {

// One exact-vs-numeric comparison of the full pipeline for a single quintic.
struct OracleCrossCheck {
    RootQuintet roots;
    DeltaVector delta;
    std::array<double, 6> numeric_d{};
    double max_rel_coeff_deviation = 0.0;
    std::vector<DeltaRationalCandidate> candidates; // CF proximity proposals
    int verified_candidates = 0;                    // proposals that are exact roots of g
    int unverified_candidates = 0;                  // proximity-only proposals
    bool agrees = true;                             // every exact rational root is found numerically
};

// The numeric side recomputes the resolvent from the roots and proposes
// rational delta values by continued-fraction rounding; proposals are then
// verified against the exact sextic. Disagreement means the numeric pipeline
// missed an exact rational root or the coefficients drifted beyond tol.
inline OracleCrossCheck run_oracle_crosscheck(const UniPoly& p,
                                              const ResolventSextic& exact,
                                              const std::vector<Rational>& exact_roots,
                                              double tol = 1e-6,
                                              long long max_den = 1000000,
                                              double root_tol = 1e-12) {
    OracleCrossCheck cc;
    cc.roots = find_roots(p, root_tol);
    cc.delta = delta_values(cc.roots);
    cc.numeric_d = numeric_resolvent(cc.roots);
    for (int r = 0; r < 6; ++r) {
        const double de = to_double(exact.d[r]);
        const double dev = std::abs(cc.numeric_d[r] - de) / (1.0 + std::abs(de));
        cc.max_rel_coeff_deviation = std::max(cc.max_rel_coeff_deviation, dev);
    }
    cc.candidates = rational_delta_candidates(cc.delta, tol, max_den);
    for (const auto& cand : cc.candidates) {
        if (eval(exact.poly, cand.value) == 0)
            ++cc.verified_candidates;
        else
            ++cc.unverified_candidates;
    }
    for (const Rational& r : exact_roots) {
        bool found = false;
        for (const auto& cand : cc.candidates)
            if (cand.value == r) { found = true; break; }
        if (!found) cc.agrees = false;
    }
    if (cc.max_rel_coeff_deviation > tol) cc.agrees = false;
    return cc;
}

inline OracleCrossCheck run_oracle_crosscheck(const UniPoly& p, const GaloisVerdict& v,
                                              double tol = 1e-6, long long max_den = 1000000) {
    return run_oracle_crosscheck(p, v.evidence.resolvent,
                                 v.evidence.resolvent_rational_roots, tol, max_den);
}

} // namespace quintic
