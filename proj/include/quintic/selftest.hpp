#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <random>

#include "quintic/crosscheck.hpp"
#include "quintic/invariants.hpp"
#include "quintic/oracle.hpp"
#include "quintic/polynomial.hpp"

namespace quintic {

// Seeded random-corpus property run shared by `quintic selftest` and the
// acceptance suite: keystone coefficient equality, discriminant cross-check,
// delta distinctness, root residuals, and exact shift/scale invariance.
struct SelftestOptions {
    std::uint64_t seed = 20210315;
    int count = 100;
    double tol = 1e-6;
    long long max_den = 1000000;
    int coeff_range = 20;
    int shift_scale_cases = 10;
};

struct SelftestResult {
    int corpus = 0;
    double max_keystone_dev = 0.0;
    double max_disc_dev = 0.0;
    double min_delta_gap = std::numeric_limits<double>::infinity();
    double max_residual_ratio = 0.0;
    int shift_scale_checked = 0;
    bool shift_scale_ok = true;
    int crosscheck_checked = 0;
    bool crosscheck_ok = true;

    bool keystone_ok(double tol) const { return max_keystone_dev <= tol; }
    bool disc_ok() const { return max_disc_dev <= 1e-8; }
    bool gaps_ok() const { return min_delta_gap > 1e-6; }
    bool residuals_ok() const { return max_residual_ratio <= 1e-10; }
    bool all_ok(double tol) const {
        return keystone_ok(tol) && disc_ok() && gaps_ok() && residuals_ok() &&
               shift_scale_ok && crosscheck_ok;
    }
};

inline UniPoly random_monic_quintic(std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    while (true) {
        std::vector<Rational> c(6);
        c[5] = 1;
        for (int i = 0; i < 5; ++i) c[i] = dist(rng);
        UniPoly p(std::move(c));
        if (discriminant(p) != 0) return p;
    }
}

inline SelftestResult run_selftest(const SelftestOptions& opt) {
    SelftestResult res;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> small(-9, 9);
    std::uniform_int_distribution<int> denom(1, 9);

    for (int n = 0; n < opt.count; ++n) {
        UniPoly p = random_monic_quintic(rng, opt.coeff_range);
        ResolventSextic exact = resolvent_sextic(p);
        RootQuintet roots = find_roots(p);

        double maxc = 0.0;
        for (const auto& c : p.coeffs()) maxc = std::max(maxc, std::abs(to_double(c)));
        res.max_residual_ratio =
            std::max(res.max_residual_ratio, roots.residual / (1.0 + maxc));

        DeltaVector dv = delta_values(roots);
        auto nd = numeric_resolvent(roots);
        for (int r = 0; r < 6; ++r) {
            double de = to_double(exact.d[r]);
            res.max_keystone_dev = std::max(
                res.max_keystone_dev, std::abs(nd[r] - de) / (1.0 + std::abs(de)));
        }

        double scale = 0.0;
        for (auto z : dv.delta) scale = std::max(scale, std::abs(z));
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                res.min_delta_gap = std::min(
                    res.min_delta_gap, std::abs(dv.delta[i] - dv.delta[j]) / scale);

        ComplexVal ndisc = 1.0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                ComplexVal diff = roots.roots[i] - roots.roots[j];
                ndisc *= diff * diff;
            }
        double de = to_double(discriminant(p));
        res.max_disc_dev = std::max(res.max_disc_dev,
                                    std::abs(ndisc - ComplexVal(de)) / (1.0 + std::abs(de)));

        if (n < opt.shift_scale_cases) {
            Rational t(small(rng), denom(rng));
            Rational lam(0);
            while (lam == 0) lam = Rational(small(rng), denom(rng));
            ResolventSextic shifted = resolvent_sextic(shift(p, t));
            ResolventSextic scaled = resolvent_sextic(lam * p);
            bool ok = shifted.d == exact.d && scaled.d == exact.d;
            res.shift_scale_ok = res.shift_scale_ok && ok;
            ++res.shift_scale_checked;
        }
        if (n < opt.shift_scale_cases) {
            auto cc = run_oracle_crosscheck(p, exact, rational_roots(exact.poly),
                                            opt.tol, opt.max_den);
            res.crosscheck_ok = res.crosscheck_ok && cc.agrees;
            ++res.crosscheck_checked;
        }
        ++res.corpus;
    }
    return res;
}

inline int print_selftest(std::ostream& os, const SelftestResult& r, double tol) {
    auto line = [&](const char* name, bool ok, double value) {
        os << (ok ? "PASS" : "FAIL") << "  " << name << " (" << value << ")\n";
        return ok ? 0 : 1;
    };
    int fails = 0;
    fails += line("keystone exact-vs-numeric resolvent coefficients", r.keystone_ok(tol),
                  r.max_keystone_dev);
    fails += line("discriminant exact-vs-numeric", r.disc_ok(), r.max_disc_dev);
    fails += line("delta pairwise distinctness", r.gaps_ok(), r.min_delta_gap);
    fails += line("root-finder residuals", r.residuals_ok(), r.max_residual_ratio);
    fails += line("shift/scale invariance of the resolvent", r.shift_scale_ok,
                  static_cast<double>(r.shift_scale_checked));
    fails += line("rational-root cross-check", r.crosscheck_ok,
                  static_cast<double>(r.crosscheck_checked));
    os << "corpus size: " << r.corpus << "\n";
    return fails;
}

} // namespace quintic
