// quintic: classify quintics over Q by solvability in radicals.
//
// Exit codes: 0 verdict, 1 parse error, 2 precondition failure (wrong degree,
// reducible, repeated roots, bad flags), 3 exact/numeric disagreement,
// 4 root iteration did not converge.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quintic/quintic.hpp"

namespace {

using namespace quintic;

void print_text_report(const Report& r) {
    std::cout << "input:          " << r.input << "\n"
              << "irreducible:    " << (r.irreducible ? "yes" : "no") << "\n"
              << "discriminant:   " << r.discriminant
              << (r.disc_is_square ? "  (a perfect square)" : "  (not a square)") << "\n"
              << "J4, J8, J12:    " << r.j_invariants[0] << ", " << r.j_invariants[1] << ", "
              << r.j_invariants[2] << "\n";
    std::cout << "resolvent g(x): x^6";
    for (int i = 0; i < 6; ++i) {
        const std::string& c = r.resolvent_coeffs[i];
        if (c == "0") continue;
        std::string mag = c;
        bool neg = !mag.empty() && mag[0] == '-';
        if (neg) mag = mag.substr(1);
        std::cout << (neg ? " - " : " + ") << mag;
        int pw = 5 - i;
        if (pw >= 1) std::cout << "x";
        if (pw >= 2) std::cout << "^" << pw;
    }
    std::cout << "\n";
    std::cout << "g rational roots:";
    if (r.resolvent_rational_roots.empty()) {
        std::cout << " (none)";
    } else {
        for (const auto& root : r.resolvent_rational_roots) std::cout << " " << root;
    }
    std::cout << "\n"
              << "Galois group:   " << r.group << "\n"
              << "solvable:       " << (r.solvable ? "yes" : "no") << "\n";
    if (r.oracle) {
        const auto& o = *r.oracle;
        std::cout << "oracle:\n"
                  << "  root residual:            " << o.root_residual << "\n"
                  << "  max coeff deviation:      " << o.max_rel_coeff_deviation << "\n"
                  << "  rational delta proposals:";
        if (o.delta_candidates.empty()) std::cout << " (none)";
        for (const auto& c : o.delta_candidates) std::cout << " " << c;
        std::cout << "\n"
                  << "  unverified proposals:     " << o.unverified_candidates << "\n"
                  << "  cross-check agrees:       " << (o.cross_check_agrees ? "yes" : "no")
                  << "\n";
    }
}

int classify_command(const std::string& poly_text, bool json, bool with_oracle, double tol,
                     long long max_den) {
    UniPoly p;
    try {
        p = parse_polynomial(poly_text);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    GaloisVerdict verdict;
    try {
        verdict = classify(p);
    } catch (const WrongDegree& e) {
        std::cerr << "error: not a quintic: " << e.what() << "\n";
        return 2;
    } catch (const RepeatedRoots& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ReduciblePolynomial& e) {
        std::cerr << "error: " << e.what()
                  << " (the classification applies to irreducible quintics)\n";
        return 2;
    }
    Report report = build_report(p, verdict);
    int rc = 0;
    if (with_oracle) {
        try {
            OracleCrossCheck cc = run_oracle_crosscheck(p, verdict, tol, max_den);
            attach_oracle(report, cc, tol, max_den);
            if (!cc.agrees) rc = 3;
        } catch (const NoConvergence& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 4;
        }
    }
    if (json)
        std::cout << to_json(report).dump(2) << "\n";
    else
        print_text_report(report);
    if (rc == 3)
        std::cerr << "error: exact and numeric pipelines disagree beyond tolerance\n";
    return rc;
}

int selftest_command(std::uint64_t seed, int count) {
    if (const char* env = std::getenv("QUINTIC_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
    }
    SelftestOptions opt;
    opt.seed = seed;
    opt.count = count;
    std::cout << "selftest: count=" << opt.count << " seed=" << opt.seed << "\n";
    SelftestResult res = run_selftest(opt);
    int fails = print_selftest(std::cout, res, opt.tol);
    return fails == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvability-by-radicals classification of quintics over Q"};
    app.require_subcommand(1);

    std::string poly_text;
    bool json = false;
    double tol = 1e-6;
    long long max_den = 1000000;
    std::uint64_t seed = 20210315;
    int count = 100;

    auto* cls = app.add_subcommand("classify", "classify a quintic given as text");
    cls->add_option("poly", poly_text, "polynomial, e.g. \"x^5 - 2\"")->required();
    cls->add_flag("--json", json, "emit a JSON report");

    auto* orc = app.add_subcommand("oracle", "classify and cross-check against the numeric oracle");
    orc->add_option("poly", poly_text, "polynomial, e.g. \"x^5 - 2\"")->required();
    orc->add_flag("--json", json, "emit a JSON report");
    orc->add_option("--tol", tol, "relative comparison tolerance (default 1e-6)");
    orc->add_option("--max-den", max_den, "denominator cap for rational proposals (default 1e6)");

    auto* st = app.add_subcommand("selftest", "run the seeded random-corpus property suite");
    st->add_option("--count", count, "number of corpus quintics (default 100)");
    st->add_option("--seed", seed, "corpus seed (QUINTIC_SEED overrides)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cls->parsed()) return classify_command(poly_text, json, false, tol, max_den);
    if (orc->parsed()) return classify_command(poly_text, json, true, tol, max_den);
    return selftest_command(seed, count);
}
