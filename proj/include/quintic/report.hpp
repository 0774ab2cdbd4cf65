#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quintic/classifier.hpp"
#include "quintic/crosscheck.hpp"
#include "quintic/parser.hpp"

namespace quintic {

// Machine-readable result of a classification run. Every exact value is a
// "num" or "num/den" string so nothing is rounded on the way out.
struct OracleSection {
    double root_residual = 0.0;
    double max_rel_coeff_deviation = 0.0;
    std::vector<std::string> delta_candidates;
    int unverified_candidates = 0;
    bool cross_check_agrees = true;
    double tol = 1e-6;
    long long max_denominator = 1000000;

    friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct Report {
    std::string input;
    bool irreducible = false;
    std::string discriminant;
    bool disc_is_square = false;
    std::array<std::string, 3> j_invariants;
    std::array<std::string, 6> resolvent_coeffs;
    std::vector<std::string> resolvent_rational_roots;
    std::string group;
    bool solvable = false;
    std::optional<OracleSection> oracle;

    friend bool operator==(const Report&, const Report&) = default;
};

inline Report build_report(const UniPoly& p, const GaloisVerdict& v) {
    Report r;
    r.input = to_string(p);
    r.irreducible = true; // classify() rejects reducible input
    r.discriminant = to_string(v.evidence.discriminant);
    r.disc_is_square = v.evidence.disc_is_square;
    const JInvariants j = j_invariants(to_monic(p));
    r.j_invariants = {to_string(j.J4), to_string(j.J8), to_string(j.J12)};
    for (int i = 0; i < 6; ++i) r.resolvent_coeffs[i] = to_string(v.evidence.resolvent.d[i]);
    for (const auto& root : v.evidence.resolvent_rational_roots)
        r.resolvent_rational_roots.push_back(to_string(root));
    r.group = to_string(v.group);
    r.solvable = v.solvable;
    return r;
}

inline void attach_oracle(Report& r, const OracleCrossCheck& cc, double tol, long long max_den) {
    OracleSection s;
    s.root_residual = cc.roots.residual;
    s.max_rel_coeff_deviation = cc.max_rel_coeff_deviation;
    for (const auto& cand : cc.candidates) s.delta_candidates.push_back(to_string(cand.value));
    s.unverified_candidates = cc.unverified_candidates;
    s.cross_check_agrees = cc.agrees;
    s.tol = tol;
    s.max_denominator = max_den;
    r.oracle = std::move(s);
}

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json j{
        {"input", r.input},
        {"irreducible", r.irreducible},
        {"discriminant", r.discriminant},
        {"disc_is_square", r.disc_is_square},
        {"j_invariants", r.j_invariants},
        {"resolvent_coeffs", r.resolvent_coeffs},
        {"resolvent_rational_roots", r.resolvent_rational_roots},
        {"group", r.group},
        {"solvable", r.solvable},
    };
    if (r.oracle) {
        j["oracle"] = {
            {"root_residual", r.oracle->root_residual},
            {"max_rel_coeff_deviation", r.oracle->max_rel_coeff_deviation},
            {"delta_candidates", r.oracle->delta_candidates},
            {"unverified_candidates", r.oracle->unverified_candidates},
            {"cross_check_agrees", r.oracle->cross_check_agrees},
            {"tol", r.oracle->tol},
            {"max_denominator", r.oracle->max_denominator},
        };
    }
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.input = j.at("input").get<std::string>();
    r.irreducible = j.at("irreducible").get<bool>();
    r.discriminant = j.at("discriminant").get<std::string>();
    r.disc_is_square = j.at("disc_is_square").get<bool>();
    r.j_invariants = j.at("j_invariants").get<std::array<std::string, 3>>();
    r.resolvent_coeffs = j.at("resolvent_coeffs").get<std::array<std::string, 6>>();
    r.resolvent_rational_roots = j.at("resolvent_rational_roots").get<std::vector<std::string>>();
    r.group = j.at("group").get<std::string>();
    r.solvable = j.at("solvable").get<bool>();
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        OracleSection s;
        s.root_residual = o.at("root_residual").get<double>();
        s.max_rel_coeff_deviation = o.at("max_rel_coeff_deviation").get<double>();
        s.delta_candidates = o.at("delta_candidates").get<std::vector<std::string>>();
        s.unverified_candidates = o.at("unverified_candidates").get<int>();
        s.cross_check_agrees = o.at("cross_check_agrees").get<bool>();
        s.tol = o.at("tol").get<double>();
        s.max_denominator = o.at("max_denominator").get<long long>();
        r.oracle = std::move(s);
    }
    return r;
}

} // namespace quintic
