#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/invariants.hpp"
#include "quintic/polynomial.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// The paper gives no criterion separating C5 from D5, so they share a label.
enum class GroupLabel { C5_or_D5, F5, A5, S5 };

inline std::string to_string(GroupLabel g) {
    switch (g) {
        case GroupLabel::C5_or_D5: return "C5_or_D5";
        case GroupLabel::F5: return "F5";
        case GroupLabel::A5: return "A5";
        case GroupLabel::S5: return "S5";
    }
    return "?";
}

struct GaloisEvidence {
    Rational discriminant;
    bool disc_is_square = false;
    ResolventSextic resolvent;
    std::vector<Rational> resolvent_rational_roots;
};

struct GaloisVerdict {
    GroupLabel group = GroupLabel::S5;
    bool solvable = false;
    GaloisEvidence evidence;
};

// Decision tree over the two exact bits:
//   resolvent has a rational root?  discriminant a perfect square?
//     yes/yes -> C5 or D5     yes/no -> F5
//     no /yes -> A5           no /no -> S5
// Requires an irreducible quintic with nonzero discriminant.
inline GaloisVerdict classify(const UniPoly& p) {
    if (p.degree() != 5) throw WrongDegree(5, p.degree());
    GaloisVerdict v;
    v.evidence.discriminant = discriminant(p);
    if (v.evidence.discriminant == 0)
        throw RepeatedRoots();
    if (!is_irreducible_quintic(p))
        throw ReduciblePolynomial();
    v.evidence.disc_is_square = is_perfect_square(v.evidence.discriminant).has_value();
    v.evidence.resolvent = resolvent_sextic(p);
    v.evidence.resolvent_rational_roots = rational_roots(v.evidence.resolvent.poly);
    const bool has_root = !v.evidence.resolvent_rational_roots.empty();
    if (has_root)
        v.group = v.evidence.disc_is_square ? GroupLabel::C5_or_D5 : GroupLabel::F5;
    else
        v.group = v.evidence.disc_is_square ? GroupLabel::A5 : GroupLabel::S5;
    v.solvable = has_root;
    return v;
}

inline bool is_solvable(const UniPoly& p) { return classify(p).solvable; }

// A rational root of the resolvent sextic when one exists (the fixed delta
// value); the smallest such root, for determinism.
inline std::optional<Rational> solvability_certificate(const UniPoly& p) {
    GaloisVerdict v = classify(p);
    if (v.evidence.resolvent_rational_roots.empty()) return std::nullopt;
    return v.evidence.resolvent_rational_roots.front();
}

} // namespace quintic
