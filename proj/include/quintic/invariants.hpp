#pragma once

#include <array>

#include "quintic/errors.hpp"
#include "quintic/polynomial.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// Monic quintic x^5 + b1 x^4 + b2 x^3 + b3 x^2 + b4 x + b5. The invariant
// formulas below are isobaric in this weighting (A, B, C of weights 4, 5, 6).
struct MonicQuintic {
    Rational b1, b2, b3, b4, b5;
};

struct AuxQuantities {
    Rational A, B, C, D, E, F, G;
};

struct JInvariants {
    Rational J4, J8, J12;
};

struct ResolventSextic {
    std::array<Rational, 6> d; // d1..d6
    UniPoly poly;              // x^6 + d1 x^5 + ... + d5 x + d6
};

inline MonicQuintic to_monic(const UniPoly& p) {
    if (p.degree() != 5) throw WrongDegree(5, p.degree());
    const Rational& l = p.lc();
    return {p[4] / l, p[3] / l, p[2] / l, p[1] / l, p[0] / l};
}

inline std::array<Rational, 3> abc(const MonicQuintic& q) {
    const Rational h(1, 100);
    return {
        h * (20 * q.b4 - 8 * q.b1 * q.b3 + 3 * q.b2 * q.b2),
        h * (100 * q.b5 - 12 * q.b1 * q.b4 + 2 * q.b2 * q.b3),
        h * (20 * q.b1 * q.b5 - 8 * q.b2 * q.b4 + 3 * q.b3 * q.b3),
    };
}

namespace detail {

// Linear form p*u + q*v and expansion helpers for the 3x3 determinant whose
// entries are linear in (u, v); the determinant is a binary cubic.
struct LinUV {
    Rational u, v;
};
using Cubic = std::array<Rational, 4>; // u^3, u^2 v, u v^2, v^3

inline std::array<Rational, 3> mul_lin(const LinUV& a, const LinUV& b) {
    return {a.u * b.u, a.u * b.v + a.v * b.u, a.v * b.v};
}
inline Cubic mul_lin_quad(const LinUV& a, const std::array<Rational, 3>& b) {
    return {a.u * b[0], a.u * b[1] + a.v * b[0], a.u * b[2] + a.v * b[1], a.v * b[2]};
}
inline void add_scaled(Cubic& acc, const Cubic& t, int s) {
    for (int i = 0; i < 4; ++i) acc[i] += s * t[i];
}

} // namespace detail

// Coefficients (D, E, F, G) of the binary cubic det(M)/1000 where M is the
// symmetric 3x3 matrix of linear forms in (u, v) built from b1..b5.
inline std::array<Rational, 4> defg(const MonicQuintic& q) {
    using detail::LinUV;
    const LinUV m11{10, 2 * q.b1}, m12{2 * q.b1, q.b2}, m13{q.b2, q.b3};
    const LinUV m22{q.b2, q.b3}, m23{q.b3, 2 * q.b4}, m33{2 * q.b4, 10 * q.b5};
    detail::Cubic det{};
    add_scaled(det, detail::mul_lin_quad(m11, detail::mul_lin(m22, m33)), 1);
    add_scaled(det, detail::mul_lin_quad(m11, detail::mul_lin(m23, m23)), -1);
    add_scaled(det, detail::mul_lin_quad(m12, detail::mul_lin(m12, m33)), -1);
    add_scaled(det, detail::mul_lin_quad(m12, detail::mul_lin(m23, m13)), 1);
    add_scaled(det, detail::mul_lin_quad(m13, detail::mul_lin(m12, m23)), 1);
    add_scaled(det, detail::mul_lin_quad(m13, detail::mul_lin(m22, m13)), -1);
    const Rational s(1, 1000);
    return {s * det[0], s * det[1], s * det[2], s * det[3]};
}

inline AuxQuantities aux_quantities(const MonicQuintic& q) {
    auto [A, B, C] = abc(q);
    auto [D, E, F, G] = defg(q);
    return {A, B, C, D, E, F, G};
}

inline JInvariants j_invariants(const MonicQuintic& q) {
    const auto x = aux_quantities(q);
    const Rational t1 = 3 * x.E * x.G - x.F * x.F;
    const Rational t2 = 9 * x.D * x.G - x.E * x.F;
    const Rational t3 = 3 * x.F * x.D - x.E * x.E;
    JInvariants j;
    j.J4 = Rational(125) * (x.B * x.B - 4 * x.A * x.C);
    j.J8 = Rational(Int(32) * 15625) * (2 * x.A * t1 - x.B * t2 + 2 * x.C * t3);
    j.J12 = Rational(Int(-1024) * 1953125, 3) * (4 * t1 * t3 - t2 * t2);
    return j;
}

// Berwick's expressions for the resolvent coefficients in the J basis.
inline ResolventSextic resolvent_coeffs(const JInvariants& j) {
    const Rational &J4 = j.J4, &J8 = j.J8, &J12 = j.J12;
    const Rational J4_2 = J4 * J4, J4_3 = J4_2 * J4, J4_4 = J4_3 * J4;
    const Rational J8_2 = J8 * J8;
    ResolventSextic r;
    r.d[0] = -10 * J4;
    r.d[1] = 35 * J4_2 + 10 * J8;
    r.d[2] = -60 * J4_3 - 30 * J4 * J8 - 10 * J12;
    r.d[3] = 55 * J4_4 + 30 * J4_2 * J8 + 25 * J8_2 + 50 * J4 * J12;
    r.d[4] = -26 * J4_4 * J4 - 10 * J4_3 * J8 - 44 * J4 * J8_2 - 59 * J4_2 * J12 - 14 * J8 * J12;
    r.d[5] = 5 * J4_4 * J4_2 + 20 * J4_2 * J8_2 + 20 * J4_3 * J12 + 20 * J4 * J8 * J12 + 25 * J12 * J12;
    r.poly = UniPoly({r.d[5], r.d[4], r.d[3], r.d[2], r.d[1], r.d[0], Rational(1)});
    return r;
}

// The resolvent sextic g(x) of a degree-5 polynomial: f is solvable by
// radicals iff g has a rational root (for irreducible f).
inline ResolventSextic resolvent_sextic(const UniPoly& p) {
    return resolvent_coeffs(j_invariants(to_monic(p)));
}

} // namespace quintic
