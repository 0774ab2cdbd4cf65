#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/polynomial.hpp"
#include "quintic/rational.hpp"

namespace quintic {

using ComplexVal = std::complex<double>;

// Five roots in canonical order plus the max evaluation residual after the
// long-double polish pass.
struct RootQuintet {
    std::array<ComplexVal, 5> roots;
    double residual = 0.0;
};

// The six resolvent values delta_1..delta_6 in canonical order.
struct DeltaVector {
    std::array<ComplexVal, 6> delta;
};

struct Matrix2 {
    Rational a, b, c, d;
    Rational det() const { return a * d - b * c; }
};

// Projective root pair (gamma, beta) of a binary form factor beta*x - gamma*y;
// the affine root is gamma/beta.
struct ProjPair {
    ComplexVal gamma, beta;
};

// ---------------------------------------------------------------------------
// canonical ordering

// Sort by real part, then imaginary part, treating real parts within a
// relative tolerance as ties. A plain lexicographic sort is not reproducible
// for conjugate pairs, whose real parts agree only up to roundoff.
inline std::vector<ComplexVal> canonical_order(std::vector<ComplexVal> v) {
    double scale = 1.0;
    for (auto z : v) scale = std::max(scale, std::abs(z));
    const double eps = 1e-9 * scale;
    std::sort(v.begin(), v.end(), [](ComplexVal a, ComplexVal b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    // Re-sort runs of nearly equal real parts by imaginary part.
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i + 1;
        while (j < v.size() && v[j].real() - v[j - 1].real() <= eps) ++j;
        std::sort(v.begin() + i, v.begin() + j,
                  [](ComplexVal a, ComplexVal b) { return a.imag() < b.imag(); });
        i = j;
    }
    return v;
}

// ---------------------------------------------------------------------------
// root finding (Durand-Kerner with long-double Newton polish)

namespace detail {

template <typename C>
inline C horner(const std::vector<C>& coeffs_desc, C x) {
    C acc = coeffs_desc.front();
    for (std::size_t i = 1; i < coeffs_desc.size(); ++i) acc = acc * x + coeffs_desc[i];
    return acc;
}

// Durand-Kerner on a monic polynomial given by descending double coefficients
// (leading 1 included). Returns unsorted roots.
inline std::vector<ComplexVal> durand_kerner(const std::vector<double>& coeffs_desc,
                                             double tol, int max_iter) {
    const int n = static_cast<int>(coeffs_desc.size()) - 1;
    double radius = 0.0;
    for (int i = 1; i <= n; ++i) radius = std::max(radius, std::abs(coeffs_desc[i]));
    radius += 1.0;
    std::vector<ComplexVal> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.42;
        z[k] = (radius * (1.0 + 0.01 * k)) * ComplexVal(std::cos(ang), std::sin(ang));
    }
    std::vector<ComplexVal> cd(coeffs_desc.begin(), coeffs_desc.end());
    for (int it = 0; it < max_iter; ++it) {
        double corr = 0.0;
        for (int k = 0; k < n; ++k) {
            ComplexVal denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            ComplexVal dz = horner(cd, z[k]) / denom;
            z[k] -= dz;
            corr = std::max(corr, std::abs(dz));
        }
        if (corr < tol) return z;
    }
    throw NoConvergence("Durand-Kerner hit the iteration cap (" + std::to_string(max_iter) + ")");
}

inline std::vector<ComplexVal> polish_and_find(const std::vector<Rational>& ascending,
                                               double tol, double* residual_out) {
    const int n = static_cast<int>(ascending.size()) - 1;
    const Rational lead = ascending.back();
    std::vector<double> cd(n + 1);
    for (int i = 0; i <= n; ++i) cd[i] = to_double(ascending[n - i] / lead);
    auto z = durand_kerner(cd, tol, 500);

    using CL = std::complex<long double>;
    std::vector<CL> cl(n + 1), dl(n);
    for (int i = 0; i <= n; ++i) cl[i] = static_cast<long double>(cd[i]);
    for (int i = 0; i < n; ++i) dl[i] = cl[i] * static_cast<long double>(n - i);
    for (auto& r : z) {
        CL x(r.real(), r.imag());
        for (int step = 0; step < 3; ++step) {
            CL p = cl[0], dp = dl[0];
            for (int i = 1; i <= n; ++i) p = p * x + cl[i];
            for (int i = 1; i < n; ++i) dp = dp * x + dl[i];
            if (std::abs(dp) == 0.0L) break;
            x -= p / dp;
        }
        r = ComplexVal(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    }
    if (residual_out) {
        // Residual against the original (non-normalized) coefficients.
        std::vector<CL> orig(n + 1);
        for (int i = 0; i <= n; ++i) orig[i] = static_cast<long double>(to_double(ascending[n - i]));
        long double worst = 0.0L;
        for (auto r : z) {
            CL x(r.real(), r.imag()), p = orig[0];
            for (int i = 1; i <= n; ++i) p = p * x + orig[i];
            worst = std::max(worst, std::abs(p));
        }
        *residual_out = static_cast<double>(worst);
    }
    return z;
}

} // namespace detail

// Simultaneous-iteration root finding for a quintic with distinct roots.
inline RootQuintet find_roots(const UniPoly& p, double tol = 1e-12) {
    if (p.degree() != 5) throw WrongDegree(5, p.degree());
    double residual = 0.0;
    auto z = detail::polish_and_find(p.coeffs(), tol, &residual);
    z = canonical_order(std::move(z));
    RootQuintet q;
    std::copy(z.begin(), z.end(), q.roots.begin());
    q.residual = residual;
    return q;
}

// ---------------------------------------------------------------------------
// delta resolvent values

namespace detail {

// Vertex cycles of the pentagon/pentagram pair attached to each 5-Sylow
// subgroup of S5 (1-indexed). The two cycles of a pair are edge-complementary.
inline constexpr int kSylowCycles[6][2][5] = {
    {{1, 2, 3, 4, 5}, {1, 3, 5, 2, 4}},
    {{1, 2, 3, 5, 4}, {1, 3, 4, 2, 5}},
    {{1, 2, 4, 5, 3}, {1, 4, 3, 2, 5}},
    {{1, 2, 4, 3, 5}, {1, 4, 5, 2, 3}},
    {{1, 2, 5, 3, 4}, {1, 5, 4, 2, 3}},
    {{1, 3, 4, 5, 2}, {1, 4, 2, 3, 5}},
};

template <typename F>
inline ComplexVal cycle_product(const int (&cyc)[5], F&& edge) {
    ComplexVal prod = 1.0;
    for (int e = 0; e < 5; ++e) {
        ComplexVal d = edge(cyc[e] - 1, cyc[(e + 1) % 5] - 1);
        prod *= d * d;
    }
    return prod;
}

} // namespace detail

// delta_i = -(pentagon product + pentagram product) of squared differences:
// the reading under which the resolvent sextic factors as prod (x - delta_i).
inline ComplexVal delta_pattern_value(std::span<const ComplexVal, 5> roots, int i) {
    auto edge = [&](int a, int b) { return roots[a] - roots[b]; };
    return -(detail::cycle_product(detail::kSylowCycles[i][0], edge) +
             detail::cycle_product(detail::kSylowCycles[i][1], edge));
}

inline DeltaVector delta_values(const RootQuintet& rq, double tol = 1e-10) {
    double scale = 1.0;
    for (auto z : rq.roots) scale = std::max(scale, std::abs(z));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (std::abs(rq.roots[i] - rq.roots[j]) < tol * scale)
                throw DegenerateRoots("two roots closer than tolerance");
    std::vector<ComplexVal> d(6);
    for (int i = 0; i < 6; ++i)
        d[i] = delta_pattern_value(std::span<const ComplexVal, 5>(rq.roots), i);
    d = canonical_order(std::move(d));
    DeltaVector out;
    std::copy(d.begin(), d.end(), out.delta.begin());
    return out;
}

// ---------------------------------------------------------------------------
// projective version

inline ComplexVal dij(const ProjPair& pi, const ProjPair& pj) {
    return pi.gamma * pj.beta - pj.gamma * pi.beta;
}

inline DeltaVector tilde_delta(const std::array<ProjPair, 5>& pr) {
    double scale = 0.0;
    for (const auto& p : pr)
        scale = std::max({scale, std::abs(p.gamma), std::abs(p.beta)});
    const double tol = 1e-12 * (1.0 + scale * scale);
    auto edge = [&](int a, int b) { return dij(pr[a], pr[b]); };
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (std::abs(edge(a, b)) < tol)
                throw DegenerateRoots("proportional projective pairs");
    std::vector<ComplexVal> d(6);
    for (int i = 0; i < 6; ++i)
        d[i] = -(detail::cycle_product(detail::kSylowCycles[i][0], edge) +
                 detail::cycle_product(detail::kSylowCycles[i][1], edge));
    d = canonical_order(std::move(d));
    DeltaVector out;
    std::copy(d.begin(), d.end(), out.delta.begin());
    return out;
}

// Projective root pairs of a binary quintic given by coefficients b[k] of
// x^k y^(5-k). Degree drops at the top become pairs at infinity (1, 0).
inline std::array<ProjPair, 5> binary_pairs(const std::array<Rational, 6>& b, double tol = 1e-12) {
    int d = -1;
    for (int k = 5; k >= 0; --k)
        if (b[k] != 0) { d = k; break; }
    if (d < 0) throw ZeroPolynomial("zero binary form");
    std::array<ProjPair, 5> out;
    int at = 0;
    for (int k = 0; k < 5 - d; ++k) out[at++] = {ComplexVal(1.0), ComplexVal(0.0)};
    if (d >= 1) {
        std::vector<Rational> asc(b.begin(), b.begin() + d + 1);
        auto z = detail::polish_and_find(asc, tol, nullptr);
        for (auto r : z) out[at++] = {r, ComplexVal(1.0)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// symmetric functions and the numeric resolvent

// e_r via the product-expansion recurrence for prod (1 + v_i z).
inline ComplexVal elementary_symmetric(std::span<const ComplexVal> vals, int r) {
    const int n = static_cast<int>(vals.size());
    if (r < 1 || r > n) throw Error("elementary_symmetric: order out of range");
    std::vector<ComplexVal> e(n + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int k = std::min(i + 1, n); k >= 1; --k) e[k] += vals[i] * e[k - 1];
    return e[r];
}

// Coefficients d1..d6 of prod (x - delta_i) for the six delta values; the
// imaginary parts must cancel for a rational quintic.
inline std::array<double, 6> numeric_resolvent(const RootQuintet& rq) {
    DeltaVector dv = delta_values(rq);
    std::array<double, 6> out;
    for (int r = 1; r <= 6; ++r) {
        ComplexVal s = elementary_symmetric(std::span<const ComplexVal>(dv.delta), r);
        if (r % 2 != 0) s = -s;
        if (std::abs(s.imag()) > 1e-6 * (1.0 + std::abs(s.real())))
            throw DegenerateRoots("numeric resolvent coefficient has a non-real residue");
        out[r - 1] = s.real();
    }
    return out;
}

// ---------------------------------------------------------------------------
// the I invariants of the Delta_g factorization

namespace detail {

struct PairTerm {
    std::int8_t i, j, c;
};
// Nine quadratic factors of I2, six pair-terms each (1-indexed roots).
inline constexpr PairTerm kI2[9][6] = {
    {{1,3,1},{1,4,1},{1,5,-2},{3,4,-2},{3,5,1},{4,5,1}},
    {{2,3,2},{2,4,-1},{2,5,-1},{3,4,-1},{3,5,-1},{4,5,2}},
    {{2,3,1},{2,4,-2},{2,5,1},{3,4,1},{3,5,-2},{4,5,1}},
    {{1,2,2},{1,4,-1},{1,5,-1},{2,4,-1},{2,5,-1},{4,5,2}},
    {{1,3,1},{1,4,-2},{1,5,1},{3,4,1},{3,5,-2},{4,5,1}},
    {{2,3,1},{2,4,1},{2,5,-2},{3,4,-2},{3,5,1},{4,5,1}},
    {{1,3,2},{1,4,-1},{1,5,-1},{3,4,-1},{3,5,-1},{4,5,2}},
    {{1,2,2},{1,3,-1},{1,5,-1},{2,3,-1},{2,5,-1},{3,5,2}},
    {{1,2,2},{1,3,-1},{1,4,-1},{2,3,-1},{2,4,-1},{3,4,2}},
};

struct MonoTerm {
    std::int8_t e[5];
    std::int8_t c;
};
// Nine cubic factors of I3 with their powers (first six squared, last three
// to the fourth), ten monomials each.
inline constexpr MonoTerm kI3[9][10] = {
    {{{1,1,1,0,0},1},{{1,1,0,0,1},-1},{{1,0,1,1,0},-2},{{1,0,1,0,1},1},{{1,0,0,2,0},1},
     {{0,1,1,0,1},-1},{{0,1,0,2,0},-1},{{0,1,0,1,1},2},{{0,0,1,2,0},1},{{0,0,0,2,1},-1}},
    {{{1,1,0,1,0},1},{{1,1,0,0,1},-1},{{1,0,2,0,0},-1},{{1,0,1,0,1},2},{{1,0,0,1,1},-1},
     {{0,1,2,0,0},1},{{0,1,1,1,0},-2},{{0,1,0,1,1},1},{{0,0,2,1,0},1},{{0,0,2,0,1},-1}},
    {{{1,1,1,0,0},1},{{1,1,0,1,0},-1},{{1,0,1,1,0},1},{{1,0,1,0,1},-2},{{1,0,0,0,2},1},
     {{0,1,1,1,0},-1},{{0,1,0,1,1},2},{{0,1,0,0,2},-1},{{0,0,1,0,2},1},{{0,0,0,1,2},-1}},
    {{{1,1,0,1,0},1},{{1,1,0,0,1},-1},{{1,0,2,0,0},1},{{1,0,1,1,0},-2},{{1,0,0,1,1},1},
     {{0,1,2,0,0},-1},{{0,1,1,0,1},2},{{0,1,0,1,1},-1},{{0,0,2,1,0},1},{{0,0,2,0,1},-1}},
    {{{1,1,1,0,0},1},{{1,1,0,1,0},-1},{{1,0,1,1,0},-1},{{1,0,0,1,1},2},{{1,0,0,0,2},-1},
     {{0,1,1,1,0},1},{{0,1,1,0,1},-2},{{0,1,0,0,2},1},{{0,0,1,0,2},1},{{0,0,0,1,2},-1}},
    {{{1,1,1,0,0},1},{{1,1,0,0,1},-1},{{1,0,1,0,1},-1},{{1,0,0,2,0},-1},{{1,0,0,1,1},2},
     {{0,1,1,1,0},-2},{{0,1,1,0,1},1},{{0,1,0,2,0},1},{{0,0,1,2,0},1},{{0,0,0,2,1},-1}},
    {{{1,1,1,0,0},1},{{1,1,0,1,0},-2},{{1,1,0,0,1},1},{{1,0,1,0,1},-1},{{1,0,0,2,0},1},
     {{0,1,1,0,1},-1},{{0,1,0,2,0},1},{{0,0,1,2,0},-1},{{0,0,1,1,1},2},{{0,0,0,2,1},-1}},
    {{{1,1,1,0,0},1},{{1,1,0,1,0},1},{{1,1,0,0,1},-2},{{1,0,1,1,0},-1},{{1,0,0,0,2},1},
     {{0,1,1,1,0},-1},{{0,1,0,0,2},1},{{0,0,1,1,1},2},{{0,0,1,0,2},-1},{{0,0,0,1,2},-1}},
    {{{1,1,1,0,0},2},{{1,1,0,1,0},-1},{{1,1,0,0,1},-1},{{1,0,2,0,0},-1},{{1,0,0,1,1},1},
     {{0,1,2,0,0},-1},{{0,1,0,1,1},1},{{0,0,2,1,0},1},{{0,0,2,0,1},1},{{0,0,1,1,1},-2}},
};
inline constexpr int kI3Pow[9] = {2, 2, 2, 2, 2, 2, 4, 4, 4};

// Six quartic factors of I4, fifteen monomials each.
inline constexpr MonoTerm kI4[6][15] = {
    {{{2,2,0,0,0},1},{{2,1,0,0,1},-2},{{2,0,0,2,0},1},{{2,0,0,1,1},-2},{{2,0,0,0,2},2},
     {{1,2,0,1,0},-2},{{1,1,0,2,0},-2},{{1,1,0,1,1},8},{{1,1,0,0,2},-2},{{1,0,0,1,2},-2},
     {{0,2,0,2,0},2},{{0,2,0,1,1},-2},{{0,2,0,0,2},1},{{0,1,0,2,1},-2},{{0,0,0,2,2},1}},
    {{{2,2,0,0,0},1},{{2,1,0,1,0},-2},{{2,0,2,0,0},1},{{2,0,1,1,0},-2},{{2,0,0,2,0},2},
     {{1,2,1,0,0},-2},{{1,1,2,0,0},-2},{{1,1,1,1,0},8},{{1,1,0,2,0},-2},{{1,0,1,2,0},-2},
     {{0,2,2,0,0},2},{{0,2,1,1,0},-2},{{0,2,0,2,0},1},{{0,1,2,1,0},-2},{{0,0,2,2,0},1}},
    {{{2,2,0,0,0},1},{{2,1,1,0,0},-2},{{2,0,2,0,0},2},{{2,0,1,0,1},-2},{{2,0,0,0,2},1},
     {{1,2,0,0,1},-2},{{1,1,2,0,0},-2},{{1,1,1,0,1},8},{{1,1,0,0,2},-2},{{1,0,2,0,1},-2},
     {{0,2,2,0,0},1},{{0,2,1,0,1},-2},{{0,2,0,0,2},2},{{0,1,1,0,2},-2},{{0,0,2,0,2},1}},
    {{{2,2,0,0,0},1},{{2,1,1,0,0},-2},{{2,0,2,0,0},2},{{2,0,1,1,0},-2},{{2,0,0,2,0},1},
     {{1,2,0,1,0},-2},{{1,1,2,0,0},-2},{{1,1,1,1,0},8},{{1,1,0,2,0},-2},{{1,0,2,1,0},-2},
     {{0,2,2,0,0},1},{{0,2,1,1,0},-2},{{0,2,0,2,0},2},{{0,1,1,2,0},-2},{{0,0,2,2,0},1}},
    {{{2,2,0,0,0},1},{{2,1,0,1,0},-2},{{2,0,0,2,0},2},{{2,0,0,1,1},-2},{{2,0,0,0,2},1},
     {{1,2,0,0,1},-2},{{1,1,0,2,0},-2},{{1,1,0,1,1},8},{{1,1,0,0,2},-2},{{1,0,0,2,1},-2},
     {{0,2,0,2,0},1},{{0,2,0,1,1},-2},{{0,2,0,0,2},2},{{0,1,0,1,2},-2},{{0,0,0,2,2},1}},
    {{{2,2,0,0,0},1},{{2,1,0,0,1},-2},{{2,0,2,0,0},1},{{2,0,1,0,1},-2},{{2,0,0,0,2},2},
     {{1,2,1,0,0},-2},{{1,1,2,0,0},-2},{{1,1,1,0,1},8},{{1,1,0,0,2},-2},{{1,0,1,0,2},-2},
     {{0,2,2,0,0},2},{{0,2,1,0,1},-2},{{0,2,0,0,2},1},{{0,1,2,0,1},-2},{{0,0,2,0,2},1}},
};

inline ComplexVal eval_mono_factor(const MonoTerm* terms, int nterms,
                                   const std::array<ComplexVal, 5>& a) {
    ComplexVal s = 0.0;
    for (int t = 0; t < nterms; ++t) {
        ComplexVal m = static_cast<double>(terms[t].c);
        for (int v = 0; v < 5; ++v)
            for (int e = 0; e < terms[t].e[v]; ++e) m *= a[v];
        s += m;
    }
    return s;
}

} // namespace detail

// Literal factor-by-factor evaluation of the paper-displayed products I2, I3,
// I4 in the given root order. They are only invariant under a subgroup of
// root relabelings; callers interested in order effects can permute and
// re-evaluate.
inline std::array<ComplexVal, 3> invariants_I(const RootQuintet& rq) {
    const auto& a = rq.roots;
    ComplexVal i2 = 1.0;
    for (const auto& factor : detail::kI2) {
        ComplexVal s = 0.0;
        for (const auto& t : factor) s += static_cast<double>(t.c) * a[t.i - 1] * a[t.j - 1];
        i2 *= s;
    }
    ComplexVal i3 = 1.0;
    for (int f = 0; f < 9; ++f) {
        ComplexVal s = detail::eval_mono_factor(detail::kI3[f], 10, a);
        ComplexVal p = s * s;
        if (detail::kI3Pow[f] == 4) p *= p;
        i3 *= p;
    }
    ComplexVal i4 = 1.0;
    for (int f = 0; f < 6; ++f) i4 *= detail::eval_mono_factor(detail::kI4[f], 15, a);
    return {i2, i3, i4};
}

// ---------------------------------------------------------------------------
// GL2 action on binary quintics (exact)

inline std::array<Rational, 6> gl2_transform(const std::array<Rational, 6>& b, const Matrix2& m) {
    if (m.det() == 0) throw SingularMatrix();
    // f(ax + by, cx + dy), collected in x^k y^(5-k).
    std::array<Rational, 6> out{};
    // (a x + b y)^k expansion cached per k as we go.
    for (int k = 0; k <= 5; ++k) {
        if (b[k] == 0) continue;
        // binom(k, i) a^i b^(k-i) x^i y^(k-i)  times  binom(5-k, j) c^j d^(5-k-j) x^j y^(5-k-j)
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j <= 5 - k; ++j) {
                Rational term = b[k];
                Int bin1 = 1, bin2 = 1;
                for (int t = 0; t < i; ++t) bin1 = bin1 * (k - t) / (t + 1);
                for (int t = 0; t < j; ++t) bin2 = bin2 * (5 - k - t) / (t + 1);
                term *= Rational(bin1) * Rational(bin2);
                term *= rat_pow(m.a, i) * rat_pow(m.b, k - i);
                term *= rat_pow(m.c, j) * rat_pow(m.d, 5 - k - j);
                out[i + j] += term;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Delta_g factorization probe (Theorem 3 ratio)

struct DiscRelationReport {
    ComplexVal ratio;        // Delta_g / (P^4 Delta_f I2^2 I3 I4^2); the paper calls this I6^2
    ComplexVal delta_g;      // numeric discriminant of the resolvent
    double min_delta_gap;    // min |delta_i - delta_j| relative to max |delta|
    bool delta_g_nonzero;    // the Theorem 3 distinctness claim at 1e-6
};

inline DiscRelationReport discriminant_relation_check(const RootQuintet& rq) {
    DeltaVector dv = delta_values(rq);
    const auto& d = dv.delta;
    double scale = 0.0;
    for (auto z : d) scale = std::max(scale, std::abs(z));
    ComplexVal delta_g = 1.0;
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            ComplexVal diff = d[i] - d[j];
            delta_g *= diff * diff;
            gap = std::min(gap, std::abs(diff) / (scale > 0 ? scale : 1.0));
        }
    const auto& a = rq.roots;
    ComplexVal P = (a[0] - a[1]) * (a[2] - a[3]) * (a[3] - a[4]) * (a[2] - a[4]);
    ComplexVal delta_f = 1.0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) delta_f *= (a[i] - a[j]) * (a[i] - a[j]);
    auto [i2, i3, i4] = invariants_I(rq);
    ComplexVal denom = P * P * P * P * delta_f * i2 * i2 * i3 * i4 * i4;
    DiscRelationReport rep;
    rep.delta_g = delta_g;
    rep.min_delta_gap = gap;
    rep.delta_g_nonzero = gap > 1e-6;
    rep.ratio = std::abs(denom) > 0 ? delta_g / denom
                                    : ComplexVal(std::numeric_limits<double>::infinity(), 0);
    return rep;
}

// ---------------------------------------------------------------------------
// rational proximity (continued fractions)

// Smallest-denominator continued-fraction convergent of x within `window`,
// with denominator at most max_den.
inline std::optional<Rational> nearest_rational(double x, long long max_den, double window) {
    if (!std::isfinite(x) || std::abs(x) > 4e18) return std::nullopt;
    double v = x;
    Int p0 = 1, q0 = 0;       // convergent h_{-2}/k_{-2}
    Int p1, q1;               // running convergent
    double a0 = std::floor(v);
    p1 = Int(static_cast<long long>(a0));
    q1 = 1;
    for (int it = 0; it < 64; ++it) {
        Rational conv(p1, q1);
        double err = std::abs(x - to_double(conv));
        if (err <= window) return conv;
        double frac = v - std::floor(v);
        if (frac <= 0.0) break;
        v = 1.0 / frac;
        double ai = std::floor(v);
        if (!std::isfinite(v) || ai > 9e17) break;
        Int a(static_cast<long long>(ai));
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return std::nullopt;
}

struct DeltaRationalCandidate {
    int index;       // position in the canonical DeltaVector
    Rational value;  // CF-proposed rational
    double deviation;
};

// Proximity proposals: for each nearly-real delta, the smallest-denominator
// rational within tol*(1+|delta|). Proposals are heuristic; callers verify
// them against the exact resolvent.
inline std::vector<DeltaRationalCandidate> rational_delta_candidates(
    const DeltaVector& dv, double tol = 1e-6, long long max_den = 1000000) {
    std::vector<DeltaRationalCandidate> out;
    for (int i = 0; i < 6; ++i) {
        const ComplexVal z = dv.delta[i];
        if (std::abs(z.imag()) > tol * (1.0 + std::abs(z.real()))) continue;
        const double window = tol * (1.0 + std::abs(z.real()));
        if (auto r = nearest_rational(z.real(), max_den, window))
            out.push_back({i, *r, std::abs(z.real() - to_double(*r))});
    }
    return out;
}

} // namespace quintic
