#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// Dense univariate polynomial over Q, coefficients stored by ascending power.
// Trailing zeros are trimmed on construction, so the leading coefficient is
// nonzero unless the polynomial is identically zero. degree() of zero is -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational a) { return UniPoly({std::move(a)}); }
    static UniPoly monomial(int k, const Rational& a = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = a;
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& operator[](int i) const {
        static const Rational kZero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[i];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& lc() const {
        if (c_.empty()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        if (s == 0) return UniPoly();
        std::vector<Rational> r(a.c_);
        for (auto& x : r) x *= s;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s) { return s * a; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Rational eval(const UniPoly& p, const Rational& x) {
    Rational acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

inline UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return UniPoly();
    std::vector<Rational> r(p.degree());
    for (int i = 1; i <= p.degree(); ++i) r[i - 1] = Rational(i) * p[i];
    return UniPoly(std::move(r));
}

// p(x + t), by Horner composition: exact, degree- and lc-preserving.
inline UniPoly shift(const UniPoly& p, const Rational& t) {
    UniPoly acc;
    const UniPoly xt({t, Rational(1)});
    for (int i = p.degree(); i >= 0; --i) acc = acc * xt + UniPoly::constant(p[i]);
    return acc;
}

// p(s * x)
inline UniPoly scale_arg(const UniPoly& p, const Rational& s) {
    std::vector<Rational> r(p.coeffs());
    Rational pw(1);
    for (auto& x : r) {
        x *= pw;
        pw *= s;
    }
    return UniPoly(std::move(r));
}

inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const Rational& lb = b.lc();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[k + b.degree()] / lb;
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

// Monic gcd over Q.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.lc());
}

// Sylvester-matrix resultant by exact Gaussian elimination. Sign convention:
// Res(p, q) = lc(p)^deg(q) * prod q(alpha_i) over the roots of p.
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0) return rat_pow(p[0], static_cast<unsigned>(n));
    if (n == 0) return rat_pow(q[0], static_cast<unsigned>(m));
    const int N = m + n;
    std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r][r + m - j] = p[j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[n + r][r + n - j] = q[j];
    Rational det(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (s[r][col] != 0) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (s[r][col] == 0) continue;
            Rational f = s[r][col] / s[col][col];
            for (int c2 = col; c2 < N; ++c2) s[r][c2] -= f * s[col][c2];
        }
    }
    return det;
}

// Delta = (-1)^{n(n-1)/2} Res(p, p') / lc(p); equals prod_{i<j}(a_i - a_j)^2
// for monic p.
inline Rational discriminant(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("discriminant of the zero polynomial");
    const int n = p.degree();
    if (n < 2) throw WrongDegree("discriminant requires degree >= 2, got " + std::to_string(n));
    Rational r = resultant(p, derivative(p)) / p.lc();
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

namespace detail {

// Clear denominators and content: the primitive integer coefficient vector of
// a nonzero p, with positive leading coefficient iff keep_sign is false.
inline std::vector<Int> primitive_integer_coeffs(const UniPoly& p) {
    Int l(1);
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(num(c) * (l / den(c)));
    Int g(0);
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g != 0)
        for (auto& x : v) x /= g;
    return v;
}

inline std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> div;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            div.push_back(d);
            if (d * d != n) div.push_back(n / d);
        }
    }
    return div;
}

// Sturm-sequence isolation of the *integer* roots of a monic integer
// polynomial (coefficients ascending, q.back() == 1). Complete for constants
// far too large to factor, which the resolvent sextics routinely produce.
inline std::vector<Int> integer_roots_monic(const UniPoly& q) {
    UniPoly sf = q;
    UniPoly g = poly_gcd(q, derivative(q));
    if (g.degree() > 0) sf = divmod(q, g).first;

    std::vector<UniPoly> sturm{sf, derivative(sf)};
    while (!sturm.back().is_zero() && sturm.back().degree() > 0) {
        UniPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
        sturm.push_back(-r);
    }
    auto variations = [&](const Rational& x) {
        int v = 0, prev = 0;
        for (const auto& f : sturm) {
            if (f.is_zero()) continue;
            Rational y = eval(f, x);
            int s = y == 0 ? 0 : (y > 0 ? 1 : -1);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    };

    // Power-of-two Fujiwara-style bound: |root| <= 2 max_i |c_{n-i}|^{1/i},
    // computed from bit lengths so the bisection range stays tight even when
    // the constant term has hundreds of digits.
    const int nn = sf.degree();
    unsigned kbits = 1;
    for (int i = 1; i <= nn; ++i) {
        const Rational& c = sf[nn - i];
        if (c == 0) continue;
        Int a = boost::multiprecision::abs(num(c));
        unsigned bl = static_cast<unsigned>(boost::multiprecision::msb(a)) + 1;
        kbits = std::max(kbits, (bl + i - 1) / i + 1);
    }
    Rational bound = Rational(int_pow(Int(2), kbits + 1));

    std::vector<Int> found;
    auto check_int = [&](const Int& n) {
        if (eval(q, Rational(n)) == 0) found.push_back(n);
    };
    struct Iv { Rational lo, hi; int vlo, vhi; };
    std::vector<Iv> stack{{-bound, bound, variations(-bound), variations(bound)}};
    while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        if (iv.vlo - iv.vhi <= 0) continue;
        if (iv.hi - iv.lo <= Rational(1, 2)) {
            // At most one integer can sit in the interval.
            Int lo_floor = boost::multiprecision::numerator(iv.lo) / boost::multiprecision::denominator(iv.lo);
            for (Int n = lo_floor - 1; n <= lo_floor + 1; ++n)
                if (Rational(n) >= iv.lo && Rational(n) <= iv.hi) check_int(n);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        if (den(mid) == 1) mid += Rational(1, 4); // rational roots are integers; keep endpoints off them
        if (eval(sf, mid) == 0) {
            // Dyadic non-integer midpoints cannot be roots of a monic integer
            // polynomial, so this branch is unreachable; guard anyway.
            mid += Rational(1, 8);
        }
        int vm = variations(mid);
        stack.push_back({iv.lo, mid, iv.vlo, vm});
        stack.push_back({mid, iv.hi, vm, iv.vhi});
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace detail

// The complete, duplicate-free, ascending list of rational roots. Small
// constant/leading coefficients go through the rational-root-theorem divisor
// search; otherwise the polynomial is monicized (y = lc * x) and its integer
// roots are isolated exactly with Sturm sequences.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    if (p.degree() == 0) return roots;

    std::vector<Int> v = detail::primitive_integer_coeffs(p);
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    if (k > 0) roots.push_back(Rational(0));
    std::vector<Int> w(v.begin() + k, v.end());
    if (w.size() <= 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    const Int a0 = w.front(), an = w.back();
    const Int kDivisorCap = Int(1000000000); // 1e9: trial division stays instant
    if (boost::multiprecision::abs(a0) <= kDivisorCap && boost::multiprecision::abs(an) <= kDivisorCap) {
        std::vector<Rational> wr;
        for (const auto& c : w) wr.push_back(Rational(c));
        UniPoly pw{std::vector<Rational>(wr)};
        for (const Int& u : detail::divisors_of(a0))
            for (const Int& q : detail::divisors_of(an)) {
                if (boost::multiprecision::gcd(u, q) != 1) continue;
                for (int sgn : {1, -1}) {
                    Rational cand(sgn * u, q);
                    if (eval(pw, cand) == 0) roots.push_back(cand);
                }
            }
    } else {
        // Monicize: roots of Q(y) = an^{n-1} P(y/an) are an * (roots of P),
        // and every rational root of P shows up as an integer root of Q.
        const int n = static_cast<int>(w.size()) - 1;
        std::vector<Rational> qc(w.size());
        qc[n] = 1;
        Int pw(1);
        for (int i = n - 1; i >= 0; --i) {
            qc[i] = Rational(w[i] * pw);
            pw *= an;
        }
        for (const Int& r : detail::integer_roots_monic(UniPoly(std::move(qc))))
            roots.push_back(Rational(r, an));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Irreducibility over Q for degree-5 input: no rational root and no monic
// integer quadratic factor of the monicized polynomial. Degree 3+2 and 4+1
// splits are covered by the complementary factor.
inline bool is_irreducible_quintic(const UniPoly& p) {
    if (p.degree() != 5) throw WrongDegree(5, p.degree());
    if (!rational_roots(p).empty()) return false;

    std::vector<Int> w = detail::primitive_integer_coeffs(p);
    const Int L = w.back();
    // Q(y) = L^4 p(y/L), monic integer; its roots are L * roots(p).
    std::vector<Rational> qc(6);
    for (int i = 5; i >= 0; --i) qc[i] = Rational(w[i] * int_pow(L, static_cast<unsigned>(4 - std::min(4, i))));
    qc[5] = 1;
    UniPoly Q{std::vector<Rational>(qc)};

    // Root bound for Q: |L * root(p)| <= |L| + max|w_i|.
    Int maxw(0);
    for (const auto& c : w) maxw = std::max(maxw, Int(boost::multiprecision::abs(c)));
    const Int B = boost::multiprecision::abs(L) + maxw;
    const Int b_cap = B * B;
    const Int a_cap = 2 * B;

    const Int q0 = num(qc[0]);
    // q0 == 0 would mean a zero root, already rejected above.
    for (const Int& bdiv : detail::divisors_of(q0)) {
        for (int sgn : {1, -1}) {
            Int b = sgn * bdiv;
            if (boost::multiprecision::abs(b) > b_cap) continue;
            for (Int a = -a_cap; a <= a_cap; ++a) {
                UniPoly quad({Rational(b), Rational(a), Rational(1)});
                if (divmod(Q, quad).second.is_zero()) return false;
            }
        }
    }
    return true;
}

} // namespace quintic
