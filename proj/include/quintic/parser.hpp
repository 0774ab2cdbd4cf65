#pragma once

#include <cctype>
#include <map>
#include <string>

#include "quintic/errors.hpp"
#include "quintic/polynomial.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// Polynomial text format. Grammar (ASCII, whitespace between tokens ignored):
//   poly  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ['*'] [var] | var
//   var   := 'x' ['^' digits]
//   coeff := digits ['/' digits]
// Repeated powers are summed. Examples: "x^5 - 2", "3/2x^5", "1 + x".
namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    UniPoly parse() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(pos_, "a polynomial term");
        std::map<int, Rational> terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) {
                if (first) throw ParseError(pos_, "a polynomial term");
                break;
            }
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError(pos_, "'+' or '-'");
            }
            auto [power, coeff] = term();
            terms[power] += sign * coeff;
            first = false;
        }
        int deg = terms.empty() ? -1 : terms.rbegin()->first;
        std::vector<Rational> c(deg + 1, Rational(0));
        for (auto& [k, v] : terms) c[k] = v;
        return UniPoly(std::move(c));
    }

private:
    std::pair<int, Rational> term() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(pos_, "a coefficient or 'x'");
        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Int n = digits();
            Int d = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                d = digits();
                if (d == 0) throw ParseError(pos_, "a nonzero denominator");
            }
            coeff = Rational(n, d);
            saw_coeff = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != 'x') throw ParseError(pos_, "'x' after '*'");
            }
        }
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            int power = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip_ws();
                Int e = digits();
                if (e > 64) throw ParseError(pos_, "an exponent at most 64");
                power = static_cast<int>(e);
            }
            return {power, coeff};
        }
        if (!saw_coeff) throw ParseError(pos_, "a coefficient or 'x'");
        return {0, coeff};
    }

    Int digits() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(pos_, "digits");
        Int n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline UniPoly parse_polynomial(const std::string& s) {
    return detail::PolyParser(s).parse();
}

// Canonical rendering: descending powers, "a/b" fractions, no '*'.
// parse_polynomial(to_string(p)) == p.
inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p[k];
        if (c == 0) continue;
        const bool leading = out.empty();
        const bool neg = c < 0;
        if (!leading) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        Rational mag = neg ? Rational(-c) : c;
        if (k == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag);
            out += "x";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace quintic
