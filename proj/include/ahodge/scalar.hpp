#pragma once

// Exact Gaussian-rational scalars.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ahodge {

using Rational = mpq_class;

/// Raised when text input does not match the exact numeral grammar.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" (optional leading sign, q > 0). Decimals and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 3) == "\u2212") {  // typographic minus
            s.push_back('-');
            i += 2;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(text[i]))) s.push_back(text[i]);
    }
    if (s.empty()) throw ParseError("empty rational");
    std::size_t slash = s.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign, bool positive) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
        if (i == part.size()) throw ParseError("malformed rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("non-rational numeral '" + s + "'");
        if (positive && mpz_class(std::string(part)) <= 0)
            throw ParseError("denominator must be positive in '" + s + "'");
    };
    std::string_view num = std::string_view(s).substr(0, slash);
    check_int(num, true, false);
    std::string numstr(num);
    if (!numstr.empty() && numstr[0] == '+') numstr.erase(0, 1);
    if (slash == std::string::npos) return Rational(mpz_class(numstr));
    std::string_view den = std::string_view(s).substr(slash + 1);
    check_int(den, false, true);
    Rational r{mpz_class(numstr), mpz_class(std::string(den))};
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// A Gaussian rational re + i*im.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}  // NOLINT: implicit integer promotion is intended
    Scalar(int v) : re(v), im(0) {}   // NOLINT
    Scalar(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    [[nodiscard]] bool is_real() const { return sgn(im) == 0; }
    [[nodiscard]] Scalar conj() const { return {re, -im}; }
    /// |z|^2, exact.
    [[nodiscard]] Rational norm2() const { return re * re + im * im; }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational m = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rational d = o.norm2();
        if (sgn(d) == 0) throw std::domain_error("division by zero scalar");
        Rational r = (re * o.re + im * o.im) / d;
        Rational m = (im * o.re - re * o.im) / d;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
};

/// Text form "re+imi" (im may be negative, e.g. "1/2+-3i"). Parenthesised for use inside terms.
inline std::string format_scalar(const Scalar& s) {
    return "(" + format_rational(s.re) + "+" + format_rational(s.im) + "i)";
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }

/// Accepts "rat", "rat+rati", "rati" and an optional surrounding pair of parentheses.
inline Scalar parse_scalar(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s));
    std::string body = s.substr(0, s.size() - 1);
    // split at a '+' or '-' that is not the leading sign and not directly after another sign
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < body.size(); ++k) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '+' && body[k - 1] != '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        if (body.empty() || body == "+") return Scalar::i();
        if (body == "-") return -Scalar::i();
        return {Rational(0), parse_rational(body)};
    }
    Rational re = parse_rational(body.substr(0, split));
    std::string imtext = body.substr(split);
    if (imtext[0] == '+') imtext.erase(0, 1);
    if (imtext.empty() || imtext == "-") imtext += "1";
    return {re, parse_rational(imtext)};
}

}  // namespace ahodge
