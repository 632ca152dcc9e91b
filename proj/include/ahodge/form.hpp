#pragma once

// Bigraded exterior forms on a coframe phi^1..phi^n, phibar^1..phibar^n with
// finite Fourier coefficients.

#include "ahodge/trigpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ahodge {

inline constexpr int kMaxCoframeRank = 8;

/// Index sets I (holomorphic factors) and J (antiholomorphic factors) as bitmasks;
/// bit a-1 stands for phi^a. Canonical generator is phi^{i1..ip} ^ phibar^{j1..jq}.
struct BasisIndex {
    std::uint8_t I = 0;
    std::uint8_t J = 0;

    [[nodiscard]] int p() const { return std::popcount(I); }
    [[nodiscard]] int q() const { return std::popcount(J); }
    [[nodiscard]] int degree() const { return p() + q(); }

    /// Graded order: (p, q) first, then I and J as ascending tuples, lexicographically.
    friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
        if (a.p() != b.p()) return a.p() < b.p();
        if (a.q() != b.q()) return a.q() < b.q();
        if (a.I != b.I) return tuple_less(a.I, b.I);
        return tuple_less(a.J, b.J);
    }
    friend bool operator==(const BasisIndex& a, const BasisIndex& b) = default;

private:
    // lexicographic comparison of the ascending index tuples of two equal-size sets
    static bool tuple_less(std::uint8_t x, std::uint8_t y) {
        while (x && y) {
            int ax = std::countr_zero(x), ay = std::countr_zero(y);
            if (ax != ay) return ax < ay;
            x &= static_cast<std::uint8_t>(x - 1);
            y &= static_cast<std::uint8_t>(y - 1);
        }
        return false;
    }
};

inline std::vector<int> mask_indices(std::uint8_t m) {
    std::vector<int> out;
    for (int a = 0; a < kMaxCoframeRank; ++a)
        if (m & (1u << a)) out.push_back(a + 1);
    return out;
}

inline std::uint8_t indices_mask(std::span<const int> idx) {
    std::uint8_t m = 0;
    for (int a : idx) {
        if (a < 1 || a > kMaxCoframeRank) throw ParseError("coframe index out of range");
        auto bit = static_cast<std::uint8_t>(1u << (a - 1));
        if (m & bit) throw ParseError("repeated coframe index");
        m |= bit;
    }
    return m;
}

/// All generators of bidegree (p, q) on rank n, in canonical order.
inline std::vector<BasisIndex> basis_of(int n, int p, int q) {
    std::vector<BasisIndex> out;
    const int full = 1 << n;
    for (int I = 0; I < full; ++I) {
        if (std::popcount(static_cast<unsigned>(I)) != p) continue;
        for (int J = 0; J < full; ++J) {
            if (std::popcount(static_cast<unsigned>(J)) != q) continue;
            out.push_back({static_cast<std::uint8_t>(I), static_cast<std::uint8_t>(J)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All 4^n generators, graded order.
inline std::vector<BasisIndex> full_basis(int n) {
    std::vector<BasisIndex> out;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            auto b = basis_of(n, p, q);
            out.insert(out.end(), b.begin(), b.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Sign and index of the canonical product of two generators; sign 0 if a factor repeats.
inline std::pair<int, BasisIndex> wedge_generators(const BasisIndex& a, const BasisIndex& b) {
    if ((a.I & b.I) || (a.J & b.J)) return {0, {}};
    // Letters: holomorphic a -> a, antiholomorphic a -> 16 + a. Sort counting inversions.
    std::vector<int> seq;
    for (int i : mask_indices(a.I)) seq.push_back(i);
    for (int j : mask_indices(a.J)) seq.push_back(16 + j);
    for (int i : mask_indices(b.I)) seq.push_back(i);
    for (int j : mask_indices(b.J)) seq.push_back(16 + j);
    int inversions = 0;
    for (std::size_t x = 0; x < seq.size(); ++x)
        for (std::size_t y = x + 1; y < seq.size(); ++y)
            if (seq[x] > seq[y]) ++inversions;
    return {inversions % 2 ? -1 : 1,
            {static_cast<std::uint8_t>(a.I | b.I), static_cast<std::uint8_t>(a.J | b.J)}};
}

/// A finite sum of TrigPoly multiples of generators; may mix bidegrees.
class Form {
public:
    using Terms = std::map<BasisIndex, TrigPoly>;

    Form() = default;
    static Form generator(const BasisIndex& b, const TrigPoly& f) {
        Form out;
        out.add(b, f);
        return out;
    }
    static Form generator(const BasisIndex& b, const Scalar& c, int dims) {
        return generator(b, TrigPoly::constant(c, dims));
    }
    static Form function(const TrigPoly& f) { return generator({}, f); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] TrigPoly coeff(const BasisIndex& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? TrigPoly() : it->second;
    }

    void add(const BasisIndex& b, const TrigPoly& f) {
        if (f.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Bidegree (p, q) if every term shares it.
    [[nodiscard]] std::optional<std::pair<int, int>> bidegree() const {
        if (terms_.empty()) return std::nullopt;
        auto first = terms_.begin()->first;
        for (const auto& [b, f] : terms_)
            if (b.p() != first.p() || b.q() != first.q()) return std::nullopt;
        return std::pair{first.p(), first.q()};
    }
    [[nodiscard]] bool is_homogeneous() const { return terms_.empty() || bidegree().has_value(); }

    /// Part of bidegree (p, q).
    [[nodiscard]] Form part(int p, int q) const {
        Form out;
        for (const auto& [b, f] : terms_)
            if (b.p() == p && b.q() == q) out.terms_.emplace(b, f);
        return out;
    }

    /// Distinct bidegrees present, ascending.
    [[nodiscard]] std::vector<std::pair<int, int>> bidegrees() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [b, f] : terms_) {
            std::pair<int, int> pq{b.p(), b.q()};
            if (std::find(out.begin(), out.end(), pq) == out.end()) out.push_back(pq);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Form& operator+=(const Form& o) {
        for (const auto& [b, f] : o.terms_) add(b, f);
        return *this;
    }
    Form& operator-=(const Form& o) {
        for (const auto& [b, f] : o.terms_) add(b, -f);
        return *this;
    }
    Form& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, f] : terms_) f *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) { return a *= Scalar(-1); }
    friend Form operator*(Form a, const Scalar& s) { return a *= s; }
    friend Form operator*(const Scalar& s, Form a) { return a *= s; }
    friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Multiplies every coefficient by a function.
inline Form operator*(const TrigPoly& f, const Form& a) {
    Form out;
    for (const auto& [b, g] : a.terms()) out.add(b, tp_mul(f, g));
    return out;
}

inline Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ba, fa] : a.terms())
        for (const auto& [bb, fb] : b.terms()) {
            auto [sign, idx] = wedge_generators(ba, bb);
            if (sign == 0) continue;
            TrigPoly prod = tp_mul(fa, fb);
            if (sign < 0) prod *= Scalar(-1);
            out.add(idx, prod);
        }
    return out;
}

/// conj(phi^I ^ phibar^J) = (-1)^{pq} phi^J ^ phibar^I.
inline Form form_conj(const Form& a) {
    Form out;
    for (const auto& [b, f] : a.terms()) {
        TrigPoly g = tp_conj(f);
        if ((b.p() * b.q()) % 2) g *= Scalar(-1);
        out.add({b.J, b.I}, g);
    }
    return out;
}

/// Squared norm of a generator: product of the per-coframe squared norms of its factors.
inline Rational generator_norm(const BasisIndex& b, std::span<const Rational> norms) {
    Rational r(1);
    for (int a : mask_indices(b.I)) r *= norms[static_cast<std::size_t>(a - 1)];
    for (int a : mask_indices(b.J)) r *= norms[static_cast<std::size_t>(a - 1)];
    return r;
}

/// Pointwise Hermitian pairing, conjugate-linear in the second slot.
inline TrigPoly inner(const Form& a, const Form& b, std::span<const Rational> norms) {
    TrigPoly out;
    for (const auto& [ba, fa] : a.terms()) {
        auto it = b.terms().find(ba);
        if (it == b.terms().end()) continue;
        out += tp_mul(fa, tp_conj(it->second)) * Scalar(generator_norm(ba, norms));
    }
    return out;
}

inline Scalar l2_inner(const Form& a, const Form& b, std::span<const Rational> norms) {
    // Only matching modes contribute to the zero mode of the product.
    Scalar acc;
    for (const auto& [ba, fa] : a.terms()) {
        auto it = b.terms().find(ba);
        if (it == b.terms().end()) continue;
        Scalar s;
        for (const auto& [k, c] : fa.terms()) s += c * it->second.coeff(k).conj();
        acc += s * Scalar(generator_norm(ba, norms));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Text serialization:
//   form := term ('+' term)* | '0'
//   term := scalar '*' 'X[' int (',' int)* ']' '*' 'w[' ints ';' ints ']'

inline std::string format_basis(const BasisIndex& b) {
    std::string out = "w[";
    bool first = true;
    for (int a : mask_indices(b.I)) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
    }
    out += ";";
    first = true;
    for (int a : mask_indices(b.J)) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
    }
    return out + "]";
}

/// Deterministic: generators in graded order, modes lexicographic. dims sets the X[...] arity.
inline std::string format_form(const Form& a, int dims) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [b, f] : a.terms())
        for (const auto& [k, c] : f.terms()) {
            if (!out.empty()) out += "+";
            ModeIndex kk = k;
            kk.dims = dims;
            out += format_scalar(c) + "*" + format_mode(kk) + "*" + format_basis(b);
        }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Form& a) {
    int dims = 0;
    for (const auto& [b, f] : a.terms())
        for (const auto& [k, c] : f.terms()) dims = std::max(dims, k.dims);
    return os << format_form(a, dims);
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
        if (tok.empty()) throw ParseError("empty integer in list");
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size()) throw ParseError("malformed integer");
        for (; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw ParseError("malformed integer '" + std::string(tok) + "'");
        out.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

inline Form parse_form(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    Form out;
    if (s == "0") return out;
    if (s.empty()) throw ParseError("empty form text");
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t xpos = s.find("*X[", pos);
        if (xpos == std::string::npos) throw ParseError("term missing '*X[' near offset " + std::to_string(pos));
        Scalar c = parse_scalar(std::string_view(s).substr(pos, xpos - pos));
        std::size_t xend = s.find(']', xpos);
        if (xend == std::string::npos) throw ParseError("unterminated X[");
        auto modes = detail::parse_int_list(std::string_view(s).substr(xpos + 3, xend - xpos - 3));
        if (modes.empty() || modes.size() > kMaxFourierDims) throw ParseError("mode arity out of range");
        ModeIndex k(static_cast<int>(modes.size()));
        for (std::size_t j = 0; j < modes.size(); ++j) k[static_cast<int>(j)] = modes[j];
        if (s.compare(xend + 1, 3, "*w[") != 0) throw ParseError("term missing '*w['");
        std::size_t wstart = xend + 4;
        std::size_t wend = s.find(']', wstart);
        if (wend == std::string::npos) throw ParseError("unterminated w[");
        std::string_view body = std::string_view(s).substr(wstart, wend - wstart);
        std::size_t semi = body.find(';');
        if (semi == std::string_view::npos) throw ParseError("w[...] needs ';'");
        auto I = detail::parse_int_list(body.substr(0, semi));
        auto J = detail::parse_int_list(body.substr(semi + 1));
        indices_mask(I);  // rejects repeats and out-of-range indices
        indices_mask(J);
        // Unsorted index lists denote the wedge in the given order.
        Form gen = Form::generator({}, TrigPoly::mode(k, c));
        for (int a : I) gen = wedge(gen, Form::generator({indices_mask(std::vector<int>{a}), 0}, Scalar(1), k.dims));
        for (int a : J) gen = wedge(gen, Form::generator({0, indices_mask(std::vector<int>{a})}, Scalar(1), k.dims));
        out += gen;
        pos = wend + 1;
        if (pos < s.size()) {
            if (s[pos] != '+') throw ParseError("expected '+' between terms");
            ++pos;
        }
    }
    return out;
}

}  // namespace ahodge
