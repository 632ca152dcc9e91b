#pragma once

// Finite Fourier polynomials over the Gaussian rationals.

#include "ahodge/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <string>

namespace ahodge {

inline constexpr int kMaxFourierDims = 4;

/// Integer frequency vector of a character chi_k. Unused trailing slots stay zero.
struct ModeIndex {
    std::array<int, kMaxFourierDims> c{};
    int dims = 0;

    ModeIndex() = default;
    explicit ModeIndex(int d) : dims(d) {}
    ModeIndex(std::initializer_list<int> comps) : dims(static_cast<int>(comps.size())) {
        std::copy(comps.begin(), comps.end(), c.begin());
    }

    int& operator[](int j) { return c[static_cast<std::size_t>(j)]; }
    int operator[](int j) const { return c[static_cast<std::size_t>(j)]; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    }
    [[nodiscard]] int sup_norm() const {
        int m = 0;
        for (int v : c) m = std::max(m, std::abs(v));
        return m;
    }

    friend ModeIndex operator+(ModeIndex a, const ModeIndex& b) {
        for (int j = 0; j < kMaxFourierDims; ++j) a.c[j] += b.c[j];
        a.dims = std::max(a.dims, b.dims);
        return a;
    }
    friend ModeIndex operator-(ModeIndex a) {
        for (int& v : a.c) v = -v;
        return a;
    }
    friend bool operator==(const ModeIndex& a, const ModeIndex& b) { return a.c == b.c; }
    friend auto operator<=>(const ModeIndex& a, const ModeIndex& b) { return a.c <=> b.c; }
};

inline std::string format_mode(const ModeIndex& m) {
    std::string out = "X[";
    for (int j = 0; j < m.dims; ++j) {
        if (j) out += ",";
        out += std::to_string(m[j]);
    }
    return out + "]";
}

/// All modes with |kappa_j| <= box, lexicographic.
inline std::vector<ModeIndex> box_modes(int dims, int box) {
    std::vector<ModeIndex> out;
    ModeIndex k(dims);
    for (int j = 0; j < dims; ++j) k[j] = -box;
    if (dims == 0) return {k};
    while (true) {
        out.push_back(k);
        int j = dims - 1;
        while (j >= 0 && k[j] == box) {
            k[j] = -box;
            --j;
        }
        if (j < 0) break;
        ++k[j];
    }
    return out;
}

/// Finite sum of characters; zero coefficients are never stored.
class TrigPoly {
public:
    using Terms = std::map<ModeIndex, Scalar>;

    TrigPoly() = default;
    static TrigPoly constant(const Scalar& c, int dims) { return mode(ModeIndex(dims), c); }
    static TrigPoly mode(const ModeIndex& k, const Scalar& c = Scalar(1)) {
        TrigPoly p;
        p.add_term(k, c);
        return p;
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Scalar coeff(const ModeIndex& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const ModeIndex& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// True when only the zero mode is present (or the polynomial vanishes).
    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TrigPoly& operator-=(const TrigPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    TrigPoly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, const Scalar& s) { return a *= s; }
    friend TrigPoly operator*(const Scalar& s, TrigPoly a) { return a *= s; }
    friend TrigPoly operator-(TrigPoly a) { return a *= Scalar(-1); }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Convolution product: chi_a * chi_b = chi_{a+b}.
inline TrigPoly tp_mul(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term(ka + kb, ca * cb);
    return out;
}

inline TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return tp_mul(a, b); }

/// Pointwise complex conjugate: (k, c) -> (-k, conj c).
inline TrigPoly tp_conj(const TrigPoly& a) {
    TrigPoly out;
    for (const auto& [k, c] : a.terms()) out.add_term(-k, c.conj());
    return out;
}

/// Integral over the unit-volume quotient, i.e. the zero-mode coefficient.
inline Scalar tp_integrate(const TrigPoly& a) {
    for (const auto& [k, c] : a.terms())
        if (k.is_zero()) return c;
    return Scalar();
}

}  // namespace ahodge
