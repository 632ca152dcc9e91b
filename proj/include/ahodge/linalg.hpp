#pragma once

// Exact dense linear algebra over the Gaussian rationals.

#include "ahodge/scalar.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ahodge {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }
    /// Builds a matrix whose rows are the given vectors (all of length cols).
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const { return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)}; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        return out;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// In-place reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right. Returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Scalar inv = Scalar(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Canonical basis of the row span: the nonzero rows of the RREF (leading entries 1).
inline std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    Matrix m = Matrix::from_rows(vectors, dim);
    auto piv = rref(m);
    std::vector<Vector> out;
    for (std::size_t r = 0; r < piv.size(); ++r) out.push_back(m.row(r));
    return out;
}

/// Kernel basis in canonical form: RREF of the free-variable basis, so every vector's
/// first nonzero coordinate is 1 and the result does not depend on row order of A.
inline std::vector<Vector> nullspace(const Matrix& a) {
    Matrix m = a;
    auto piv = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (!m(r, f).is_zero()) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return span_basis(basis, a.cols());
}

/// Exact determinant of a square matrix by elimination.
inline Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return Scalar();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = Scalar(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// One solution of A x = b, or nullopt if inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    return x;
}

namespace detail {

// Reduction modulo p = 998244353 (p = 1 mod 4, so i maps to a square root of -1).
inline constexpr std::uint64_t kModP = 998244353ULL;

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kModP;
    while (e) {
        if (e & 1) r = r * b % kModP;
        b = b * b % kModP;
        e >>= 1;
    }
    return r;
}

inline std::optional<std::uint64_t> rational_mod_p(const Rational& q) {
    mpz_class n = q.get_num() % static_cast<unsigned long>(kModP);
    mpz_class d = q.get_den() % static_cast<unsigned long>(kModP);
    if (d == 0) return std::nullopt;
    if (n < 0) n += static_cast<unsigned long>(kModP);
    return n.get_ui() * pow_mod(d.get_ui(), kModP - 2) % kModP;
}

}  // namespace detail

/// True when A certainly has full column rank: its reduction modulo a prime does.
/// A false result is inconclusive.
inline bool full_column_rank_mod_p(const Matrix& a) {
    using detail::kModP;
    if (a.rows() < a.cols()) return false;
    static const std::uint64_t imag = detail::pow_mod(3, (kModP - 1) / 4);  // 3 generates the units
    std::vector<std::uint64_t> m(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Scalar& s = a(r, c);
            if (s.is_zero()) continue;
            auto re = detail::rational_mod_p(s.re);
            auto im = detail::rational_mod_p(s.im);
            if (!re || !im) return false;
            m[r * a.cols() + c] = (*re + *im * imag) % kModP;
        }
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::size_t piv = row;
        while (piv < a.rows() && m[piv * a.cols() + c] == 0) ++piv;
        if (piv == a.rows()) return false;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(m[piv * a.cols() + j], m[row * a.cols() + j]);
        std::uint64_t inv = detail::pow_mod(m[row * a.cols() + c], kModP - 2);
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            std::uint64_t f = m[i * a.cols() + c] * inv % kModP;
            if (f == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                m[i * a.cols() + j] = (m[i * a.cols() + j] + kModP - f * m[row * a.cols() + j] % kModP) % kModP;
        }
        ++row;
    }
    return true;
}

/// Kernel basis as in nullspace(), skipping exact elimination when the kernel is provably trivial.
inline std::vector<Vector> nullspace_fast(const Matrix& a) {
    if (full_column_rank_mod_p(a)) return {};
    return nullspace(a);
}

}  // namespace ahodge
