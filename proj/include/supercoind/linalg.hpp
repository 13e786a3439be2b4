#pragma once

// Exact linear algebra over F_p: dense and sparse matrices, reduced row
// echelon forms, nullspaces and subspace comparison.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/field.hpp"

namespace supercoind {

using Vec = std::vector<Fp>;

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Fp x) { return x.is_zero(); });
}

inline Vec unit_vector(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v.at(i) = Fp{1};
    return v;
}

inline void axpy(const Field& f, Vec& y, Fp a, const Vec& x) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: dimension mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(a, x[i]));
}

inline Vec scaled(const Field& f, Fp a, Vec x) {
    for (auto& c : x) c = f.mul(a, c);
    return x;
}

inline Vec added(const Field& f, Vec a, const Vec& b) {
    axpy(f, a, f.one(), b);
    return a;
}

/// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp{1};
        return m;
    }
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("matrix: column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vec row(std::size_t r) const {
        return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    [[nodiscard]] Vec column(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_column(std::size_t c, const Vec& v) {
        if (v.size() != rows_) throw std::invalid_argument("matrix: column length mismatch");
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Fp x) { return x.is_zero(); });
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fp> data_;
};

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix multiply: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Fp aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

inline Vec apply(const Field& f, const Matrix& a, const Vec& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix apply: dimension mismatch");
    Vec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Fp s{};
        for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), x[k]));
        y[i] = s;
    }
    return y;
}

inline Matrix add(const Field& f, Matrix a, const Matrix& b, Fp scale_b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix add: shape mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = f.add(a(r, c), f.mul(scale_b, b(r, c)));
    return a;
}

inline Matrix add(const Field& f, const Matrix& a, const Matrix& b) { return add(f, a, b, f.one()); }

inline Matrix scaled(const Field& f, Fp s, Matrix a) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = f.mul(s, a(r, c));
    return a;
}

inline Matrix power(const Field& f, const Matrix& a, std::uint64_t e) {
    if (!a.is_square()) throw std::invalid_argument("matrix power: non-square matrix");
    Matrix r = Matrix::identity(a.rows());
    Matrix base = a;
    while (e != 0) {
        if ((e & 1U) != 0) r = multiply(f, r, base);
        e >>= 1U;
        if (e != 0) base = multiply(f, base, base);
    }
    return r;
}

/// Coordinate map with no stored zeros.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix from_dense(const Matrix& m) {
        SparseMatrix s(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(r, c).is_zero()) s.entries_[{r, c}] = m(r, c);
        return s;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t nonzeros() const noexcept { return entries_.size(); }

    void set(std::size_t r, std::size_t c, Fp x) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix: index out of range");
        if (x.is_zero())
            entries_.erase({r, c});
        else
            entries_[{r, c}] = x;
    }
    void accumulate(const Field& f, std::size_t r, std::size_t c, Fp x) { set(r, c, f.add(get(r, c), x)); }

    [[nodiscard]] Fp get(std::size_t r, std::size_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Fp{} : it->second;
    }
    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, Fp>& entries() const noexcept { return entries_; }

    [[nodiscard]] Matrix to_dense() const {
        Matrix m(rows_, cols_);
        for (const auto& [rc, x] : entries_) m(rc.first, rc.second) = x;
        return m;
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::map<std::pair<std::size_t, std::size_t>, Fp> entries_;
};

/// In-place reduced row echelon form; pivot is the first nonzero column.
/// Returns the pivot columns, one per nonzero row (zero rows are dropped).
inline std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        Fp inv = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Fp factor = f.neg(m(r, col));
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.add(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(const Field& f, Matrix m) { return rref_in_place(f, m).size(); }
inline std::size_t rank(const Field& f, const SparseMatrix& m) { return rank(f, m.to_dense()); }

inline std::optional<Fp> determinant(const Field& f, Matrix m) {
    if (!m.is_square()) return std::nullopt;
    Fp det = f.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return f.zero();
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
            det = f.neg(det);
        }
        det = f.mul(det, m(col, col));
        Fp inv = f.inv(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            Fp factor = f.neg(f.mul(m(r, col), inv));
            for (std::size_t c = col; c < n; ++c) m(r, c) = f.add(m(r, c), f.mul(factor, m(col, c)));
        }
    }
    return det;
}

inline std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = f.one();
    }
    auto piv = rref_in_place(f, aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

/// Subspace of F_p^ambient stored as the nonzero rows of its RREF.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static SubspaceBasis span(const Field& f, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
        Matrix m(vectors.size(), ambient_dim);
        for (std::size_t r = 0; r < vectors.size(); ++r) {
            if (vectors[r].size() != ambient_dim) throw std::invalid_argument("span: vector length mismatch");
            for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
        }
        auto piv = rref_in_place(f, m);
        SubspaceBasis s(ambient_dim);
        for (std::size_t r = 0; r < piv.size(); ++r) s.vectors_.push_back(m.row(r));
        s.pivots_ = std::move(piv);
        return s;
    }

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return vectors_.size(); }
    [[nodiscard]] const std::vector<Vec>& vectors() const noexcept { return vectors_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Membership by reduction against the echelon rows.
    [[nodiscard]] bool contains(const Field& f, Vec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("subspace contains: dimension mismatch");
        for (std::size_t r = 0; r < vectors_.size(); ++r) {
            Fp c = v[pivots_[r]];
            if (!c.is_zero()) axpy(f, v, f.neg(c), vectors_[r]);
        }
        return supercoind::is_zero(v);
    }

    [[nodiscard]] bool contains(const Field& f, const SubspaceBasis& other) const {
        return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                           [&](const Vec& v) { return contains(f, v); });
    }

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t ambient_;
    std::vector<Vec> vectors_;
    std::vector<std::size_t> pivots_;
};

inline bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_equal: ambient dimensions differ");
    return a.vectors() == b.vectors();
}

/// Echelonized basis of {x : M x = 0}.
inline SubspaceBasis nullspace(const Field& f, Matrix m) {
    auto piv = rref_in_place(f, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec x(n);
        x[free] = f.one();
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = f.neg(m(r, free));
        basis.push_back(std::move(x));
    }
    return SubspaceBasis::span(f, n, basis);
}

inline SubspaceBasis nullspace(const Field& f, const SparseMatrix& m) { return nullspace(f, m.to_dense()); }

/// Sum of even diagonal entries minus sum of odd ones.
inline Fp supertrace(const Field& f, const Matrix& m, std::span<const Parity> parities) {
    if (!m.is_square()) throw std::invalid_argument("supertrace: matrix is not square");
    if (parities.size() != m.rows()) throw std::invalid_argument("supertrace: parity list does not match dimension");
    Fp s{};
    for (std::size_t i = 0; i < m.rows(); ++i) s = is_odd(parities[i]) ? f.sub(s, m(i, i)) : f.add(s, m(i, i));
    return s;
}

inline Fp supertrace(const Field& f, const SparseMatrix& m, std::span<const Parity> parities) {
    return supertrace(f, m.to_dense(), parities);
}

/// Parity of a homogeneous operator on a graded space, or nullopt if mixed.
/// The zero operator reports even.
inline std::optional<Parity> operator_parity(const Matrix& m, std::span<const Parity> row_par,
                                             std::span<const Parity> col_par) {
    bool has_even = false;
    bool has_odd = false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero()) continue;
            if (row_par[r] == col_par[c])
                has_even = true;
            else
                has_odd = true;
        }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? Parity::odd : Parity::even;
}

/// Super commutator [A, B] = AB - (-1)^{|A||B|} BA.
inline Matrix supercommutator(const Field& f, const Matrix& a, Parity pa, const Matrix& b, Parity pb) {
    Matrix ab = multiply(f, a, b);
    Matrix ba = multiply(f, b, a);
    return add(f, ab, ba, koszul_flip(pa, pb) ? f.one() : f.neg(f.one()));
}

}  // namespace supercoind
