#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace weightvar {

/// Dense row-major matrix of exact rationals.
class rational_matrix {
public:
    rational_matrix() = default;
    rational_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static rational_matrix identity(std::size_t n) {
        rational_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<rational> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void append_row(const std::vector<rational>& r) {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw error(errc::dimension_mismatch, "row length does not match column count");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    rational_matrix transpose() const {
        rational_matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend rational_matrix operator*(const rational_matrix& a, const rational_matrix& b) {
        if (a.cols_ != b.rows_)
            throw error(errc::dimension_mismatch, "matrix product shape mismatch");
        rational_matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const rational_matrix&, const rational_matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<rational> data_;
};

/// Gauss-Jordan inverse; throws dimension_mismatch for singular or non-square input.
inline rational_matrix inverse(const rational_matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw error(errc::dimension_mismatch, "inverse of a non-square matrix");
    rational_matrix a = m;
    rational_matrix inv = rational_matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0)
            ++piv;
        if (piv == n)
            throw error(errc::dimension_mismatch, "matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0)
                continue;
            rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Basis of {x : m x = 0}, one vector per free column of the reduced row echelon form.
inline std::vector<std::vector<rational>> nullspace(const rational_matrix& m) {
    rational_matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(a(piv, j), a(r, j));
        rational p = a(r, c);
        for (std::size_t j = 0; j < cols; ++j)
            a(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
            continue;
        std::vector<rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Thrown by the fixed-width arithmetic path; callers retry with `integer`.
struct arithmetic_overflow : std::overflow_error {
    arithmetic_overflow() : std::overflow_error("int64 overflow in exact elimination") {}
};

namespace detail {

template <class T>
struct exact_ops;

template <>
struct exact_ops<std::int64_t> {
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw arithmetic_overflow();
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            throw arithmetic_overflow();
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) {
        if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min())
            throw arithmetic_overflow();
        return std::gcd(a, b);
    }
    static std::int64_t from(const integer& v) {
        if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
            throw arithmetic_overflow();
        return static_cast<std::int64_t>(v);
    }
};

template <>
struct exact_ops<integer> {
    static integer mul(const integer& a, const integer& b) { return a * b; }
    static integer sub(const integer& a, const integer& b) { return a - b; }
    static integer gcd(const integer& a, const integer& b) { return boost::multiprecision::gcd(a, b); }
    static integer from(const integer& v) { return v; }
};

} // namespace detail

/// Incrementally maintained row echelon basis over the integers.
///
/// Rows are kept primitive (content 1) and sorted by pivot column; each
/// stored row is zero left of its pivot and no two rows share a pivot.
/// Rank over Z-rows equals rank over Q, so this is the exact rank of the
/// inserted rows. With T = int64_t every operation is overflow-checked.
template <class T>
class row_space {
public:
    explicit row_space(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<std::vector<T>>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Reduces `row` against the basis; keeps it when independent.
    bool insert(std::vector<T> row) {
        using ops = detail::exact_ops<T>;
        if (row.size() != cols_)
            throw error(errc::dimension_mismatch, "row_space: row length mismatch");
        if (!normalize(row))
            return false;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (row[p] == 0)
                continue;
            const auto& b = rows_[k];
            T g = ops::gcd(b[p], row[p]);
            T fr = b[p] / g;
            T fb = row[p] / g;
            for (std::size_t j = p; j < cols_; ++j) {
                if (b[j] == 0) {
                    if (row[j] != 0)
                        row[j] = ops::mul(row[j], fr);
                } else {
                    row[j] = ops::sub(ops::mul(row[j], fr), ops::mul(b[j], fb));
                }
            }
            for (std::size_t j = 0; j < p; ++j)
                if (row[j] != 0)
                    row[j] = ops::mul(row[j], fr);
            if (!normalize(row))
                return false;
        }
        std::size_t piv = 0;
        while (row[piv] == 0)
            ++piv;
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
        auto idx = pos - pivots_.begin();
        pivots_.insert(pos, piv);
        rows_.insert(rows_.begin() + idx, std::move(row));
        return true;
    }

private:
    // Divides out the content; returns false for the zero row.
    static bool normalize(std::vector<T>& row) {
        using ops = detail::exact_ops<T>;
        T g = 0;
        std::size_t first = row.size();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0)
                continue;
            if (first == row.size())
                first = j;
            T a = row[j] < 0 ? T(-row[j]) : row[j];
            g = g == 0 ? a : ops::gcd(g, a);
            if (g == 1)
                break;
        }
        if (first == row.size())
            return false;
        if (row[first] < 0)
            g = -g;
        if (g != 1)
            for (auto& x : row)
                x /= g;
        return true;
    }

    std::size_t cols_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Multiplies a rational row through by the lcm of its denominators.
inline std::vector<integer> clear_denominators(const std::vector<rational>& row) {
    integer l = 1;
    for (const auto& q : row)
        if (q != 0)
            l = boost::multiprecision::lcm(l, denominator(q));
    std::vector<integer> out;
    out.reserve(row.size());
    for (const auto& q : row)
        out.push_back(numerator(q) * (l / denominator(q)));
    return out;
}

namespace detail {

template <class T>
std::size_t integer_rank(const std::vector<std::vector<integer>>& rows, std::size_t cols) {
    row_space<T> space(cols);
    for (const auto& r : rows) {
        std::vector<T> row;
        row.reserve(r.size());
        for (const auto& x : r)
            row.push_back(exact_ops<T>::from(x));
        space.insert(std::move(row));
        if (space.rank() == cols)
            break;
    }
    return space.rank();
}

} // namespace detail

/// Exact rank of integer rows: fixed-width first, arbitrary precision on overflow.
inline std::size_t integer_rank(const std::vector<std::vector<integer>>& rows, std::size_t cols) {
    try {
        return detail::integer_rank<std::int64_t>(rows, cols);
    } catch (const arithmetic_overflow&) {
        return detail::integer_rank<integer>(rows, cols);
    }
}

/// Exact rank via fraction-free elimination.
inline std::size_t rank_over_q(const rational_matrix& m) {
    std::vector<std::vector<integer>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(clear_denominators(m.row(i)));
    return integer_rank(rows, m.cols());
}

} // namespace weightvar
