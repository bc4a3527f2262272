#ifndef PARTINT_LINALG_HPP
#define PARTINT_LINALG_HPP

// Dense exact matrices over Fp or Rational.  Elimination pivots on the first
// nonzero entry in column order, so results never depend on entry magnitudes.

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partint/scalars.hpp"

namespace partint {

class SingularSystem : public std::runtime_error
{
  public:
    explicit SingularSystem(std::size_t rank, std::size_t order)
        : std::runtime_error("singular system: rank " + std::to_string(rank) +
                             " < order " + std::to_string(order)),
          rank_(rank)
    {
    }
    std::size_t rank() const { return rank_; }

  private:
    std::size_t rank_;
};

template <class T>
class Matrix
{
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t order, const T& proto)
    {
        Matrix m(order, order, like(proto, 0));
        for (std::size_t i = 0; i < order; ++i)
            m(i, i) = like(proto, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    // The first appended row fixes the column count of an empty matrix.
    void append_row(std::span<const T> values)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = values.size();
        if (values.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    void append_rows(const Matrix& other)
    {
        for (std::size_t r = 0; r < other.rows(); ++r)
            append_row(other.row(r));
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return Matrix<T>();
    Matrix<T> t(m.cols(), m.rows(), m(0, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            t(c, r) = m(r, c);
    return t;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimension mismatch");
    if (a.rows() == 0 || b.cols() == 0)
        return Matrix<T>();
    if (a.cols() == 0)
        throw std::invalid_argument("multiply: zero inner dimension has no field prototype");
    const T zero = like(a(0, 0), 0);
    Matrix<T> out(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& a, std::span<const T> x)
{
    if (a.cols() != x.size())
        throw std::invalid_argument("multiply: vector length mismatch");
    if (a.cols() == 0 && a.rows() != 0)
        throw std::invalid_argument("multiply: zero-column matrix has no field prototype");
    std::vector<T> out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        T acc = like(x[0], 0);
        for (std::size_t k = 0; k < a.cols(); ++k)
            acc += a(i, k) * x[k];
        out.push_back(acc);
    }
    return out;
}

// In-place reduction to row echelon form.  Returns the pivot column of each
// nonzero row, in order; its size is the rank.
template <class T>
std::vector<std::size_t> row_echelon(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        const T inv = inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c)))
                continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
    return row_echelon(m).size();
}

template <class T>
std::size_t nullspace_dim(const Matrix<T>& m)
{
    return m.cols() - rank(m);
}

// A particular solution of M x = rhs, or nullopt when inconsistent.  Free
// variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve_any(const Matrix<T>& m, std::span<const T> rhs)
{
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    if (m.rows() == 0)
        return std::vector<T>();
    const T zero = like(m(0, 0), 0);
    Matrix<T> aug(m.rows(), m.cols() + 1, zero);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto pivots = row_echelon(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    std::vector<T> x(m.cols(), zero);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        T v = aug(k, m.cols());
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (!is_zero(aug(k, j)))
                v -= aug(k, j) * x[j];
        x[c] = v;
    }
    return x;
}

// Unique solution of a square system.  Throws SingularSystem when rank < order.
template <class T>
std::vector<T> solve_square(const Matrix<T>& m, std::span<const T> rhs)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("solve_square: matrix is not square");
    const std::size_t r = rank(m);
    if (r < m.rows())
        throw SingularSystem(r, m.rows());
    return *solve_any(m, rhs);
}

} // namespace partint

#endif
