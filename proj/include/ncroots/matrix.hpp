#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "descriptors.hpp"
#include "errors.hpp"

namespace ncroots {

template <class F>
class Matrix;

/// The ring of k x k matrices over a field.
template <class Field>
struct MatrixRing {
    using element_type = Matrix<typename Field::element_type>;

    std::size_t k;
    Field field;

    element_type zero() const { return element_type(k, k, field); }
    element_type one() const { return element_type::identity(k, field); }
    RingDescriptor descriptor() const { return RingDescriptor::matrix(k, field.descriptor()); }

    bool operator==(const MatrixRing&) const = default;
};

/// Dense row-major matrix over an exact field. Any shape is allowed; only
/// square matrices are ring elements.
template <class F>
class Matrix {
   public:
    using scalar_type = F;
    using field_type = typename F::ring_type;
    using ring_type = MatrixRing<field_type>;

    Matrix(std::size_t rows, std::size_t cols, const field_type& field)
        : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, field.zero()) {}

    Matrix(std::size_t rows, std::size_t cols, const field_type& field, std::vector<F> entries)
        : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
        if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
        for (const auto& e : entries_)
            if (!(e.ring() == field_)) throw ring_mismatch("matrix entry from a different field");
    }

    static Matrix identity(std::size_t k, const field_type& field) {
        Matrix m(k, k, field);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = field.one();
        return m;
    }

    /// Build from small integer literals, mapped into the field.
    static Matrix from_ints(const field_type& field, std::initializer_list<std::initializer_list<long>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<F> entries;
        entries.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
            for (long v : row) entries.push_back(field.element(v));
        }
        return Matrix(r, c, field, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const field_type& field() const { return field_; }
    const std::vector<F>& entries() const { return entries_; }

    F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ring_type ring() const {
        if (!is_square()) throw ring_mismatch("non-square matrix is not a ring element");
        return {rows_, field_};
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix row(std::size_t i) const {
        return Matrix(1, cols_, field_,
                      std::vector<F>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& e : r.entries_) e = -e;
        return r;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
        return *this;
    }
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!(a.field_ == b.field_)) throw ring_mismatch("matrix product over different fields");
        if (a.cols_ != b.rows_)
            throw ring_mismatch("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
        Matrix c(a.rows_, b.cols_, a.field_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const F& ail = a(i, l);
                if (ail.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
            }
        return c;
    }

    friend Matrix operator*(const F& s, Matrix m) {
        for (auto& e : m.entries_) e = s * e;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

   private:
    void check_same_shape(const Matrix& rhs) const {
        if (!(field_ == rhs.field_)) throw ring_mismatch("matrix sum over different fields");
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw ring_mismatch("matrix sum shape mismatch: " + shape() + " vs " + rhs.shape());
    }

    std::size_t rows_;
    std::size_t cols_;
    field_type field_;
    std::vector<F> entries_;
};

/// Rows of `top` followed by rows of `bottom`.
template <class F>
Matrix<F> stack_rows(const Matrix<F>& top, const Matrix<F>& bottom) {
    if (top.cols() != bottom.cols()) throw ring_mismatch("stacked matrices differ in column count");
    if (!(top.field() == bottom.field())) throw ring_mismatch("stacked matrices over different fields");
    std::vector<F> entries = top.entries();
    entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix<F>(top.rows() + bottom.rows(), top.cols(), top.field(), std::move(entries));
}

/// Columns of `left` followed by columns of `right`.
template <class F>
Matrix<F> join_columns(const Matrix<F>& left, const Matrix<F>& right) {
    if (left.rows() != right.rows()) throw ring_mismatch("joined matrices differ in row count");
    if (!(left.field() == right.field())) throw ring_mismatch("joined matrices over different fields");
    Matrix<F> m(left.rows(), left.cols() + right.cols(), left.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
    }
    return m;
}

}  // namespace ncroots
