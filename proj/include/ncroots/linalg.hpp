#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace ncroots {

template <class F>
struct RrefResult {
    Matrix<F> rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. The pivot for each column is the first nonzero
/// entry at or below the current pivot row; no other pivoting.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col).is_zero()) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));

        const F scale = *invert(m(pivot_row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) = scale * m(pivot_row, j);

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col).is_zero()) continue;
            const F factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    const std::size_t rank = pivots.size();
    return {std::move(m), rank, std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Basis of {v : m v = 0}, one column vector per free column of rref(m).
template <class F>
std::vector<Matrix<F>> nullspace_basis(const Matrix<F>& m) {
    const auto reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : reduced.pivot_columns) is_pivot[c] = true;

    std::vector<Matrix<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Matrix<F> v(m.cols(), 1, m.field());
        v(free, 0) = m.field().one();
        for (std::size_t r = 0; r < reduced.rank; ++r) v(reduced.pivot_columns[r], 0) = -reduced.rref(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Outcome of a left-multiplied matrix equation sum_j X_j A_j = B.
template <class F>
struct SolveOutcome {
    bool consistent = false;
    /// One matrix per unknown X_j, free variables set to zero.
    std::optional<std::vector<Matrix<F>>> particular;
    /// Free field parameters of the full solution set (all rows, all blocks).
    std::size_t nullspace_dim = 0;
    std::size_t coefficient_rank = 0;
    std::size_t augmented_rank = 0;
};

/// Solves sum_j X_j A_j = B for k x k unknowns X_j as one linear system.
///
/// Row i of the equation reads u_i S = b_i where S stacks the blocks A_j
/// vertically and u_i concatenates row i of every X_j (X_1 first). All k row
/// systems share S, so they are reduced together as S^T U = B^T; consistency is
/// the Kronecker-Capelli test rank(S^T) = rank(S^T | B^T).
template <class F>
SolveOutcome<F> solve_stacked(std::span<const Matrix<F>> blocks, const Matrix<F>& rhs) {
    if (blocks.empty()) throw std::invalid_argument("solve_stacked needs at least one block");
    const std::size_t k = rhs.rows();
    if (!rhs.is_square()) throw ring_mismatch("right-hand side must be square");
    Matrix<F> stacked = blocks.front();
    for (const auto& b : blocks) {
        if (b.rows() != k || b.cols() != k) throw ring_mismatch("block shape " + b.shape() + " differs from rhs");
        if (!(b.field() == rhs.field())) throw ring_mismatch("block over a different field");
    }
    for (std::size_t j = 1; j < blocks.size(); ++j) stacked = stack_rows(stacked, blocks[j]);

    const std::size_t unknowns = stacked.rows();
    const auto reduced = rref(join_columns(stacked.transpose(), rhs.transpose()));

    SolveOutcome<F> out;
    for (auto c : reduced.pivot_columns)
        if (c < unknowns) ++out.coefficient_rank;
    out.augmented_rank = reduced.rank;
    out.consistent = out.coefficient_rank == out.augmented_rank;
    out.nullspace_dim = k * (unknowns - out.coefficient_rank);
    if (!out.consistent) return out;

    std::vector<Matrix<F>> xs(blocks.size(), Matrix<F>(k, k, rhs.field()));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < reduced.rank; ++r) {
            const std::size_t var = reduced.pivot_columns[r];
            xs[var / k](i, var % k) = reduced.rref(r, unknowns + i);
        }
    }
    out.particular = std::move(xs);
    return out;
}

/// Solves X a = b row by row.
template <class F>
SolveOutcome<F> solve_xa_eq_b(const Matrix<F>& a, const Matrix<F>& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw ring_mismatch("solve_xa_eq_b needs square operands of equal size");
    return solve_stacked(std::span<const Matrix<F>>(&a, 1), b);
}

/// Inverse via Gauss-Jordan on [m | I]; nullopt when rank < k.
template <class F>
std::optional<Matrix<F>> invert(const Matrix<F>& m) {
    if (!m.is_square()) throw ring_mismatch("only square matrices can be inverted");
    const std::size_t k = m.rows();
    const auto reduced = rref(join_columns(m, Matrix<F>::identity(k, m.field())));
    if (reduced.rank < k || (k > 0 && reduced.pivot_columns[k - 1] >= k)) return std::nullopt;
    Matrix<F> inv(k, k, m.field());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) inv(i, j) = reduced.rref(i, k + j);
    return inv;
}

}  // namespace ncroots
