#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

namespace ncroots {

/// Verdict on whether a monic x^n + a_{n-1} x^{n-1} + ... + a_0 with two
/// prescribed right roots exists over a matrix ring.
template <class F>
struct CriterionReport {
    std::size_t n = 2;
    /// rank(x1 - x2) for n = 2; rank of the stacked differences x1^i - x2^i otherwise.
    std::size_t rank_difference_matrix = 0;
    /// Same, with x2^n - x1^n stacked below.
    std::size_t rank_augmented = 0;
    bool exists = false;
    std::optional<std::vector<Matrix<F>>> coefficients;  // a_1 .. a_{n-1}
    std::optional<Matrix<F>> a0;
    std::size_t solution_space_dim = 0;

    std::optional<Polynomial<Matrix<F>>> polynomial() const {
        if (!exists) return std::nullopt;
        std::vector<Matrix<F>> cs{*a0};
        cs.insert(cs.end(), coefficients->begin(), coefficients->end());
        cs.push_back(a0->ring().one());
        return Polynomial<Matrix<F>>(a0->ring(), std::move(cs));
    }
};

namespace detail {

template <ring_element R>
void require_distinct_roots(const R& x1, const R& x2) {
    if (!(x1.ring() == x2.ring())) throw ring_mismatch("roots from different rings");
    if (x1 == x2) throw equal_roots("the two prescribed roots must differ");
}

template <ring_element R>
Polynomial<R> monic_polynomial(std::span<const R> coefficients, const R& a0) {
    std::vector<R> cs{a0};
    cs.insert(cs.end(), coefficients.begin(), coefficients.end());
    cs.push_back(a0.ring().one());
    return Polynomial<R>(a0.ring(), std::move(cs));
}

}  // namespace detail

/// a0 = -sum a_i x1^i - x1^n, checked against the same expression in x2.
/// Throws inconsistent_result when the two disagree, i.e. when the
/// coefficients do not solve the subtracted equation for (x1, x2).
template <ring_element R>
R compute_a0(std::span<const R> coefficients, const R& x1, const R& x2, std::size_t n) {
    if (n < 1 || coefficients.size() != n - 1)
        throw std::invalid_argument("compute_a0 expects a_1..a_{n-1}: " + std::to_string(n - 1) + " coefficients");
    auto from_root = [&](const R& x) {
        R acc = -ring_pow(x, n);
        R power = x;
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            acc = acc - coefficients[i] * power;
            power = power * x;
        }
        return acc;
    };
    R first = from_root(x1);
    if (!(first == from_root(x2))) throw inconsistent_result("a0 differs between the two roots");
    return first;
}

template <ring_element R>
R compute_a0(const std::vector<R>& coefficients, const R& x1, const R& x2, std::size_t n) {
    return compute_a0(std::span<const R>(coefficients), x1, x2, n);
}

namespace detail {

// Fills coefficients, a0 and dimension from a solver outcome and re-checks the
// resulting polynomial at both roots.
template <class F>
CriterionReport<F> finish_report(CriterionReport<F> report, const SolveOutcome<F>& solved, const Matrix<F>& x1,
                                 const Matrix<F>& x2) {
    if (solved.consistent != report.exists)
        throw inconsistent_result("stacked-rank verdict and row-system solver disagree");
    if (!report.exists) return report;
    report.coefficients = *solved.particular;
    report.a0 = compute_a0(std::span<const Matrix<F>>(*report.coefficients), x1, x2, report.n);
    report.solution_space_dim = solved.nullspace_dim;
    const auto p = *report.polynomial();
    if (!evaluate_right(p, x1).is_zero() || !evaluate_right(p, x2).is_zero())
        throw inconsistent_result("constructed polynomial does not annihilate both roots");
    return report;
}

}  // namespace detail

/// Monic quadratic x^2 + a1 x + a0 with roots x1, x2 exists iff
/// rank(x1 - x2) equals the rank of x1 - x2 with x2^2 - x1^2 stacked below.
/// a1 then solves a1 (x1 - x2) = x2^2 - x1^2 (free variables zero).
template <class F>
CriterionReport<F> quadratic_existence(const Matrix<F>& x1, const Matrix<F>& x2) {
    detail::require_distinct_roots(x1, x2);
    const Matrix<F> diff = x1 - x2;
    const Matrix<F> rhs = x2 * x2 - x1 * x1;

    CriterionReport<F> report;
    report.n = 2;
    report.rank_difference_matrix = rank(diff);
    report.rank_augmented = rank(stack_rows(diff, rhs));
    report.exists = report.rank_difference_matrix == report.rank_augmented;
    return detail::finish_report(std::move(report), solve_xa_eq_b(diff, rhs), x1, x2);
}

/// As quadratic_existence but with a caller-chosen a1, which must satisfy
/// a1 (x1 - x2) = x2^2 - x1^2.
template <class F>
CriterionReport<F> quadratic_from_a1(const Matrix<F>& x1, const Matrix<F>& x2, const Matrix<F>& a1) {
    detail::require_distinct_roots(x1, x2);
    if (!(a1.ring() == x1.ring())) throw ring_mismatch("a1 outside the ring of the roots");
    const Matrix<F> diff = x1 - x2;
    const Matrix<F> rhs = x2 * x2 - x1 * x1;
    if (!(a1 * diff == rhs)) throw std::invalid_argument("a1 does not satisfy a1 (x1 - x2) = x2^2 - x1^2");

    CriterionReport<F> report;
    report.n = 2;
    report.rank_difference_matrix = rank(diff);
    report.rank_augmented = rank(stack_rows(diff, rhs));
    report.exists = true;
    auto solved = solve_xa_eq_b(diff, rhs);
    solved.particular = std::vector<Matrix<F>>{a1};
    return detail::finish_report(std::move(report), solved, x1, x2);
}

/// Existence of monic degree-n polynomials with roots x1, x2. Subtracting the
/// two root equations leaves sum_{i=1}^{n-1} a_i (x1^i - x2^i) = x2^n - x1^n,
/// solved jointly in all a_i; a0 follows from either root.
template <class F>
CriterionReport<F> degree_n_existence(const Matrix<F>& x1, const Matrix<F>& x2, std::size_t n) {
    if (n < 2) throw std::invalid_argument("degree_n_existence needs n >= 2");
    detail::require_distinct_roots(x1, x2);

    std::vector<Matrix<F>> blocks;
    Matrix<F> p1 = x1;
    Matrix<F> p2 = x2;
    for (std::size_t i = 1; i < n; ++i) {
        blocks.push_back(p1 - p2);
        p1 = p1 * x1;
        p2 = p2 * x2;
    }
    const Matrix<F> rhs = p2 - p1;

    Matrix<F> stacked = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i) stacked = stack_rows(stacked, blocks[i]);

    CriterionReport<F> report;
    report.n = n;
    report.rank_difference_matrix = rank(stacked);
    report.rank_augmented = rank(stack_rows(stacked, rhs));
    report.exists = report.rank_difference_matrix == report.rank_augmented;
    return detail::finish_report(std::move(report), solve_stacked(std::span<const Matrix<F>>(blocks), rhs), x1, x2);
}

/// Explicit construction from an invertible power difference: with j the
/// smallest index in 1..n-1 such that x1^j - x2^j is a unit,
///   a_j = (x2^n - x1^n - sum_{i != j} a_i (x1^i - x2^i)) (x1^j - x2^j)^-1.
/// `free_coefficients` gives a_1..a_{n-1} (entry j ignored); empty means zero.
/// Returns nullopt when no power difference is invertible.
template <ring_element R>
std::optional<Polynomial<R>> theorem3_construct(const R& x1, const R& x2, std::size_t n,
                                                std::span<const R> free_coefficients = {}) {
    if (n < 2) throw std::invalid_argument("theorem3_construct needs n >= 2");
    detail::require_distinct_roots(x1, x2);
    if (!free_coefficients.empty() && free_coefficients.size() != n - 1)
        throw std::invalid_argument("free_coefficients must list a_1..a_{n-1}");

    const auto ring = x1.ring();
    std::vector<R> coeffs = free_coefficients.empty() ? std::vector<R>(n - 1, ring.zero())
                                                      : std::vector<R>(free_coefficients.begin(), free_coefficients.end());
    for (const auto& c : coeffs)
        if (!(c.ring() == ring)) throw ring_mismatch("free coefficient outside the ring of the roots");

    std::vector<R> diffs;
    R p1 = x1;
    R p2 = x2;
    for (std::size_t i = 1; i < n; ++i) {
        diffs.push_back(p1 - p2);
        p1 = p1 * x1;
        p2 = p2 * x2;
    }
    const R rhs = p2 - p1;

    for (std::size_t j = 0; j < diffs.size(); ++j) {
        auto inv = invert(diffs[j]);
        if (!inv) continue;
        R acc = rhs;
        for (std::size_t i = 0; i < diffs.size(); ++i)
            if (i != j) acc = acc - coeffs[i] * diffs[i];
        coeffs[j] = acc * *inv;
        const R a0 = compute_a0(std::span<const R>(coeffs), x1, x2, n);
        return detail::monic_polynomial(std::span<const R>(coeffs), a0);
    }
    return std::nullopt;
}

template <ring_element R>
std::optional<Polynomial<R>> theorem3_construct(const R& x1, const R& x2, std::size_t n,
                                                const std::vector<R>& free_coefficients) {
    return theorem3_construct(x1, x2, n, std::span<const R>(free_coefficients));
}

}  // namespace ncroots
