#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncroots.hpp"

namespace ncroots::testing {

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Zp>;

inline const RationalField Q{};

inline QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) { return QMatrix::from_ints(Q, rows); }
inline PMatrix pm(const PrimeField& f, std::initializer_list<std::initializer_list<long>> rows) {
    return PMatrix::from_ints(f, rows);
}

// Matrix pairs used throughout the worked examples (first example at alpha = 1, beta = 2).
struct Pair {
    QMatrix x1;
    QMatrix x2;
};
inline Pair nilpotent_pair() { return {qm({{0, 1}, {0, 0}}), qm({{0, 2}, {0, 0}})}; }
inline Pair identity_swap_pair() { return {qm({{1, 0}, {0, 1}}), qm({{0, 1}, {1, 0}})}; }
inline Pair singular_gap_pair() { return {qm({{0, 0}, {1, -1}}), qm({{0, 0}, {0, 1}})}; }
inline Pair cubic_obstruction_pair() {
    return {qm({{1, -1, 0}, {-1, 1, 0}, {1, 0, 0}}), qm({{1, 1, 2}, {-1, 1, 0}, {1, 0, 0}})};
}

class Random {
   public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long bound = 5) {
        const long den = integer(1, 4);
        return Rational(mpz_class(integer(-bound, bound)), mpz_class(den));
    }

    Quaternion quaternion(long bound = 5) { return {rational(bound), rational(bound), rational(bound), rational(bound)}; }

    Quaternion nonzero_quaternion(long bound = 5) {
        for (;;) {
            auto q = quaternion(bound);
            if (!q.is_zero()) return q;
        }
    }

    QMatrix rational_matrix(std::size_t k, long bound = 3, bool integral = true) {
        QMatrix m(k, k, Q);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = integral ? Rational(integer(-bound, bound)) : rational(bound);
        return m;
    }

    QMatrix rectangular(std::size_t r, std::size_t c, long bound = 3) {
        QMatrix m(r, c, Q);
        for (auto i = 0u; i < r; ++i)
            for (auto j = 0u; j < c; ++j) m(i, j) = Rational(integer(-bound, bound));
        return m;
    }

    PMatrix prime_matrix(std::size_t r, std::size_t c, const PrimeField& f) {
        PMatrix m(r, c, f);
        for (auto i = 0u; i < r; ++i)
            for (auto j = 0u; j < c; ++j) m(i, j) = f.element(integer(0, static_cast<long>(f.modulus()) - 1));
        return m;
    }

    template <class Gen>
    auto polynomial(std::size_t max_degree, Gen&& element) {
        using R = decltype(element());
        const auto deg = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
        std::vector<R> cs;
        for (std::size_t i = 0; i <= deg; ++i) cs.push_back(element());
        return Polynomial<R>(cs.front().ring(), cs);
    }

    std::mt19937_64& engine() { return gen_; }

   private:
    std::mt19937_64 gen_;
};

/// Literal sum a_i a^i with explicit powers, independent of the Horner path.
template <ring_element R>
R power_sum(const Polynomial<R>& p, const R& a) {
    R acc = p.ring().zero();
    const auto cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) acc = acc + cs[i] * ring_pow(a, i);
    return acc;
}

/// Theorem-4 style decision: column systems (x1 - x2)^T q_i = b_i with b_i the
/// columns of (x2^T)^2 - (x1^T)^2, each checked by its own rank comparison.
template <class F>
bool transposed_column_criterion(const Matrix<F>& x1, const Matrix<F>& x2) {
    const auto a = (x1 - x2).transpose();
    const auto t1 = x1.transpose();
    const auto t2 = x2.transpose();
    const auto b = t2 * t2 - t1 * t1;
    const auto ra = rank(a);
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Matrix<F> col(b.rows(), 1, b.field());
        for (std::size_t r = 0; r < b.rows(); ++r) col(r, 0) = b(r, c);
        if (rank(join_columns(a, col)) != ra) return false;
    }
    return true;
}

}  // namespace ncroots::testing
