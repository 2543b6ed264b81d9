#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "descriptors.hpp"
#include "errors.hpp"
#include "existence.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"

namespace ncroots {

inline constexpr std::uint64_t default_enumeration_cap = 65536;

namespace detail {

// b^e, or nullopt once it exceeds `limit`.
inline std::optional<std::uint64_t> bounded_pow(std::uint64_t b, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > limit / b) return std::nullopt;
        r *= b;
    }
    if (r > limit) return std::nullopt;
    return r;
}

}  // namespace detail

/// All k x k matrices over F_p, indexed by reading the entries row-major as
/// base-p digits (entry (0,0) least significant).
class FiniteRingEnumeration {
   public:
    FiniteRingEnumeration(const RingDescriptor& descriptor, std::uint64_t cap = default_enumeration_cap)
        : descriptor_(descriptor), field_(check(descriptor)) {
        auto n = detail::bounded_pow(descriptor.field.p, descriptor.k * descriptor.k, cap);
        if (!n) throw enumeration_limit(descriptor.to_string() + " has more than " + std::to_string(cap) + " elements");
        size_ = *n;
    }

    const RingDescriptor& descriptor() const { return descriptor_; }
    const PrimeField& field() const { return field_; }
    std::uint64_t size() const { return size_; }

    Matrix<Zp> at(std::uint64_t index) const {
        const std::size_t k = descriptor_.k;
        const auto p = field_.modulus();
        Matrix<Zp> m(k, k, field_);
        for (std::size_t e = 0; e < k * k; ++e) {
            m(e / k, e % k) = field_.element(static_cast<long>(index % p));
            index /= p;
        }
        return m;
    }

    std::vector<Matrix<Zp>> all() const {
        std::vector<Matrix<Zp>> out;
        out.reserve(size_);
        for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
        return out;
    }

   private:
    static PrimeField check(const RingDescriptor& d) {
        if (d.kind != RingDescriptor::Kind::matrix || d.field.kind != FieldDescriptor::Kind::prime)
            throw enumeration_limit("only matrix rings over prime fields are finite: " + d.to_string());
        if (d.k == 0) throw std::invalid_argument("matrix ring needs k >= 1");
        return PrimeField(d.field.p);
    }

    RingDescriptor descriptor_;
    PrimeField field_;
    std::uint64_t size_ = 0;
};

inline FiniteRingEnumeration enumerate_ring(const RingDescriptor& descriptor,
                                            std::uint64_t cap = default_enumeration_cap) {
    return FiniteRingEnumeration(descriptor, cap);
}

struct BruteForceWitness {
    std::vector<Matrix<Zp>> coefficients;  // a_1 .. a_{n-1}
    Matrix<Zp> a0;
};

struct BruteForceResult {
    bool exists = false;
    std::optional<BruteForceWitness> witness;  // first annihilating tuple found
    /// Number of (a_1..a_{n-1}) tuples that extend to an annihilating polynomial.
    std::uint64_t count = 0;
};

/// Exhaustive search for monic x^n + ... + a_0 with x1, x2 as right roots.
///
/// Every tuple (a_1..a_{n-1}) of ring elements is tried; a0 is the unique
/// value making x1 a root, and the tuple counts when the full polynomial also
/// vanishes at x2. No linear algebra is involved.
inline BruteForceResult brute_force_exists(const Matrix<Zp>& x1, const Matrix<Zp>& x2, std::size_t n,
                                           const FiniteRingEnumeration& ring,
                                           std::uint64_t cap = default_enumeration_cap) {
    if (n < 2) throw std::invalid_argument("brute_force_exists needs n >= 2");
    if (!(x1.ring().descriptor() == ring.descriptor()) || !(x2.ring().descriptor() == ring.descriptor()))
        throw ring_mismatch("roots are not in the enumerated ring");
    if (!detail::bounded_pow(ring.size(), n - 1, cap))
        throw enumeration_limit("brute force over " + std::to_string(n - 1) + " coefficients exceeds cap");

    const auto elements = ring.all();
    const auto one = x1.ring().one();
    std::vector<Matrix<Zp>> x1_powers{one};
    for (std::size_t i = 1; i <= n; ++i) x1_powers.push_back(x1_powers.back() * x1);

    BruteForceResult result;
    std::vector<std::size_t> digits(n - 1, 0);
    while (true) {
        std::vector<Matrix<Zp>> coeffs;
        coeffs.reserve(n + 1);
        Matrix<Zp> a0 = -x1_powers[n];
        for (std::size_t i = 0; i + 1 < n; ++i) a0 -= elements[digits[i]] * x1_powers[i + 1];
        coeffs.push_back(a0);
        for (std::size_t i = 0; i + 1 < n; ++i) coeffs.push_back(elements[digits[i]]);
        coeffs.push_back(one);
        const Polynomial<Matrix<Zp>> p(x1.ring(), coeffs);
        if (evaluate_right(p, x1).is_zero() && evaluate_right(p, x2).is_zero()) {
            if (!result.exists) {
                result.exists = true;
                result.witness = BruteForceWitness{
                    std::vector<Matrix<Zp>>(coeffs.begin() + 1, coeffs.end() - 1), a0};
            }
            ++result.count;
        }

        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == elements.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return result;
}

struct PairRecord {
    std::uint64_t x1_index;
    std::uint64_t x2_index;
    Matrix<Zp> x1;
    Matrix<Zp> x2;
    bool criterion_exists;
    bool brute_force_exists;
    std::uint64_t brute_force_count;
    std::size_t solution_space_dim;
    /// count == p^solution_space_dim (checked only when both verdicts say yes).
    bool count_matches_dimension;

    bool agrees() const { return criterion_exists == brute_force_exists && count_matches_dimension; }
};

struct CrossCheckReport {
    RingDescriptor descriptor;
    std::size_t n = 2;
    std::uint64_t pairs = 0;
    std::uint64_t pairs_with_polynomial = 0;
    std::vector<PairRecord> disagreements;
};

/// Compares the rank criterion with exhaustive search on every ordered pair of
/// distinct elements. `on_pair`, when set, sees each record in enumeration order.
inline CrossCheckReport cross_check_criterion(const RingDescriptor& descriptor, std::size_t n,
                                              const std::function<void(const PairRecord&)>& on_pair = {},
                                              std::uint64_t cap = default_enumeration_cap) {
    const FiniteRingEnumeration ring(descriptor, cap);
    const auto elements = ring.all();
    const std::uint64_t p = ring.field().modulus();

    CrossCheckReport report{descriptor, n, 0, 0, {}};
    for (std::uint64_t i = 0; i < elements.size(); ++i) {
        for (std::uint64_t j = 0; j < elements.size(); ++j) {
            if (i == j) continue;
            const auto& x1 = elements[i];
            const auto& x2 = elements[j];
            const auto criterion = n == 2 ? quadratic_existence(x1, x2) : degree_n_existence(x1, x2, n);
            const auto brute = brute_force_exists(x1, x2, n, ring, cap);

            bool count_ok = true;
            if (criterion.exists && brute.exists) {
                const auto expected = detail::bounded_pow(p, criterion.solution_space_dim, UINT64_MAX);
                count_ok = expected && *expected == brute.count;
            }
            PairRecord rec{i,           j, x1, x2, criterion.exists, brute.exists, brute.count,
                           criterion.solution_space_dim, count_ok};
            ++report.pairs;
            if (brute.exists) ++report.pairs_with_polynomial;
            if (!rec.agrees()) report.disagreements.push_back(rec);
            if (on_pair) on_pair(rec);
        }
    }
    return report;
}

}  // namespace ncroots
