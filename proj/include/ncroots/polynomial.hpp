#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace ncroots {

/// Polynomial a_n x^n + ... + a_1 x + a_0 over a possibly non-commutative
/// ring. Coefficients sit to the left of the powers and x is central, so the
/// product is the ordered convolution c_k = sum_{i+j=k} a_i b_j.
///
/// Stored densely by degree; the highest stored coefficient is always
/// nonzero and the zero polynomial has no coefficients.
template <ring_element R>
class Polynomial {
   public:
    using element_type = R;
    using ring_type = ring_of_t<R>;

    explicit Polynomial(ring_type ring) : ring_(std::move(ring)) {}

    Polynomial(ring_type ring, std::vector<R> coefficients) : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
        for (const auto& c : coeffs_)
            if (!(c.ring() == ring_)) throw ring_mismatch("polynomial coefficient from another ring");
        trim();
    }

    static Polynomial constant(const R& c) { return Polynomial(c.ring(), {c}); }

    /// The polynomial x.
    static Polynomial variable(const ring_type& ring) { return Polynomial(ring, {ring.zero(), ring.one()}); }

    /// x - a
    static Polynomial x_minus(const R& a) { return Polynomial(a.ring(), {-a, a.ring().one()}); }

    const ring_type& ring() const { return ring_; }
    std::span<const R> coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    R coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }

    const R& leading() const {
        if (coeffs_.empty()) throw zero_polynomial("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == ring_.one(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        p.check(q);
        std::vector<R> out;
        const std::size_t n = std::max(p.coeffs_.size(), q.coeffs_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(p.coefficient(i) + q.coefficient(i));
        return Polynomial(p.ring_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        p.check(q);
        if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
        std::vector<R> out(p.coeffs_.size() + q.coeffs_.size() - 1, p.ring_.zero());
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
        return Polynomial(p.ring_, std::move(out));
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.ring_ == q.ring_ && p.coeffs_ == q.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
            if (p.coeffs_[i].is_zero()) continue;
            os << (first ? "" : " + ") << p.coeffs_[i];
            if (i > 0) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return os;
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    void check(const Polynomial& other) const {
        if (!(ring_ == other.ring_)) throw ring_mismatch("polynomials over different rings");
    }

    ring_type ring_;
    std::vector<R> coeffs_;
};

template <ring_element R>
std::optional<std::size_t> degree(const Polynomial<R>& p) {
    return p.degree();
}

/// P(a) = sum a_i a^i, by the recursion f <- f a + a_i from the top.
template <ring_element R>
R evaluate_right(const Polynomial<R>& p, const R& a) {
    if (!(a.ring() == p.ring())) throw ring_mismatch("evaluation point outside the coefficient ring");
    const auto cs = p.coefficients();
    R f = p.ring().zero();
    for (std::size_t i = cs.size(); i-- > 0;) f = f * a + cs[i];
    return f;
}

template <ring_element R>
struct RightDivision {
    Polynomial<R> quotient;
    R remainder;
};

/// p = quotient * (x - a) + remainder.
template <ring_element R>
RightDivision<R> right_divide_linear(const Polynomial<R>& p, const R& a) {
    if (p.is_zero()) throw zero_polynomial("right division of the zero polynomial");
    if (!(a.ring() == p.ring())) throw ring_mismatch("divisor outside the coefficient ring");
    const auto cs = p.coefficients();
    const std::size_t n = cs.size() - 1;
    if (n == 0) return {Polynomial<R>(p.ring()), cs[0]};

    std::vector<R> f(n, p.ring().zero());
    f[n - 1] = cs[n];
    for (std::size_t i = n - 1; i > 0; --i) f[i - 1] = cs[i] + f[i] * a;
    R remainder = cs[0] + f[0] * a;
    return {Polynomial<R>(p.ring(), std::move(f)), std::move(remainder)};
}

}  // namespace ncroots
