#pragma once

#include <optional>
#include <ostream>

#include "descriptors.hpp"
#include "rational.hpp"

namespace ncroots {

class Quaternion;

/// Hamilton's quaternions over Q, a division ring.
struct QuaternionRing {
    using element_type = Quaternion;

    Quaternion zero() const;
    Quaternion one() const;
    RingDescriptor descriptor() const { return RingDescriptor::quaternion(); }

    bool operator==(const QuaternionRing&) const = default;
};

/// a + b i + c j + d k with i^2 = j^2 = k^2 = ijk = -1.
class Quaternion {
   public:
    using ring_type = QuaternionRing;

    Quaternion() = default;
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    Quaternion(Rational real) : a_(std::move(real)) {}
    Quaternion(long real) : a_(real) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const Rational& real() const { return a_; }
    const Rational& i_part() const { return b_; }
    const Rational& j_part() const { return c_; }
    const Rational& k_part() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    QuaternionRing ring() const { return {}; }

    Quaternion conjugate() const { return {a_, -b_, -c_, -d_}; }
    Rational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

    Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_, p.d_ + q.d_};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_, p.d_ - q.d_};
    }
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.a_ * q.a_ - p.b_ * q.b_ - p.c_ * q.c_ - p.d_ * q.d_,
                p.a_ * q.b_ + p.b_ * q.a_ + p.c_ * q.d_ - p.d_ * q.c_,
                p.a_ * q.c_ - p.b_ * q.d_ + p.c_ * q.a_ + p.d_ * q.b_,
                p.a_ * q.d_ + p.b_ * q.c_ - p.c_ * q.b_ + p.d_ * q.a_};
    }
    Quaternion& operator+=(const Quaternion& rhs) { return *this = *this + rhs; }
    Quaternion& operator-=(const Quaternion& rhs) { return *this = *this - rhs; }
    Quaternion& operator*=(const Quaternion& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << '(' << q.a_ << ' ' << q.b_ << "i " << q.c_ << "j " << q.d_ << "k)";
    }

   private:
    Rational a_, b_, c_, d_;
};

/// conj(q) / N(q); nullopt only for zero.
inline std::optional<Quaternion> invert(const Quaternion& q) {
    const Rational n = q.norm();
    if (n.is_zero()) return std::nullopt;
    const Rational s = Rational(1) / n;
    return Quaternion(q.real() * s, -q.i_part() * s, -q.j_part() * s, -q.k_part() * s);
}

inline Quaternion QuaternionRing::zero() const { return {}; }
inline Quaternion QuaternionRing::one() const { return Quaternion(1); }

}  // namespace ncroots
