#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "descriptors.hpp"
#include "errors.hpp"

namespace ncroots {

constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

class Zp;

/// The prime field F_p. Construction rejects composite moduli.
class PrimeField {
   public:
    using element_type = Zp;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus too large");
    }

    std::uint64_t modulus() const { return p_; }

    Zp zero() const;
    Zp one() const;
    Zp element(long value) const;
    FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }

    bool operator==(const PrimeField&) const = default;

   private:
    std::uint64_t p_;
};

/// Residue modulo a prime. The modulus travels with the value so that mixing
/// fields is caught at the operation.
class Zp {
   public:
    using ring_type = PrimeField;

    Zp(long value, const PrimeField& field) : p_(field.modulus()) {
        const auto p = static_cast<long long>(p_);
        long long r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        residue_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return residue_ == 0; }
    PrimeField ring() const { return PrimeField(p_); }

    Zp operator-() const { return from_reduced(residue_ == 0 ? 0 : p_ - residue_, p_); }
    friend Zp operator+(const Zp& a, const Zp& b) {
        a.check(b);
        std::uint64_t s = a.residue_ + b.residue_;
        if (s >= a.p_) s -= a.p_;
        return from_reduced(s, a.p_);
    }
    friend Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }
    friend Zp operator*(const Zp& a, const Zp& b) {
        a.check(b);
        const auto prod = static_cast<unsigned __int128>(a.residue_) * b.residue_;
        return from_reduced(static_cast<std::uint64_t>(prod % a.p_), a.p_);
    }
    Zp& operator+=(const Zp& rhs) { return *this = *this + rhs; }
    Zp& operator-=(const Zp& rhs) { return *this = *this - rhs; }
    Zp& operator*=(const Zp& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Zp&, const Zp&) = default;

    /// Fermat inverse; nullopt for zero.
    friend std::optional<Zp> invert(const Zp& a) {
        if (a.is_zero()) return std::nullopt;
        Zp result = from_reduced(1 % a.p_, a.p_);
        Zp base = a;
        for (std::uint64_t e = a.p_ - 2; e > 0; e >>= 1) {
            if (e & 1) result *= base;
            base *= base;
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.residue_; }

   private:
    static Zp from_reduced(std::uint64_t r, std::uint64_t p) {
        Zp z;
        z.residue_ = r;
        z.p_ = p;
        return z;
    }
    Zp() = default;

    void check(const Zp& other) const {
        if (p_ != other.p_)
            throw ring_mismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(other.p_));
    }

    std::uint64_t residue_ = 0;
    std::uint64_t p_ = 2;
};

inline Zp PrimeField::zero() const { return Zp(0, *this); }
inline Zp PrimeField::one() const { return Zp(1, *this); }
inline Zp PrimeField::element(long value) const { return Zp(value, *this); }

}  // namespace ncroots
