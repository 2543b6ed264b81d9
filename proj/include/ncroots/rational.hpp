#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "descriptors.hpp"

namespace ncroots {

class Rational;

/// The field Q. Stateless; every instance describes the same field.
struct RationalField {
    using element_type = Rational;

    Rational zero() const;
    Rational one() const;
    Rational element(long value) const;
    FieldDescriptor descriptor() const { return FieldDescriptor::rational(); }

    bool operator==(const RationalField&) const = default;
};

/// Exact rational number in canonical form (positive denominator, coprime
/// parts), so equality is structural.
class Rational {
   public:
    using ring_type = RationalField;

    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Accepts "n", "-n", "p/q" with optional sign on p; q must be nonzero.
    static Rational parse(std::string_view text) {
        auto valid_integer = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        auto strip_plus = [](std::string_view s) {
            if (!s.empty() && s.front() == '+') s.remove_prefix(1);
            return std::string(s);
        };
        const auto slash = text.find('/');
        const auto num = text.substr(0, slash);
        const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        mpz_class p(strip_plus(num), 10);
        mpz_class q(std::string(den), 10);
        if (q == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
        return Rational(p, q);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    RationalField ring() const { return {}; }

    std::string to_string() const { return value_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs) {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw std::domain_error("rational division by zero");
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    mpq_class value_{0};
};

inline std::optional<Rational> invert(const Rational& r) {
    if (r.is_zero()) return std::nullopt;
    return Rational(1) / r;
}

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::element(long value) const { return Rational(value); }

}  // namespace ncroots
