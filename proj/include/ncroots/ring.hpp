#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "descriptors.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "prime_field.hpp"
#include "quaternion.hpp"
#include "rational.hpp"

namespace ncroots {

/// An element of an associative ring with identity. Multiplication need not
/// commute. `a.ring()` yields a context that can produce 0 and 1 and compares
/// equal exactly when two elements may be combined.
template <class R>
concept ring_element = std::copyable<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.ring() == b.ring() } -> std::convertible_to<bool>;
    { a.ring().zero() } -> std::convertible_to<R>;
    { a.ring().one() } -> std::convertible_to<R>;
    { invert(a) } -> std::same_as<std::optional<R>>;
};

template <ring_element R>
using ring_of_t = std::remove_cvref_t<decltype(std::declval<const R&>().ring())>;

template <ring_element R>
R ring_pow(const R& a, std::size_t n) {
    R result = a.ring().one();
    for (std::size_t i = 0; i < n; ++i) result = result * a;
    return result;
}

template <ring_element R>
bool is_unit(const R& a) {
    return invert(a).has_value();
}

class RingElement;

/// Runtime ring context matching a RingDescriptor.
struct DynamicRing {
    RingDescriptor descriptor;

    RingElement zero() const;
    RingElement one() const;

    bool operator==(const DynamicRing&) const = default;
};

/// A ring element whose ring is chosen at run time (from JSON, say). Binary
/// operations require both operands to carry the same descriptor.
class RingElement {
   public:
    using Payload = std::variant<Rational, Zp, Matrix<Rational>, Matrix<Zp>, Quaternion>;
    using ring_type = DynamicRing;

    RingElement(Rational v) : payload_(std::move(v)) {}
    RingElement(Zp v) : payload_(std::move(v)) {}
    RingElement(Quaternion v) : payload_(std::move(v)) {}
    RingElement(Matrix<Rational> v) : payload_(std::move(v)) { require_square(); }
    RingElement(Matrix<Zp> v) : payload_(std::move(v)) { require_square(); }

    static RingElement zero_of(const RingDescriptor& d) { return make(d, false); }
    static RingElement one_of(const RingDescriptor& d) { return make(d, true); }

    RingDescriptor descriptor() const {
        return std::visit(
            [](const auto& v) -> RingDescriptor {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Zp>)
                    return RingDescriptor::of_field(v.ring().descriptor());
                else
                    return v.ring().descriptor();
            },
            payload_);
    }
    DynamicRing ring() const { return {descriptor()}; }

    const Payload& payload() const { return payload_; }
    template <class T>
    bool holds() const {
        return std::holds_alternative<T>(payload_);
    }
    template <class T>
    const T& as() const {
        return std::get<T>(payload_);
    }

    bool is_zero() const {
        return std::visit([](const auto& v) { return v.is_zero(); }, payload_);
    }

    RingElement operator-() const {
        return std::visit([](const auto& v) { return RingElement(-v); }, payload_);
    }
    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
    }

    friend bool operator==(const RingElement& a, const RingElement& b) { return a.payload_ == b.payload_; }

    friend std::optional<RingElement> invert(const RingElement& a) {
        return std::visit(
            [](const auto& v) -> std::optional<RingElement> {
                auto inv = invert(v);
                if (!inv) return std::nullopt;
                return RingElement(std::move(*inv));
            },
            a.payload_);
    }

    friend std::ostream& operator<<(std::ostream& os, const RingElement& a) {
        std::visit([&os](const auto& v) { os << v; }, a.payload_);
        return os;
    }

   private:
    explicit RingElement(Payload p) : payload_(std::move(p)) {}

    void require_square() const {
        std::visit(
            [](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Matrix<Rational>> || std::is_same_v<T, Matrix<Zp>>)
                    if (!v.is_square() || v.rows() == 0) throw ring_mismatch("matrix ring element must be square, k >= 1");
            },
            payload_);
    }

    template <class Op>
    static RingElement combine(const RingElement& a, const RingElement& b, Op op) {
        const auto da = a.descriptor();
        const auto db = b.descriptor();
        if (!(da == db)) throw ring_mismatch("operands in " + da.to_string() + " and " + db.to_string());
        return std::visit(
            [&](const auto& x) -> RingElement {
                using T = std::decay_t<decltype(x)>;
                return RingElement(op(x, std::get<T>(b.payload_)));
            },
            a.payload_);
    }

    static RingElement make(const RingDescriptor& d, bool identity) {
        if (d.kind == RingDescriptor::Kind::matrix && d.k == 0) throw std::invalid_argument("matrix ring needs k >= 1");
        const long v = identity ? 1 : 0;
        switch (d.kind) {
            case RingDescriptor::Kind::quaternion:
                return RingElement(Quaternion(v));
            case RingDescriptor::Kind::field:
                if (d.field.kind == FieldDescriptor::Kind::rational) return RingElement(Rational(v));
                return RingElement(Zp(v, PrimeField(d.field.p)));
            case RingDescriptor::Kind::matrix:
                if (d.field.kind == FieldDescriptor::Kind::rational) {
                    RationalField f;
                    return identity ? RingElement(Matrix<Rational>::identity(d.k, f))
                                    : RingElement(Matrix<Rational>(d.k, d.k, f));
                } else {
                    PrimeField f(d.field.p);
                    return identity ? RingElement(Matrix<Zp>::identity(d.k, f)) : RingElement(Matrix<Zp>(d.k, d.k, f));
                }
        }
        throw std::invalid_argument("unknown ring kind");
    }

    Payload payload_;
};

inline RingElement DynamicRing::zero() const { return RingElement::zero_of(descriptor); }
inline RingElement DynamicRing::one() const { return RingElement::one_of(descriptor); }

static_assert(ring_element<Rational>);
static_assert(ring_element<Zp>);
static_assert(ring_element<Quaternion>);
static_assert(ring_element<Matrix<Rational>>);
static_assert(ring_element<Matrix<Zp>>);
static_assert(ring_element<RingElement>);

}  // namespace ncroots
