#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ncroots {

struct FieldDescriptor {
    enum class Kind { rational, prime };

    Kind kind = Kind::rational;
    std::uint64_t p = 0;  // only meaningful for Kind::prime

    static FieldDescriptor rational() { return {Kind::rational, 0}; }
    static FieldDescriptor prime(std::uint64_t modulus) { return {Kind::prime, modulus}; }

    bool operator==(const FieldDescriptor&) const = default;

    std::string to_string() const {
        return kind == Kind::rational ? std::string("Q") : "F_" + std::to_string(p);
    }
};

/// Which ring an element belongs to: a field, k x k matrices over a field, or
/// the rational quaternions.
struct RingDescriptor {
    enum class Kind { field, matrix, quaternion };

    Kind kind = Kind::field;
    std::size_t k = 1;  // matrix size; 1 for the other kinds
    FieldDescriptor field{};

    static RingDescriptor of_field(FieldDescriptor f) { return {Kind::field, 1, f}; }
    static RingDescriptor matrix(std::size_t size, FieldDescriptor f) { return {Kind::matrix, size, f}; }
    static RingDescriptor quaternion() { return {Kind::quaternion, 1, FieldDescriptor::rational()}; }

    bool operator==(const RingDescriptor&) const = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::field:
                return field.to_string();
            case Kind::matrix:
                return "M_" + std::to_string(k) + "(" + field.to_string() + ")";
            case Kind::quaternion:
                return "H(Q)";
        }
        return "?";
    }
};

}  // namespace ncroots
