#pragma once

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "construct.hpp"
#include "descriptors.hpp"
#include "errors.hpp"
#include "existence.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

// JSON encodings:
//   rational      "p/q" or "n" (bare JSON integers are accepted on input)
//   F_p element   integer
//   matrix        array of row arrays
//   quaternion    [a, b, c, d] for a + bi + cj + dk
//   ring          {"kind":"field","field":F} | {"kind":"matrix","k":K,"field":F} | {"kind":"quaternion"}
//   field F       {"kind":"rational"} | {"kind":"prime","p":P}
//   polynomial    {"ring": ring, "coefficients": [c0, c1, ...]}

namespace ncroots::codec {

using json = nlohmann::json;

/// Structurally malformed input (wrong JSON type, missing field, bad literal).
struct decode_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw decode_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline json encode(const Rational& r) { return r.to_string(); }
inline json encode(const Zp& z) { return z.residue(); }

inline Rational decode_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw decode_error(e.what());
        }
    }
    throw decode_error("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline Zp decode_zp(const json& j, const PrimeField& field) {
    if (!j.is_number_integer()) throw decode_error("prime-field element must be an integer, got " + j.dump());
    return field.element(j.get<long>());
}

inline json encode(const FieldDescriptor& f) {
    if (f.kind == FieldDescriptor::Kind::rational) return {{"kind", "rational"}};
    return {{"kind", "prime"}, {"p", f.p}};
}

inline FieldDescriptor decode_field(const json& j) {
    const auto& kind = require(j, "kind");
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "prime") {
        const auto& p = require(j, "p");
        if (!p.is_number_unsigned()) throw decode_error("field modulus must be a positive integer");
        const auto modulus = p.get<std::uint64_t>();
        if (!is_prime(modulus)) throw std::invalid_argument("field modulus " + std::to_string(modulus) + " is not prime");
        return FieldDescriptor::prime(modulus);
    }
    throw decode_error("unknown field kind " + kind.dump());
}

inline json encode(const RingDescriptor& d) {
    switch (d.kind) {
        case RingDescriptor::Kind::field:
            return {{"kind", "field"}, {"field", encode(d.field)}};
        case RingDescriptor::Kind::matrix:
            return {{"kind", "matrix"}, {"k", d.k}, {"field", encode(d.field)}};
        case RingDescriptor::Kind::quaternion:
            return {{"kind", "quaternion"}};
    }
    return nullptr;
}

inline RingDescriptor decode_ring(const json& j) {
    const auto& kind = require(j, "kind");
    if (kind == "quaternion") return RingDescriptor::quaternion();
    if (kind == "field") return RingDescriptor::of_field(decode_field(require(j, "field")));
    if (kind == "matrix") {
        const auto& k = require(j, "k");
        if (!k.is_number_unsigned() || k.get<std::size_t>() == 0) throw decode_error("matrix size k must be >= 1");
        return RingDescriptor::matrix(k.get<std::size_t>(), decode_field(require(j, "field")));
    }
    throw decode_error("unknown ring kind " + kind.dump());
}

template <class F>
json encode(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Decodes a k x k matrix. Wrong dimensions are a ring mismatch, not a
/// syntax error: the value is well-formed but lives in another ring.
template <class Field, class Decode>
Matrix<typename Field::element_type> decode_matrix(const json& j, const Field& field, std::size_t k, Decode entry) {
    if (!j.is_array()) throw decode_error("matrix must be an array of rows");
    for (const auto& row : j)
        if (!row.is_array()) throw decode_error("matrix row must be an array");
    if (j.size() != k) throw ring_mismatch("expected " + std::to_string(k) + " rows, got " + std::to_string(j.size()));
    Matrix<typename Field::element_type> m(k, k, field);
    for (std::size_t i = 0; i < k; ++i) {
        if (j[i].size() != k)
            throw ring_mismatch("expected " + std::to_string(k) + " columns, got " + std::to_string(j[i].size()));
        for (std::size_t c = 0; c < k; ++c) m(i, c) = entry(j[i][c]);
    }
    return m;
}

inline Matrix<Rational> decode_rational_matrix(const json& j, std::size_t k) {
    return decode_matrix(j, RationalField{}, k, [](const json& e) { return decode_rational(e); });
}

inline Matrix<Zp> decode_zp_matrix(const json& j, const PrimeField& field, std::size_t k) {
    return decode_matrix(j, field, k, [&](const json& e) { return decode_zp(e, field); });
}

inline json encode(const Quaternion& q) {
    return json::array({encode(q.real()), encode(q.i_part()), encode(q.j_part()), encode(q.k_part())});
}

inline Quaternion decode_quaternion(const json& j) {
    if (!j.is_array() || j.size() != 4) throw decode_error("quaternion must be an array [a, b, c, d]");
    return {decode_rational(j[0]), decode_rational(j[1]), decode_rational(j[2]), decode_rational(j[3])};
}

inline json encode(const RingElement& e) {
    return std::visit([](const auto& v) { return encode(v); }, e.payload());
}

inline RingElement decode_element(const json& j, const RingDescriptor& d) {
    switch (d.kind) {
        case RingDescriptor::Kind::quaternion:
            return decode_quaternion(j);
        case RingDescriptor::Kind::field:
            if (j.is_array()) throw ring_mismatch("expected a scalar in " + d.to_string());
            if (d.field.kind == FieldDescriptor::Kind::rational) return decode_rational(j);
            return decode_zp(j, PrimeField(d.field.p));
        case RingDescriptor::Kind::matrix:
            if (d.field.kind == FieldDescriptor::Kind::rational) return decode_rational_matrix(j, d.k);
            return decode_zp_matrix(j, PrimeField(d.field.p), d.k);
    }
    throw decode_error("unknown ring kind");
}

inline std::vector<RingElement> decode_elements(const json& j, const RingDescriptor& d) {
    if (!j.is_array()) throw decode_error("elements must be an array");
    std::vector<RingElement> out;
    for (const auto& e : j) out.push_back(decode_element(e, d));
    return out;
}

inline json encode(const Polynomial<RingElement>& p) {
    json cs = json::array();
    for (const auto& c : p.coefficients()) cs.push_back(encode(c));
    return {{"ring", encode(p.ring().descriptor)}, {"coefficients", std::move(cs)}};
}

inline Polynomial<RingElement> decode_polynomial(const json& j) {
    const auto ring = decode_ring(require(j, "ring"));
    const auto& cs = require(j, "coefficients");
    return Polynomial<RingElement>(DynamicRing{ring}, decode_elements(cs, ring));
}

inline json encode_residuals(const std::vector<RingElement>& residuals) {
    json out = json::array();
    for (const auto& r : residuals) out.push_back(encode(r));
    return out;
}

inline json encode(const ConstructionTrace<RingElement>& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step = {{"index", s.index},
                     {"evaluation_value", encode(s.evaluation_value)},
                     {"branch", std::string(to_string(s.branch))}};
        step["conjugated_root"] = s.conjugated_root ? encode(*s.conjugated_root) : json(nullptr);
        steps.push_back(std::move(step));
    }
    json out = {{"steps", std::move(steps)}};
    out["result"] = trace.result ? encode(*trace.result) : json(nullptr);
    return out;
}

template <class F>
json encode(const CriterionReport<F>& r) {
    json out = {{"n", r.n},
                {"exists", r.exists},
                {"rank", r.rank_difference_matrix},
                {"rank_augmented", r.rank_augmented},
                {"solution_space_dim", r.solution_space_dim}};
    if (r.coefficients) {
        json cs = json::array();
        for (const auto& c : *r.coefficients) cs.push_back(encode(c));
        out["coefficients"] = std::move(cs);
    } else {
        out["coefficients"] = nullptr;
    }
    out["a0"] = r.a0 ? encode(*r.a0) : json(nullptr);
    return out;
}

inline json encode(const PairRecord& r) {
    return {{"x1_index", r.x1_index},
            {"x2_index", r.x2_index},
            {"x1", encode(r.x1)},
            {"x2", encode(r.x2)},
            {"criterion_exists", r.criterion_exists},
            {"brute_force_exists", r.brute_force_exists},
            {"brute_force_count", r.brute_force_count},
            {"solution_space_dim", r.solution_space_dim},
            {"agree", r.agrees()}};
}

}  // namespace ncroots::codec
