#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

namespace ncroots {

enum class Branch { conjugate, already_root, pad_with_x, failed };

constexpr std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::conjugate:
            return "conjugate";
        case Branch::already_root:
            return "already_root";
        case Branch::pad_with_x:
            return "pad_with_x";
        case Branch::failed:
            return "failed";
    }
    return "?";
}

/// One step of the recursion R_{i+1} = (x - h x_{i+1} h^-1) R_i, h = R_i(x_{i+1}).
template <ring_element R>
struct ConstructionStep {
    std::size_t index;  // i, 1-based; the step adds root x_{i+1}
    R evaluation_value;
    Branch branch;
    std::optional<R> conjugated_root;
    std::optional<Polynomial<R>> polynomial;  // R_{i+1}, absent when failed
};

template <ring_element R>
struct ConstructionTrace {
    std::vector<ConstructionStep<R>> steps;
    std::optional<Polynomial<R>> result;

    bool succeeded() const { return result.has_value(); }

    /// 1-based index of the step that obstructed the construction.
    std::optional<std::size_t> failed_step() const {
        for (const auto& s : steps)
            if (s.branch == Branch::failed) return s.index;
        return std::nullopt;
    }
};

/// h d h^-1. If it is a root of L and h = Q(d), then d is a root of L Q.
template <ring_element R>
R conjugate_shift(const R& d, const R& h) {
    auto h_inv = invert(h);
    if (!h_inv) throw not_invertible("conjugating element is not a unit");
    return h * d * *h_inv;
}

/// Builds a monic polynomial having every element of `roots` as a right root.
///
/// Roots are processed in input order. A root that already annihilates the
/// current polynomial is skipped, or absorbed by a left factor x when
/// `exact_degree` is set. If the evaluation value is neither zero nor a unit
/// the recursion cannot proceed; the trace records the failed step and no
/// result is produced. Over a division ring that branch is unreachable.
template <ring_element R>
ConstructionTrace<R> construct_with_roots(std::span<const R> roots, bool exact_degree = false) {
    if (roots.empty()) throw std::invalid_argument("construct_with_roots needs at least one root");
    const auto ring = roots.front().ring();
    for (const auto& r : roots)
        if (!(r.ring() == ring)) throw ring_mismatch("roots from different rings");

    ConstructionTrace<R> trace;
    Polynomial<R> current = Polynomial<R>::x_minus(roots.front());
    const Polynomial<R> x = Polynomial<R>::variable(ring);

    for (std::size_t i = 1; i < roots.size(); ++i) {
        const R& next = roots[i];
        R h = evaluate_right(current, next);
        ConstructionStep<R> step{i, h, Branch::failed, std::nullopt, std::nullopt};
        if (h.is_zero()) {
            if (exact_degree) {
                step.branch = Branch::pad_with_x;
                current = x * current;
            } else {
                step.branch = Branch::already_root;
            }
        } else if (auto h_inv = invert(h)) {
            R y = h * next * *h_inv;
            current = Polynomial<R>::x_minus(y) * current;
            step.branch = Branch::conjugate;
            step.conjugated_root = std::move(y);
        } else {
            trace.steps.push_back(std::move(step));
            return trace;
        }
        step.polynomial = current;
        trace.steps.push_back(std::move(step));
    }
    trace.result = std::move(current);
    return trace;
}

template <ring_element R>
ConstructionTrace<R> construct_with_roots(const std::vector<R>& roots, bool exact_degree = false) {
    return construct_with_roots(std::span<const R>(roots), exact_degree);
}

/// P(x_i) for each root; all zero iff every x_i is a right root.
template <ring_element R>
std::vector<R> verify_roots(const Polynomial<R>& p, std::span<const R> roots) {
    std::vector<R> residuals;
    residuals.reserve(roots.size());
    for (const auto& r : roots) residuals.push_back(evaluate_right(p, r));
    return residuals;
}

template <ring_element R>
std::vector<R> verify_roots(const Polynomial<R>& p, const std::vector<R>& roots) {
    return verify_roots(p, std::span<const R>(roots));
}

template <ring_element R>
bool all_zero(std::span<const R> values) {
    for (const auto& v : values)
        if (!v.is_zero()) return false;
    return true;
}

template <ring_element R>
bool all_zero(const std::vector<R>& values) {
    return all_zero(std::span<const R>(values));
}

}  // namespace ncroots
