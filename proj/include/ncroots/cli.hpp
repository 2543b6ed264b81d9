#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "codec.hpp"
#include "construct.hpp"
#include "existence.hpp"
#include "oracle.hpp"
#include "ring.hpp"

namespace ncroots::cli {

using json = nlohmann::json;

enum ExitCode : int {
    success = 0,
    verification_nonzero = 1,
    construction_obstructed = 2,
    nonexistence = 3,
    parse_failure = 64,
    semantic_failure = 65,
    internal_failure = 70,
};

struct Options {
    std::string input_path;
    bool trace = false;
    bool verify = false;
    bool exact_degree = false;
    bool pretty = false;
    std::optional<long> n;
    std::optional<std::string> a1;
};

/// A decoded request: the subcommand plus whatever it needs from the input
/// document and flags.
struct JobSpec {
    std::string command;
    std::optional<RingDescriptor> ring;
    std::vector<RingElement> elements;
    std::optional<Polynomial<RingElement>> polynomial;
    std::optional<std::size_t> n;
    std::optional<json> a1;
    Options options;
};

namespace detail {

inline json read_document(const Options& opts, std::istream& in) {
    std::string text;
    if (opts.input_path.empty() || opts.input_path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(opts.input_path);
        if (!file) throw codec::decode_error("cannot open input file '" + opts.input_path + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return json::parse(text);
}

inline std::size_t degree_parameter(const Options& opts, const json& doc) {
    long n = 0;
    if (opts.n) {
        n = *opts.n;
    } else if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw codec::decode_error("'n' must be an integer");
        n = doc["n"].get<long>();
    } else {
        throw codec::decode_error("degree n missing: pass --n or an 'n' field");
    }
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    return static_cast<std::size_t>(n);
}

inline void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace detail

inline JobSpec parse_job(const std::string& command, const json& doc, const Options& opts) {
    if (!doc.is_object()) throw codec::decode_error("input must be a JSON object");
    if (doc.contains("command") && doc["command"] != command)
        throw codec::decode_error("input declares command " + doc["command"].dump() + " but '" + command + "' was run");

    JobSpec job;
    job.command = command;
    job.options = opts;

    if (command == "verify") {
        job.polynomial = codec::decode_polynomial(codec::require(doc, "polynomial"));
        const auto ring = job.polynomial->ring().descriptor;
        if (doc.contains("ring") && !(codec::decode_ring(doc["ring"]) == ring))
            throw ring_mismatch("declared ring differs from the polynomial's ring");
        job.ring = ring;
        job.elements = codec::decode_elements(codec::require(doc, "elements"), ring);
        return job;
    }

    job.ring = codec::decode_ring(codec::require(doc, "ring"));
    if (command == "cross-check") {
        job.n = detail::degree_parameter(opts, doc);
        return job;
    }

    job.elements = codec::decode_elements(codec::require(doc, "elements"), *job.ring);
    if (command == "construct") {
        if (job.elements.empty()) throw std::invalid_argument("construct needs at least one element");
        return job;
    }

    // quadratic | degree-n
    if (job.ring->kind != RingDescriptor::Kind::matrix)
        throw std::invalid_argument(command + " needs a matrix ring, got " + job.ring->to_string());
    if (job.elements.size() != 2) throw std::invalid_argument(command + " needs exactly two elements");
    if (job.elements[0] == job.elements[1]) throw equal_roots("the two elements must differ");
    if (command == "degree-n") job.n = detail::degree_parameter(opts, doc);
    if (opts.a1) job.a1 = json::parse(*opts.a1);
    return job;
}

inline int cmd_construct(const JobSpec& job, std::ostream& out) {
    const auto trace = construct_with_roots(job.elements, job.options.exact_degree);
    json result;
    if (trace.result) {
        result["polynomial"] = codec::encode(*trace.result);
        result["degree"] = *trace.result->degree();
        if (job.options.verify) result["residuals"] = codec::encode_residuals(verify_roots(*trace.result, job.elements));
    } else {
        result["obstructed_at"] = *trace.failed_step();
    }
    if (job.options.trace || !trace.result) result["trace"] = codec::encode(trace);
    detail::emit(out, result, job.options.pretty);
    return trace.result ? success : construction_obstructed;
}

namespace detail {

template <class F>
int run_criterion(const JobSpec& job, std::ostream& out) {
    const auto& x1 = job.elements[0].as<Matrix<F>>();
    const auto& x2 = job.elements[1].as<Matrix<F>>();
    CriterionReport<F> report;
    if (job.command == "quadratic" && job.a1) {
        const auto a1 = codec::decode_element(*job.a1, *job.ring);
        report = quadratic_from_a1(x1, x2, a1.as<Matrix<F>>());
    } else if (job.command == "quadratic") {
        report = quadratic_existence(x1, x2);
    } else {
        report = degree_n_existence(x1, x2, *job.n);
    }
    emit(out, codec::encode(report), job.options.pretty);
    return report.exists ? success : nonexistence;
}

}  // namespace detail

inline int cmd_criterion(const JobSpec& job, std::ostream& out) {
    if (job.ring->field.kind == FieldDescriptor::Kind::rational) return detail::run_criterion<Rational>(job, out);
    return detail::run_criterion<Zp>(job, out);
}

inline int cmd_verify(const JobSpec& job, std::ostream& out) {
    const auto residuals = verify_roots(*job.polynomial, job.elements);
    const bool ok = all_zero(residuals);
    detail::emit(out, {{"residuals", codec::encode_residuals(residuals)}, {"all_zero", ok}}, job.options.pretty);
    return ok ? success : verification_nonzero;
}

/// One JSON line per ordered pair, then a summary line.
inline int cmd_cross_check(const JobSpec& job, std::ostream& out) {
    const auto report = cross_check_criterion(*job.ring, *job.n,
                                              [&out](const PairRecord& r) { out << codec::encode(r).dump() << '\n'; });
    const json summary = {{"summary",
                           {{"ring", codec::encode(report.descriptor)},
                            {"n", report.n},
                            {"pairs", report.pairs},
                            {"pairs_with_polynomial", report.pairs_with_polynomial},
                            {"disagreements", report.disagreements.size()}}}};
    out << summary.dump() << '\n';
    return report.disagreements.empty() ? success : verification_nonzero;
}

inline int dispatch(const JobSpec& job, std::ostream& out) {
    if (job.command == "construct") return cmd_construct(job, out);
    if (job.command == "quadratic" || job.command == "degree-n") return cmd_criterion(job, out);
    if (job.command == "verify") return cmd_verify(job, out);
    return cmd_cross_check(job, out);
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomials with prescribed right roots over non-commutative rings"};
    app.require_subcommand(1);
    Options opts;

    auto common = [&opts](CLI::App* sub) {
        sub->add_option("--input", opts.input_path, "JSON job file (default: stdin)");
        sub->add_flag("--pretty", opts.pretty, "Indent JSON output");
    };
    auto* construct = app.add_subcommand("construct", "Build a monic polynomial with the given right roots");
    common(construct);
    construct->add_flag("--trace", opts.trace, "Include the per-step construction trace");
    construct->add_flag("--verify", opts.verify, "Append the residual at every root");
    construct->add_flag("--exact-degree", opts.exact_degree, "Pad with x so the degree equals the root count");

    auto* quadratic = app.add_subcommand("quadratic", "Decide existence of x^2 + a1 x + a0 with two matrix roots");
    common(quadratic);
    quadratic->add_option("--a1", opts.a1, "Use this a1 (JSON matrix) instead of the solver's choice");

    auto* degree_n = app.add_subcommand("degree-n", "Decide existence of a monic degree-n polynomial with two matrix roots");
    common(degree_n);
    degree_n->add_option("--n", opts.n, "Degree (>= 2)");

    auto* verify = app.add_subcommand("verify", "Evaluate a polynomial at elements");
    common(verify);

    auto* cross = app.add_subcommand("cross-check", "Compare the rank criterion with exhaustive search");
    common(cross);
    cross->add_option("--n", opts.n, "Degree (>= 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : parse_failure;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const auto job = parse_job(command, detail::read_document(opts, in), opts);
        return dispatch(job, out);
    } catch (const codec::decode_error& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return semantic_failure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return semantic_failure;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return semantic_failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_failure;
    }
}

}  // namespace ncroots::cli
