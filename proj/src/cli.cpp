#include "leonard/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "leonard/selftest.hpp"

namespace leonard::cli {

using json_io::json;

namespace {

JobResult failure(int code, std::string reason, std::string detail) {
    JobResult out;
    out.exit_code = code;
    out.diagnostic = json{{"reason", std::move(reason)}, {"detail", std::move(detail)}};
    return out;
}

JobResult success(json document, bool accepted) {
    JobResult out;
    out.exit_code = accepted ? kExitOk : kExitRejected;
    out.document = std::move(document);
    return out;
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::string first_violation(const ValidationReport& report) {
    const Violation& v = report.violations.front();
    std::string out = "condition " + std::string(condition_name(v.condition));
    if (v.index) out += " at index " + std::to_string(*v.index);
    return out + ": " + v.detail;
}

struct RecognizeInput {
    Matrix a;
    Matrix a_star;
};

RecognizeInput decode_pair(const json& payload) {
    const FieldSpec field = json_io::field_from_json(member(payload, "field"));
    Matrix a = json_io::matrix_from_entries(field, member(payload, "a"));
    Matrix a_star = json_io::matrix_from_entries(field, member(payload, "a_star"));
    if (a.order() != a_star.order()) throw Error(Errc::SizeMismatch, "\"a\" and \"a_star\" must have the same order");
    return {std::move(a), std::move(a_star)};
}

ParameterArray decode_example(const json& payload) {
    const json& prime = member(payload, "prime");
    const FieldSpec field = prime.is_null() ? FieldSpec::rational() : FieldSpec::prime(prime.get<std::uint64_t>());
    const json& dj = member(payload, "d");
    if (!dj.is_number_unsigned()) throw Error(Errc::ParseError, "--d must be a nonnegative integer");
    const auto d = dj.get<std::size_t>();
    const std::string family = member(payload, "family").get<std::string>();
    if (family == "krawtchouk") return krawtchouk_array(d, field);
    if (family != "qracah") throw Error(Errc::ParseError, "unknown family \"" + family + "\"");
    auto param = [&](const char* key) {
        const json& v = member(payload, key);
        if (v.is_null()) throw Error(Errc::ParseError, std::string("q-Racah parameter \"") + key + "\" is required");
        return json_io::scalar_from_json(field, v);
    };
    return qracah_array(QRacahParams{d, param("q"), param("s"), param("s_star"), param("r1"), param("r2")});
}

json selftest_document(const SelftestSummary& summary) {
    json results = json::array();
    for (const InvariantResult& r : summary.results) {
        results.push_back(json{{"fixture", r.fixture}, {"invariant", r.invariant}, {"pass", r.pass}, {"detail", r.detail}});
    }
    return json{{"all_pass", summary.all_pass()}, {"results", std::move(results)}};
}

JobResult run_array_command(const JobSpec& job, const ParameterArray& p) {
    const ValidationReport report = validate(p);
    if (job.command == Command::Validate) return success(json_io::to_json(report), report.valid);
    if (!report.valid) return failure(kExitRejected, "InvalidArray", first_violation(report));
    switch (job.command) {
        case Command::Canon:
            return success(json_io::to_json(job.variant == "lbub" ? lb_ub(p) : td_d(p)), true);
        case Command::Orbit: {
            json arrays = json::array();
            for (const ParameterArray& q : pair_arrays(p)) arrays.push_back(json_io::array_body(q));
            return success(json{{"field", json_io::to_json(p.field())}, {"arrays", std::move(arrays)}}, true);
        }
        case Command::Transition:
            return success(json_io::to_json(transition_matrices(p)), true);
        default:
            break;
    }
    return failure(kExitMalformed, "ParseError", "command does not take a parameter array");
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int decode_exit_code(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime:
        case Errc::BadCharacteristic:
        case Errc::ConstraintViolated:
        case Errc::FieldMismatch:
        case Errc::CharTwoUnsupported:
            return kExitFieldConstraint;
        default:
            return kExitMalformed;
    }
}

int operation_exit_code(Errc code) noexcept {
    switch (code) {
        case Errc::ParseError:
        case Errc::SizeMismatch:
            return kExitMalformed;
        case Errc::NotPrime:
        case Errc::BadCharacteristic:
        case Errc::ConstraintViolated:
        case Errc::FieldMismatch:
        case Errc::CharTwoUnsupported:
            return kExitFieldConstraint;
        default:
            return kExitRejected;
    }
}

JobResult run(const JobSpec& job) {
    if (job.command == Command::Selftest) {
        const bool corrupt = job.payload.is_object() && job.payload.value("corrupt", false);
        const SelftestSummary summary = roundtrip_selftest(corrupt);
        return success(selftest_document(summary), summary.all_pass());
    }
    if (job.command == Command::Example) {
        try {
            return success(json_io::to_json(decode_example(job.payload)), true);
        } catch (const Error& e) {
            return failure(decode_exit_code(e.code()), std::string(errc_name(e.code())), e.detail());
        } catch (const json::exception& e) {
            return failure(kExitMalformed, "ParseError", e.what());
        }
    }

    std::optional<ParameterArray> array;
    std::optional<RecognizeInput> pair;
    try {
        if (job.command == Command::Recognize) {
            pair = decode_pair(job.payload);
        } else {
            array = json_io::array_from_json(job.payload);
        }
    } catch (const Error& e) {
        return failure(decode_exit_code(e.code()), std::string(errc_name(e.code())), e.detail());
    } catch (const json::exception& e) {
        return failure(kExitMalformed, "ParseError", e.what());
    }

    try {
        if (pair) {
            const RecognitionReport report =
                job.variant == "lbub" ? recognize_lbub(pair->a, pair->a_star) : recognize_tdd(pair->a, pair->a_star);
            return success(json_io::to_json(report, pair->a.field()), report.accepted);
        }
        return run_array_command(job, *array);
    } catch (const Error& e) {
        return failure(operation_exit_code(e.code()), std::string(errc_name(e.code())), e.detail());
    }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leonard pair construction, recognition and transition matrices over exact fields", "leonard"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string form = "tdd";
    std::string shape = "tdd";
    std::string family;
    std::size_t d = 0;
    std::optional<std::uint64_t> prime;
    std::optional<std::string> q, s, s_star, r1, r2;
    bool corrupt = false;

    auto io_flags = [&](CLI::App* sub, bool takes_input) {
        if (takes_input) sub->add_option("--in", in_path, "Input JSON file (default: stdin)");
        sub->add_option("--out", out_path, "Output JSON file (default: stdout)");
    };
    CLI::App* validate_cmd = app.add_subcommand("validate", "Check the parameter array conditions");
    io_flags(validate_cmd, true);
    CLI::App* canon_cmd = app.add_subcommand("canon", "Emit a canonical Leonard pair for a parameter array");
    io_flags(canon_cmd, true);
    canon_cmd->add_option("--form", form, "lbub or tdd")->check(CLI::IsMember({"lbub", "tdd"}));
    CLI::App* recognize_cmd = app.add_subcommand("recognize", "Recover parameter arrays from a matrix pair");
    io_flags(recognize_cmd, true);
    recognize_cmd->add_option("--shape", shape, "lbub or tdd")->check(CLI::IsMember({"lbub", "tdd"}));
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "The parameter arrays sharing the Leonard pair");
    io_flags(orbit_cmd, true);
    CLI::App* transition_cmd = app.add_subcommand("transition", "Transition matrices P, P* with k, k*, nu");
    io_flags(transition_cmd, true);
    CLI::App* example_cmd = app.add_subcommand("example", "Emit a Krawtchouk or q-Racah parameter array");
    io_flags(example_cmd, false);
    example_cmd->add_option("--family", family, "krawtchouk or qracah")
        ->required()
        ->check(CLI::IsMember({"krawtchouk", "qracah"}));
    example_cmd->add_option("--d", d, "Diameter")->required();
    example_cmd->add_option("--prime", prime, "Work over GF(p) instead of Q");
    example_cmd->add_option("--q", q, "q-Racah q");
    example_cmd->add_option("--s", s, "q-Racah s");
    example_cmd->add_option("--s-star", s_star, "q-Racah s*");
    example_cmd->add_option("--r1", r1, "q-Racah r1");
    example_cmd->add_option("--r2", r2, "q-Racah r2");
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the roundtrip invariants on built-in fixtures");
    io_flags(selftest_cmd, false);
    selftest_cmd->add_flag("--corrupt", corrupt, "Corrupt the first fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << json{{"reason", "UsageError"}, {"detail", e.what()}}.dump() << "\n";
        return kExitMalformed;
    }

    JobSpec job;
    auto read_input = [&]() -> std::optional<JobResult> {
        std::string text;
        if (in_path.empty()) {
            text = read_all(in);
        } else {
            std::ifstream file(in_path, std::ios::binary);
            if (!file) return failure(kExitMalformed, "IOError", "cannot read " + in_path);
            text = read_all(file);
        }
        try {
            job.payload = json_io::parse(text);
        } catch (const Error& e) {
            return failure(kExitMalformed, std::string(errc_name(e.code())), e.detail());
        }
        return std::nullopt;
    };
    auto opt = [](const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); };

    std::optional<JobResult> early;
    if (validate_cmd->parsed()) {
        job.command = Command::Validate;
    } else if (canon_cmd->parsed()) {
        job.command = Command::Canon;
        job.variant = form;
    } else if (recognize_cmd->parsed()) {
        job.command = Command::Recognize;
        job.variant = shape;
    } else if (orbit_cmd->parsed()) {
        job.command = Command::Orbit;
    } else if (transition_cmd->parsed()) {
        job.command = Command::Transition;
    } else if (example_cmd->parsed()) {
        job.command = Command::Example;
        job.payload = json{{"family", family}, {"d", d},          {"prime", prime ? json(*prime) : json(nullptr)},
                           {"q", opt(q)},      {"s", opt(s)},     {"s_star", opt(s_star)},
                           {"r1", opt(r1)},    {"r2", opt(r2)}};
    } else {
        job.command = Command::Selftest;
        job.payload = json{{"corrupt", corrupt}};
    }
    if (job.command != Command::Example && job.command != Command::Selftest) early = read_input();

    const JobResult result = early ? *early : run(job);
    if (result.document) {
        const std::string text = json_io::emit(*result.document);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                err << json{{"reason", "IOError"}, {"detail", "cannot write " + out_path}}.dump() << "\n";
                return kExitMalformed;
            }
            file << text;
        }
    }
    if (result.diagnostic) err << result.diagnostic->dump() << "\n";
    return result.exit_code;
}

}  // namespace leonard::cli
