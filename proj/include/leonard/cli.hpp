#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "leonard/json_io.hpp"

namespace leonard::cli {

enum class Command { Validate, Canon, Recognize, Orbit, Transition, Example, Selftest };

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitFieldConstraint = 3;

struct JobSpec {
    Command command = Command::Validate;
    /// The input document for validate/canon/recognize/orbit/transition;
    /// the family parameters {"family", "d", "prime", "q", "s", "s_star", "r1", "r2"}
    /// for example; {"corrupt"} for selftest.
    json_io::json payload;
    /// "lbub" or "tdd" for canon and recognize.
    std::string variant;
};

struct JobResult {
    int exit_code = kExitOk;
    std::optional<json_io::json> document;
    /// {"reason", "detail"} for the error stream.
    std::optional<json_io::json> diagnostic;
};

/// Exit code for a library error raised while decoding input.
int decode_exit_code(Errc code) noexcept;
/// Exit code for a library error raised by the operation itself.
int operation_exit_code(Errc code) noexcept;

JobResult run(const JobSpec& job);

/// Parses command-line flags, reads the input, runs the job and writes the
/// document and diagnostics. Returns the exit code.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace leonard::cli
