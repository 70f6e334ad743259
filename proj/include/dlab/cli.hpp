#ifndef DLAB_CLI_HPP
#define DLAB_CLI_HPP

#include "dlab/verifier.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab::cli {

enum class OutputFormat { kText, kJsonl };

struct RunConfig {
    std::vector<ClaimId> claims;
    SuiteBounds bounds;
    OutputFormat format = OutputFormat::kText;
    std::optional<std::string> output_path;
    unsigned parallelism = 1;
    bool timing = true;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "all" or a comma-separated list of claim names; throws ConfigError on an unknown name.
std::vector<ClaimId> parse_claim_list(const std::string& text);

/// Throws ConfigError when a bound, prime or worker count is out of range.
void validate(const RunConfig& config);

/// One line, no trailing newline.
std::string format_text(const Report& r, bool timing);
std::string format_jsonl(const Report& r, bool timing);

/// 0 when no theorem claim failed and no conjecture found a counterexample,
/// 1 when a theorem claim failed, 2 when only conjectures failed.
int exit_status(const std::vector<Report>& reports);

/// Runs the suite and writes reports to the configured destination, or to `out`.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `verify ...` or `eval <expr> ...`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dlab::cli

#endif // DLAB_CLI_HPP
