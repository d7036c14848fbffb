#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unipmn::cli {

/// Exit codes: 0 success, 1 a check verb found a violation, 2 bad input.
enum ExitCode : int { kOk = 0, kViolation = 1, kBadInput = 2 };

/// Runs one command line (without the program name). The JSON result goes
/// to `out`, error objects and usage text to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a batch-file line into words; single and double quotes group.
std::vector<std::string> split_words(const std::string& line);

}  // namespace unipmn::cli
