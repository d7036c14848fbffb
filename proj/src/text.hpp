#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unipmn::detail {

/// Splits "a|b" at the single '|'; throws ParseError if there is not exactly one.
std::pair<std::string_view, std::string_view> split_rows(std::string_view text);

/// Parses a comma-separated list of non-negative decimal integers.
/// An empty (or all-blank) string yields an empty list.
std::vector<int> parse_nonnegative_list(std::string_view text);

std::string join_ints(const std::vector<int>& values);

}  // namespace unipmn::detail
