#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reactembed {

std::vector<std::string_view> split_tabs(std::string_view line);
std::string_view strip_cr(std::string_view line);

/// Whole-string numeric parses; nullopt on trailing garbage or empty input.
std::optional<double> parse_double(std::string_view s);
std::optional<std::uint64_t> parse_u64(std::string_view s);
std::optional<std::int64_t> parse_i64(std::string_view s);

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view bytes);

/// Stable per-purpose seed stream: hashes the base seed together with a tag.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

}  // namespace reactembed
