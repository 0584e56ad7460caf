#pragma once

// Small text helpers shared by the readers and writers.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace jnet::text {

/// Splits one CSV record on commas. Fields may be double-quoted, with `""`
/// as an escaped quote. Surrounding whitespace of unquoted fields is trimmed.
std::vector<std::string> split_csv(std::string_view line);

/// Quotes a CSV field when it contains a comma, quote or surrounding space.
std::string csv_field(std::string_view field);

std::string_view trim(std::string_view s) noexcept;

/// Shortest decimal that round-trips to the same double.
std::string decimal(double x);

/// Fixed-point with `digits` decimals, used for table columns.
std::string fixed(double x, int digits);

/// Reads a whole file; throws jnet::Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary sibling and renames it over `path`, so a
/// failed write never leaves a truncated file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace jnet::text
