#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hullgauge::csvio {

// Minimal comma-separated I/O. Fields never contain commas or quotes in any
// of the formats used here, so no quoting rules are implemented.
std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path);

// Writes via a temp file in the same directory, then renames into place.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// Shortest decimal representation that parses back to the same double.
std::string fmt(double v);
std::string fmt(long v);
std::string fmt(int v);
std::string fmt(std::uint64_t v);

double parse_double(const std::string& s);
long parse_long(const std::string& s);

}  // namespace hullgauge::csvio
