#pragma once

#include <string>
#include <vector>

namespace nsplab::io {

// Value formatted with 17 significant digits (round-trip exact for double).
std::string format_g17(double x);

// Comma-joined g17 row.
std::string csv_row(const std::vector<double>& values);

// Write-to-temp then atomic rename; no partially written file on failure.
void atomic_write(const std::string& path, const std::string& content);

} // namespace nsplab::io
