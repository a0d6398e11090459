#ifndef FDEPTH_CSV_HPP
#define FDEPTH_CSV_HPP

#include <filesystem>
#include <string>

#include "fdepth/sample.hpp"

namespace fdepth {

// Sample file format: plain UTF-8 CSV, '.' decimal, no header.
// Row 1 holds the grid points t_1..t_N; rows 2..n+1 hold one curve each.
// Ragged rows, non-numeric fields and non-finite values are rejected.
FunctionalSample read_sample_csv(const std::filesystem::path& path);
void write_sample_csv(const std::filesystem::path& path,
                      const FunctionalSample& sample);

// 17 significant digits; parses back to the identical double.
std::string format_double(double value);

// Writes via a temporary file in the target directory plus rename, so
// readers never observe a partially written file.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace fdepth

#endif  // FDEPTH_CSV_HPP
