#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>
#include <vector>

namespace tcdm {

/// Format a double with 17 significant digits (%.17g), enough to round-trip
/// any IEEE-754 binary64 value exactly through text.
std::string format_g17(double x);

/// Write a matrix as CSV, one row per line, %.17g fields. Optional header
/// line of column names. Throws io_failure on any write problem.
void write_csv_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& mat,
                      const std::vector<std::string>& header = {});

/// Parse a headerless numeric CSV. Every row must have the same number of
/// fields; fields must parse fully as doubles. Throws missing_file,
/// shape_mismatch or non_finite.
Eigen::MatrixXd read_csv_matrix(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace tcdm
