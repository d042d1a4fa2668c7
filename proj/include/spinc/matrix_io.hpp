#pragma once

#include <string>

#include <Eigen/Dense>
#include <json.hpp>

namespace spinc {

/// {"rows": r, "cols": c, "re": [row-major], "im": [row-major]}
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
/// Throws ParseError on malformed input or size mismatch, NonFinite on NaN/Inf.
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

Eigen::MatrixXcd load_matrix(const std::string& path);
void save_matrix(const Eigen::MatrixXcd& m, const std::string& path);

/// Real matrix from the same format; every imaginary entry must be zero.
Eigen::MatrixXd load_real_matrix(const std::string& path);

}  // namespace spinc
