#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spinc::linalg {

/// Relative eigenvalue cut for the Gram matrices below.
inline constexpr double kGramRelativeThreshold = 1e-9;

/// Gram matrix L^H L of the stacked linear map
///   T  ->  (T a_j - b_j T)_j
/// acting on column-major vec(T). Its kernel is the space of intertwiners
/// from the a-family to the b-family; with a == b it is the commutant.
Eigen::MatrixXcd intertwining_gram(std::span<const Eigen::MatrixXcd> a, std::span<const Eigen::MatrixXcd> b);

/// Number of Gram eigenvalues at or below kGramRelativeThreshold * largest.
int gram_nullity(const Eigen::MatrixXcd& gram);

/// Orthonormal kernel basis of a Gram matrix, one column per null vector.
Eigen::MatrixXcd gram_nullspace(const Eigen::MatrixXcd& gram);

/// Rank of an arbitrary matrix via the Gram matrix of its smaller side.
int numerical_rank(const Eigen::MatrixXcd& m);

/// Largest absolute entry.
inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace spinc::linalg
