#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinc/universal_spinc.hpp"

namespace spinc {

/// Clifford module structure on the exterior algebra of C^m, basis |S> for
/// subsets S (bit masks), dimension 2^m:
///   gamma_l     = a^dag_l - a_l
///   gamma_{m+l} = i (a^dag_l + a_l)
/// where a^dag_l |S> = (-1)^{|S below l|} |S + l> is the wedge with e_l and
/// a_l its adjoint (contraction). Then rho(v)^2 = -|v|^2 I.
std::vector<Eigen::MatrixXcd> exterior_gammas(int m);

/// Lambda(U) |S> = sum_T det U[T, S] |T> over |T| = |S|.
Eigen::MatrixXcd exterior_power(const Eigen::MatrixXcd& u);

/// [[Re U, -Im U], [Im U, Re U]], acting on (x, y) with z = x + iy.
Eigen::MatrixXd realify(const Eigen::MatrixXcd& u);

/// max_j ||rho(p'(U) e_j) - Lambda(U) rho(e_j) Lambda(U)^{-1}||_F in the exterior model.
double exterior_equivariance_residual(const Eigen::MatrixXcd& u);

/// U(m) solution instance transported to build_gamma(2m) through an
/// intertwiner from the exterior model. Throws NotUnitary when some U is not
/// unitary to 1e-10.
SolutionInstance unitary_exterior_instance(int m, std::span<const Eigen::MatrixXcd> us,
                                           std::span<const ClosureHint> hints = {});

}  // namespace spinc
