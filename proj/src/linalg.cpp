#include "spinc/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "spinc/errors.hpp"

namespace spinc::linalg {

using Eigen::MatrixXcd;

MatrixXcd intertwining_gram(std::span<const MatrixXcd> a, std::span<const MatrixXcd> b) {
  if (a.size() != b.size() || a.empty()) throw Error(Errc::ShapeMismatch, "generator families differ in length");
  const Eigen::Index ka = a.front().rows();
  const Eigen::Index kb = b.front().rows();
  const MatrixXcd ia = MatrixXcd::Identity(ka, ka);
  const MatrixXcd ib = MatrixXcd::Identity(kb, kb);
  MatrixXcd gram = MatrixXcd::Zero(ka * kb, ka * kb);
  for (std::size_t j = 0; j < a.size(); ++j) {
    // vec(T A) = (A^T (x) I) vec(T),  vec(B T) = (I (x) B) vec(T)
    const MatrixXcd at = a[j].transpose();
    const MatrixXcd& bj = b[j];
    gram += Eigen::kroneckerProduct(MatrixXcd(at.adjoint() * at), ib);
    gram += Eigen::kroneckerProduct(ia, MatrixXcd(bj.adjoint() * bj));
    gram -= Eigen::kroneckerProduct(MatrixXcd(at.adjoint()), bj);
    gram -= Eigen::kroneckerProduct(at, MatrixXcd(bj.adjoint()));
  }
  return gram;
}

namespace {

double cut(const Eigen::VectorXd& eigenvalues) {
  const double top = eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  return kGramRelativeThreshold * top;
}

}  // namespace

int gram_nullity(const MatrixXcd& gram) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double threshold = cut(ev);
  int nullity = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) nullity += ev(i) <= threshold ? 1 : 0;
  return nullity;
}

MatrixXcd gram_nullspace(const MatrixXcd& gram) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(gram);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double threshold = cut(ev);
  // eigenvalues come sorted ascending
  Eigen::Index count = 0;
  while (count < ev.size() && ev(count) <= threshold) ++count;
  return solver.eigenvectors().leftCols(count);
}

int numerical_rank(const MatrixXcd& m) {
  if (m.size() == 0) return 0;
  const MatrixXcd gram = m.rows() >= m.cols() ? MatrixXcd(m.adjoint() * m) : MatrixXcd(m * m.adjoint());
  return static_cast<int>(gram.rows()) - gram_nullity(gram);
}

}  // namespace spinc::linalg
