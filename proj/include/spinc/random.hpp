#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace spinc {

/// Seeded random source with one independent stream per named check.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Its state is seeded through std::seed_seq from the 64-bit run
/// seed and the FNV-1a hash of the stream name, so the draws of one check do
/// not depend on which other checks ran before it. Floating-point variates
/// are derived here (53-bit uniforms, Box-Muller normals) rather than through
/// <random> distributions, whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string_view stream = {});

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double normal();
  std::complex<double> complex_normal() { return {normal(), normal()}; }

  Eigen::VectorXd normal_vector(int n);
  Eigen::VectorXd unit_vector(int n);
  /// Haar-distributed element of SO(n).
  Eigen::MatrixXd rotation(int n);
  /// Haar-distributed element of U(m).
  Eigen::MatrixXcd unitary(int m);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text);

}  // namespace spinc
