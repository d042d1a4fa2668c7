#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "spinc/errors.hpp"
#include "spinc/matrix_io.hpp"
#include "spinc/random.hpp"
#include "spinc/report.hpp"

using namespace spinc;
using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

Errc load_error(const std::string& text) {
  const auto path = temp_file("spinc_io_case.json");
  std::ofstream(path) << text;
  try {
    load_matrix(path.string());
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST(MatrixIo, SaveLoadRoundTripIsExact) {
  Rng rng(31, "io");
  MatrixXcd m(3, 2);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.complex_normal() * 1e-7;
  const auto path = temp_file("spinc_roundtrip.json");
  save_matrix(m, path.string());
  EXPECT_EQ(load_matrix(path.string()), m);
}

TEST(MatrixIo, IdentityFixture) {
  const auto path = temp_file("spinc_identity.json");
  std::ofstream(path) << R"({"rows": 2, "cols": 2, "re": [1, 0, 0, 1], "im": [0, 0, 0, 0]})";
  EXPECT_EQ(load_matrix(path.string()), MatrixXcd::Identity(2, 2));
  EXPECT_EQ(load_real_matrix(path.string()), Eigen::MatrixXd::Identity(2, 2));
}

TEST(MatrixIo, RowMajorLayout) {
  const MatrixXcd m = matrix_from_json(nlohmann::json::parse(R"({"rows": 2, "cols": 2, "re": [1, 2, 3, 4], "im": [0, 0, 0, 0]})"));
  EXPECT_EQ(m(0, 1), cd(2.0));
  EXPECT_EQ(m(1, 0), cd(3.0));
}

TEST(MatrixIo, RejectsMalformedInput) {
  EXPECT_EQ(load_error(R"({"rows": 3, "cols": 2, "re": [1, 0, 0, 1], "im": [0, 0, 0, 0]})"), Errc::ParseError);
  EXPECT_EQ(load_error(R"({"rows": 1, "cols": 1, "re": ["NaN"], "im": [0]})"), Errc::NonFinite);
  EXPECT_EQ(load_error(R"({"rows": 1, "cols": 1, "re": [1e999], "im": [0]})"), Errc::NonFinite);
  EXPECT_EQ(load_error("not json"), Errc::ParseError);
  EXPECT_EQ(load_error(R"({"rows": 1, "cols": 1, "re": [1], "im": [1, 2]})"), Errc::ParseError);
  EXPECT_THROW(load_matrix(temp_file("spinc_missing_file.json").string()), Error);
}

TEST(MatrixIo, RealLoaderRejectsComplexEntries) {
  const auto path = temp_file("spinc_complex.json");
  save_matrix(MatrixXcd::Identity(2, 2) * cd(0, 1), path.string());
  EXPECT_THROW(load_real_matrix(path.string()), Error);
}

TEST(Report, JsonShape) {
  CheckReport r;
  r.check = "x.y";
  r.params = {{"n", 3}};
  r.residual = 1e-13;
  r.tol = 1e-12;
  r.pass = true;
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j.at("check"), "x.y");
  EXPECT_TRUE(j.at("runtimeMs").is_null());
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_FALSE(j.contains("error") && !j.at("error").is_null());
  const std::string lines = render_reports({r, r}, true, false);
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 2);
  EXPECT_TRUE(nlohmann::json::parse(render_reports({r}, false, true)).is_array());
}

TEST(Rng, StreamsAreIndependentOfOrder) {
  Rng a(1, "alpha"), b(1, "beta"), a2(1, "alpha");
  const auto x = a.next_u64();
  (void)b.next_u64();
  EXPECT_EQ(x, a2.next_u64());
  EXPECT_NE(Rng(1, "alpha").next_u64(), Rng(2, "alpha").next_u64());
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Rng, RotationsAndUnitaries) {
  Rng rng(2, "groups");
  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXd r = rng.rotation(n);
    EXPECT_LT((r.transpose() * r - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-12);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
    const MatrixXcd u = rng.unitary(n);
    EXPECT_LT((u.adjoint() * u - MatrixXcd::Identity(n, n)).norm(), 1e-12);
  }
  for (int i = 0; i < 100; ++i) {
    const double v = rng.uniform();
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 1.0);
    const int k = rng.uniform_int(-2, 2);
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 2);
  }
}
