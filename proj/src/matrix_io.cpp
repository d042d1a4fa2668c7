#include "spinc/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <string_view>

#include "spinc/errors.hpp"

namespace spinc {

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j) {
  try {
    const long long rows = j.at("rows").get<long long>();
    const long long cols = j.at("cols").get<long long>();
    if (rows < 0 || cols < 0) throw Error(Errc::ParseError, "negative matrix shape");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array()) throw Error(Errc::ParseError, "re and im must be arrays");
    const auto count = static_cast<std::size_t>(rows * cols);
    if (re.size() != count || im.size() != count) throw Error(Errc::ParseError, "data length differs from rows*cols");
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (!re[idx].is_number() || !im[idx].is_number()) throw Error(Errc::NonFinite, "entry is not a finite number");
      const double a = re[idx].get<double>();
      const double b = im[idx].get<double>();
      if (!std::isfinite(a) || !std::isfinite(b)) throw Error(Errc::NonFinite, "entry is not a finite number");
      m(static_cast<Eigen::Index>(idx / cols), static_cast<Eigen::Index>(idx % cols)) = {a, b};
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Eigen::MatrixXcd load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    // literals such as 1e999 overflow to infinity
    if (std::string_view(e.what()).find("number overflow") != std::string_view::npos) {
      throw Error(Errc::NonFinite, e.what());
    }
    throw Error(Errc::ParseError, e.what());
  }
  return matrix_from_json(j);
}

void save_matrix(const Eigen::MatrixXcd& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << matrix_to_json(m).dump() << '\n';
}

Eigen::MatrixXd load_real_matrix(const std::string& path) {
  const Eigen::MatrixXcd m = load_matrix(path);
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() != 0.0) throw Error(Errc::ParseError, "expected a real matrix");
  return m.real();
}

}  // namespace spinc
