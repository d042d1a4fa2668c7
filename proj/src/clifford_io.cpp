#include <cmath>

#include "spinc/clifford.hpp"

namespace spinc {

nlohmann::json to_json(const Multivectord& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, coef] : x.terms()) {
    terms.push_back({{"mask", mask}, {"re", coef.real()}, {"im", coef.imag()}});
  }
  return {{"n", x.dim()}, {"diag", x.form().diagonal()}, {"terms", terms}};
}

Multivectord multivector_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto diag = j.at("diag").get<std::vector<double>>();
    if (static_cast<int>(diag.size()) != n) throw Error(Errc::ParseError, "diag length differs from n");
    std::vector<Multivectord::Term> terms;
    long long previous = -1;
    for (const auto& t : j.at("terms")) {
      const long long mask = t.at("mask").get<long long>();
      if (mask <= previous) throw Error(Errc::ParseError, "masks must be strictly ascending");
      if (mask < 0 || mask >= (1LL << n)) throw Error(Errc::ParseError, "mask out of range");
      previous = mask;
      const double re = t.at("re").get<double>();
      const double im = t.at("im").get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw Error(Errc::NonFinite, "non-finite coefficient");
      terms.emplace_back(static_cast<Blade>(mask), std::complex<double>(re, im));
    }
    return Multivectord(BilinearForm(std::move(diag)), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace spinc
