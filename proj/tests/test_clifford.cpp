#include <gtest/gtest.h>

#include <random>

#include "oracles/clifford_words.hpp"
#include "spinc/clifford.hpp"

using namespace spinc;

using cd = std::complex<double>;

namespace {

oracle::Word word_of(Blade mask) {
  oracle::Word w;
  for (int j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1u) w.push_back(j);
  }
  return w;
}

Blade mask_of(const oracle::Word& w) {
  Blade m = 0;
  for (int j : w) m |= Blade{1} << j;
  return m;
}

Multivectord random_mv(const BilinearForm& form, std::mt19937& gen) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<Multivectord::Term> terms;
  for (Blade m = 0; m < (Blade{1} << form.dim()); ++m) terms.emplace_back(m, cd(coef(gen), coef(gen)));
  return Multivectord(form, terms);
}

}  // namespace

TEST(BladeMul, MatchesRewritingOracleOnAllBladePairs) {
  for (const auto& diag : {std::vector<double>{-1, -1, -1}, std::vector<double>{1, -1, 2}, std::vector<double>{-3, 1}}) {
    const BilinearForm form(diag);
    const Blade size = Blade{1} << form.dim();
    for (Blade a = 0; a < size; ++a) {
      for (Blade b = 0; b < size; ++b) {
        oracle::Word w = word_of(a);
        const oracle::Word wb = word_of(b);
        w.insert(w.end(), wb.begin(), wb.end());
        const auto [nf, factor] = oracle::normal_form(w, diag);
        const BladeProduct p = blade_mul(a, b, form);
        EXPECT_EQ(p.mask, mask_of(nf));
        EXPECT_EQ(p.factor, factor);
      }
    }
  }
}

TEST(Multivector, ProductMatchesRewritingOracle) {
  std::mt19937 gen(7);
  for (int n = 1; n <= 3; ++n) {
    const std::vector<double> diag(n, -1.0);
    const BilinearForm form(diag);
    for (int trial = 0; trial < 20; ++trial) {
      const Multivectord x = random_mv(form, gen), y = random_mv(form, gen);
      oracle::Element ox, oy;
      for (const auto& [m, c] : x.terms()) ox[word_of(m)] = c;
      for (const auto& [m, c] : y.terms()) oy[word_of(m)] = c;
      const oracle::Element expected = oracle::multiply(ox, oy, diag);
      const Multivectord got = x * y;
      ASSERT_EQ(got.terms().size(), expected.size());
      for (const auto& [w, c] : expected) EXPECT_EQ(got.coefficient(mask_of(w)), c);
    }
  }
}

TEST(Multivector, GeneratorRelations) {
  const BilinearForm form = BilinearForm::negative_definite(4);
  for (int j = 0; j < 4; ++j) {
    for (int l = 0; l < 4; ++l) {
      const auto ej = Multivectord::basis(form, j), el = Multivectord::basis(form, l);
      const Multivectord anti = ej * el + el * ej;
      const Multivectord expected = Multivectord::scalar(form, j == l ? -2.0 : 0.0);
      EXPECT_EQ(anti, expected);
    }
  }
}

TEST(Multivector, ExactAssociativity) {
  const BilinearForm form({-1, 1, -1, 2});
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_exact = [&] {
    std::vector<Multivectorq::Term> terms;
    for (Blade m = 0; m < 16; ++m) terms.emplace_back(m, GaussianRational(Rational(coef(gen)), Rational(coef(gen))));
    return Multivectorq(form, terms);
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_exact(), y = random_exact(), z = random_exact();
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(Multivector, ReverseIsAntiAutomorphism) {
  std::mt19937 gen(3);
  const BilinearForm form = BilinearForm::negative_definite(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Multivectord x = random_mv(form, gen), y = random_mv(form, gen);
    EXPECT_LT(coefficient_distance(reverse(x * y), reverse(y) * reverse(x)), 1e-12);
  }
}

TEST(Multivector, FormMismatchRejected) {
  const auto x = Multivectord::basis(BilinearForm::negative_definite(2), 0);
  const auto y = Multivectord::basis(BilinearForm::negative_definite(3), 0);
  try {
    (void)(x * y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FormMismatch);
  }
}

TEST(Multivector, GradeHelpers) {
  const BilinearForm form = BilinearForm::negative_definite(3);
  const Multivectord x(form, {{0b000, 2.0}, {0b011, 1.0}, {0b111, cd(0, 1)}});
  EXPECT_EQ(grades(x), (std::set<int>{0, 2, 3}));
  EXPECT_FALSE(is_even(x));
  EXPECT_TRUE(is_even(grade_part(x, 2)));
  EXPECT_EQ(reverse(x).coefficient(0b111), cd(0, -1));
}

TEST(Multivector, JsonRoundTrip) {
  const BilinearForm form({-1, 1, 2});
  const Multivectord x(form, {{0b001, cd(1.5, -2)}, {0b110, cd(0, 3)}});
  EXPECT_EQ(multivector_from_json(to_json(x)), x);
}
