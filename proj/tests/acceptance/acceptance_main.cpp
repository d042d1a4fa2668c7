// Acceptance run: one PASS/FAIL line per criterion, each timed against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "oracles/gauss_hermite.hpp"
#include "oracles/trace_adjoint.hpp"
#include "spinc/dirac.hpp"
#include "spinc/exterior_model.hpp"
#include "spinc/random.hpp"
#include "spinc/suites.hpp"
#include "spinc/universal_spinc.hpp"
#include "spinc/weyl_mp.hpp"

using namespace spinc;
using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = o.pass && secs < budget;
  if (!ok) ++failures;
  std::printf("%s %s  %s  [%s; %.2f s of %.0f s]\n", id, ok ? "PASS" : "FAIL", title, o.detail.c_str(), secs, budget);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string stream(const char* ac, int n) { return fmt("%s.n=%02d", ac, n); }

bool throws_not_scalar(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == Errc::NotScalar;
  }
  return false;
}

double dense_mp_residual(const HermiteModel& model, const MpCElement& g, const std::vector<double>& y) {
  const HermiteModel work(model.modes(), g.workCutoff);
  const MatrixXcd lhs = g.u * MatrixXcd(clifford_mult(work, y)) * g.u.adjoint();
  const Eigen::VectorXd sy = g.s * Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
  const MatrixXcd rhs(clifford_mult(work, std::span<const double>(sy.data(), y.size())));
  double sum = 0.0;
  for (Eigen::Index c : work.interior_indices(model.interior_bound())) sum += (lhs - rhs).col(c).squaredNorm();
  return std::sqrt(sum);
}

Outcome ac1() {
  double worst = 0.0;
  int reps = 0;
  bool irreducible = true;
  for (int n = 1; n <= 10; ++n) {
    for (int b : {+1, -1}) {
      if (n % 2 == 0 && b < 0) continue;
      const GammaRepd rep = build_gamma(n, b);
      worst = std::max(worst, relation_error(rep));
      irreducible = irreducible && commutant_dim(rep) == 1;
      ++reps;
    }
  }
  return {worst < 1e-12 && irreducible,
          fmt("%d representations, max relation error %.1e, commutants %s", reps, worst, irreducible ? "scalar" : "NOT scalar")};
}

Outcome ac2() {
  MatrixXcd g1(2, 2), g2(2, 2), g3(2, 2);
  g1 << cd(0, 1), 0, 0, cd(0, -1);
  g2 << 0, -1, 1, 0;
  g3 << 0, cd(0, 1), cd(0, 1), 0;
  const GammaRepd given = classical_n3_gammas();
  const bool literal = given.gamma(0) == g1 && given.gamma(1) == g2 && given.gamma(2) == g3;

  const GammaRepq exact = to_exact(given);
  bool relations = true;
  for (int j = 0; j < 3; ++j) {
    for (int l = 0; l < 3; ++l) {
      const GammaRepq::Matrix anti = exact.gamma(j) * exact.gamma(l) + exact.gamma(l) * exact.gamma(j);
      const GammaRepq::Matrix expected = GammaRepq::Matrix::Identity(2, 2) * GaussianRational(j == l ? -2 : 0);
      relations = relations && anti == expected;
    }
  }
  int linked = 0, branch = 0;
  double residual = 0.0;
  for (int b : {+1, -1}) {
    const GammaRepd target = build_gamma(3, b);
    if (const auto t = intertwiner_solve(given, target)) {
      ++linked;
      branch = b;
      residual = intertwiner_residual(*t, given.gammas(), target.gammas());
    }
  }
  return {literal && relations && linked == 1 && residual < 1e-10,
          fmt("exact relations %s, intertwined with branch %+d only (%d found), residual %.1e",
              relations ? "hold" : "FAIL", branch, linked, residual)};
}

Outcome ac3() {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const GammaRepd rep = build_gamma(n);
    Rng rng(0, stream("AC3", n));
    for (int i = 0; i < 100; ++i) {
      const MatrixXd r = rng.rotation(n);
      const SpinElement a = lift_rotation(r);
      worst = std::max(worst, (oracle::trace_adjoint(rep.gammas(), rep_apply(rep, a.mv())) - r).norm());
    }
  }
  return {worst < 1e-9, fmt("700 rotations, max ||Ad(lift R) - R||_F %.1e", worst)};
}

Outcome ac4() {
  bool ok = true;
  std::string seen;
  for (int n : {3, 5, 8}) {
    const int once = path_monodromy(plane_rotation_loop(n, 0, 1, 1, 1000));
    const int twice = path_monodromy(plane_rotation_loop(n, 0, 1, 2, 2000));
    ok = ok && once == -1 && twice == 1;
    seen += fmt("n=%d:%+d/%+d ", n, once, twice);
  }
  return {ok, "loop/doubled " + seen};
}

Outcome ac5() {
  double roundtrip = 0.0, homomorphism = 0.0;
  int rejected = 0, adversarial = 0;
  for (int n = 1; n <= 8; ++n) {
    const GammaRepd rep = build_gamma(n);
    Rng rng(0, stream("AC5", n));
    auto sample = [&] { return SpinCElement{random_spin(rng, n), rng.complex_normal()}; };
    auto fact = [&](const SpinCElement& g) {
      return factorize(rep, oracle::trace_adjoint(rep.gammas(), rep_apply(rep, g.a.mv())), epsilon(g, rep)).element;
    };
    for (int i = 0; i < 200; ++i) {
      const SpinCElement g = sample();
      roundtrip = std::max(roundtrip, class_distance(fact(g), g));
    }
    for (int i = 0; i < 50; ++i) {
      const SpinCElement g = sample(), h = sample();
      homomorphism = std::max(homomorphism, class_distance((fact(g) * fact(h)).canonical(), fact(g * h)));
    }
  }
  Rng rng(0, "AC5.adversarial");
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 7;
    const GammaRepd rep = build_gamma(n);
    const SpinElement a = random_spin(rng, n);
    const MatrixXcd eps = rng.complex_normal() * rep_apply(rep, a.mv());
    ++adversarial;
    if (i % 2 == 0) {
      const MatrixXcd w = rng.unitary(rep.k());
      rejected += throws_not_scalar([&] { factorize(rep, adjoint_matrix(a), eps * w); });
    } else {
      const SpinElement other = random_spin(rng, n);
      rejected += throws_not_scalar([&] { factorize(rep, adjoint_matrix(other), eps); });
    }
  }
  return {roundtrip < 1e-8 && homomorphism < 1e-8 && rejected == adversarial,
          fmt("round trip %.1e over 1600, homomorphism %.1e over 400, NotScalar %d/%d", roundtrip, homomorphism, rejected,
              adversarial)};
}

Outcome ac6() {
  double equivariance = 0.0, pmap = 0.0, unit = 0.0;
  for (int m = 1; m <= 4; ++m) {
    Rng rng(0, stream("AC6", m));
    std::vector<MatrixXcd> us;
    for (int i = 0; i < 50; ++i) us.push_back(rng.unitary(m));
    for (const auto& u : us) equivariance = std::max(equivariance, exterior_equivariance_residual(u));
    const SolutionInstance inst = unitary_exterior_instance(m, us);
    const GammaRepd rep = build_gamma(2 * m);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const FactorizationResult f = factorize(rep, inst.samples[i].pPrime, inst.samples[i].epsPrime);
      pmap = std::max(pmap, (p_map(f.element) - realify(us[i])).norm());
      unit = std::max(unit, std::abs(std::abs(f.element.c) - 1.0));
    }
  }
  return {equivariance < 1e-10 && pmap < 1e-9 && unit < 1e-9,
          fmt("equivariance %.1e, |p(f) - realify| %.1e, ||c| - 1| %.1e", equivariance, pmap, unit)};
}

Outcome ac7() {
  double worst = 0.0;
  std::size_t checked = 0;
  for (int n = 1; n <= 8; ++n) {
    const GammaRepd rep = build_gamma(n);
    Rng rng(0, stream("AC7.spin", n));
    const InstanceReport r = bijection_roundtrip(rep, spin_instance(rep, rng, 30, 20));
    worst = std::max(worst, r.worst);
    checked += r.checked;
  }
  for (int m = 1; m <= 4; ++m) {
    Rng rng(0, stream("AC7.unitary", m));
    std::vector<MatrixXcd> us;
    for (int i = 0; i < 30; ++i) us.push_back(rng.unitary(m));
    const InstanceReport r = bijection_roundtrip(build_gamma(2 * m), unitary_exterior_instance(m, us));
    worst = std::max(worst, r.worst);
    checked += r.checked;
  }
  return {worst < 1e-8, fmt("%zu samples, both directions, max residual %.1e", checked, worst)};
}

Outcome ac8() {
  int exact = 0, total = 0;
  std::string mismatch;
  auto run = [&](const GammaRepq& rep, Rng& rng) {
    for (int i = 0; i < 100; ++i) {
      const SquareCheck c = verify_square(rep, random_poly_spinor(rng, rep.n(), rep.k(), 5));
      ++total;
      if (c.equal) {
        ++exact;
      } else if (mismatch.empty()) {
        mismatch = c.mismatch;
      }
    }
  };
  for (int n = 2; n <= 8; ++n) {
    for (int b : {+1, -1}) {
      if (n % 2 == 0 && b < 0) continue;
      Rng rng(0, fmt("AC8.n=%02d.b=%+d", n, b));
      run(to_exact(build_gamma(n, b)), rng);
    }
  }
  Rng classical_rng(0, "AC8.classical");
  run(to_exact(classical_n3_gammas()), classical_rng);

  double wave = 0.0;
  Rng rng(0, "AC8.plane");
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 7;
    const GammaRepd rep = build_gamma(n);
    PlaneWaveSpinor w{rng.normal_vector(n), Eigen::VectorXcd(rep.k())};
    for (int a = 0; a < rep.k(); ++a) w.v(a) = rng.complex_normal();
    wave = std::max(wave, plane_wave_check(rep, w));
  }
  return {exact == total && wave < 1e-11,
          fmt("P^2 f = Lap f exactly in %d/%d cases, plane-wave residual %.1e%s", exact, total, wave,
              mismatch.empty() ? "" : (" first mismatch " + mismatch).c_str())};
}

Outcome ac9() {
  double ladder = 0.0;
  for (int cutoff : {16, 24, 32}) {
    ladder = std::max(ladder, (ladder_position(cutoff) - oracle::position_elements(cutoff)).cwiseAbs().maxCoeff());
    ladder = std::max(ladder, (ladder_derivative(cutoff) - oracle::derivative_elements(cutoff)).cwiseAbs().maxCoeff());
  }
  double ccr16 = 0.0, cross = 0.0;
  for (int modes : {1, 2}) {
    const HermiteModel model(modes, 16);
    for (int a = 0; a < 2 * modes; ++a) {
      for (int b = 0; b < 2 * modes; ++b) {
        std::vector<double> v(2 * modes, 0.0), w(2 * modes, 0.0);
        v[a] = 1.0;
        w[b] = 1.0;
        ccr16 = std::max(ccr16, ccr_residual(model, v, w));
      }
    }
    if (modes == 2) {
      const MatrixXcd x0(model.xop(0)), x1(model.xop(1)), d0(model.dop(0)), d1(model.dop(1));
      for (const auto& [p, q] : {std::pair{&x0, &x1}, {&x0, &d1}, {&d0, &x1}, {&d0, &d1}}) {
        cross = std::max(cross, ((*p) * (*q) - (*q) * (*p)).cwiseAbs().maxCoeff());
      }
    }
  }
  std::vector<double> refinement;
  for (int cutoff : {16, 24, 32}) {
    const HermiteModel model(1, cutoff);
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        std::vector<double> v(2, 0.0), w(2, 0.0);
        v[a] = 1.0;
        w[b] = 1.0;
        worst = std::max(worst, ccr_residual(model, v, w, 13));
      }
    }
    refinement.push_back(worst);
  }
  const bool monotone = refinement[1] <= refinement[0] && refinement[2] <= refinement[1];
  return {ladder < 1e-12 && ccr16 < 1e-10 && monotone && cross == 0.0,
          fmt("ladder vs quadrature %.1e, CCR at N=16 %.1e, levels<=13 %.1e/%.1e/%.1e, cross-mode %.1e", ladder, ccr16,
              refinement[0], refinement[1], refinement[2], cross)};
}

Outcome ac10() {
  const HermiteModel model(1, 32);
  Rng rng(0, "AC10");
  double equivariance = 0.0, roundtrip = 0.0;
  int rejected = 0, perturbed = 0;
  const std::pair<const char*, MatrixXd> families[] = {{"oscillator", oscillator_hamiltonian(1, 0)},
                                                       {"squeeze", squeeze_hamiltonian(1, 0)},
                                                       {"shear", shear_hamiltonian(1, 0)}};
  for (const auto& [name, h] : families) {
    for (double t : {-1.0, -0.5, 0.5, 1.0, rng.uniform(-1.0, 1.0)}) {
      const MpCElement g = mp_one_param(model, h, t);
      for (const auto& y : {std::vector<double>{1, 0}, std::vector<double>{0, 1}, std::vector<double>{rng.normal(), rng.normal()}}) {
        equivariance = std::max(equivariance, dense_mp_residual(model, g, y));
      }
      const cd z = std::polar(rng.uniform(0.5, 2.0), rng.uniform(-3.0, 3.0));
      const MpFactorization f = mp_factorize(model, g.s, z * g.u);
      roundtrip = std::max(roundtrip, mp_class_distance(model, f.u, f.c, g.u, z));
      MatrixXcd bad = z * g.u;
      bad.col(2) *= cd(1.0, 0.01);
      ++perturbed;
      rejected += throws_not_scalar([&] { mp_factorize(model, g.s, bad); });
    }
  }
  const MpCElement turn = mp_one_param(model, oscillator_hamiltonian(1, 0), 2.0 * std::numbers::pi);
  const double phase = (turn.u + MatrixXcd::Identity(turn.u.rows(), turn.u.cols())).cwiseAbs().maxCoeff();
  return {equivariance < 1e-6 && roundtrip < 1e-8 && rejected == perturbed && phase < 1e-10,
          fmt("equivariance %.1e, factorize %.1e, NotScalar %d/%d, max |U(2pi) + I| %.1e", equivariance, roundtrip,
              rejected, perturbed, phase)};
}

Outcome ac11() {
  RunConfig cfg;
  cfg.seed = 1;
  const auto start = std::chrono::steady_clock::now();
  const auto first = run_suite("all", cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto second = run_suite("all", cfg);
  const std::string a = render_reports(first, true, false), b = render_reports(second, true, false);
  const bool passing = all_pass(first);
  return {a == b && passing && secs < 60.0,
          fmt("%zu reports, identical %s, all pass %s, one full run %.1f s", first.size(), a == b ? "yes" : "NO",
              passing ? "yes" : "NO", secs)};
}

}  // namespace

int main() {
  criterion("AC1", "gamma relations and scalar commutant", 5, ac1);
  criterion("AC2", "classical 2x2 triple", 1, ac2);
  criterion("AC3", "spin lift round trip", 10, ac3);
  criterion("AC4", "double-cover monodromy", 5, ac4);
  criterion("AC5", "factorization", 20, ac5);
  criterion("AC6", "unitary instance", 20, ac6);
  criterion("AC7", "bijection round trips", 10, ac7);
  criterion("AC8", "Dirac square", 15, ac8);
  criterion("AC9", "Hermite ladder and CCR", 10, ac9);
  criterion("AC10", "metaplectic", 30, ac10);
  criterion("AC11", "determinism and full-suite time", 60, ac11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
