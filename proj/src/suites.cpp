#include "spinc/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "spinc/dirac.hpp"
#include "spinc/exterior_model.hpp"
#include "spinc/linalg.hpp"
#include "spinc/random.hpp"
#include "spinc/spin_group.hpp"
#include "spinc/spinor_rep.hpp"
#include "spinc/universal_spinc.hpp"
#include "spinc/weyl_mp.hpp"

namespace spinc {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cd = std::complex<double>;
using json = nlohmann::json;

namespace {

struct Outcome {
  std::optional<double> residual;
  std::optional<double> tol;
  bool pass = false;
  json extra = json::object();
};

Outcome measured(double residual, double tol, json extra = json::object()) {
  return {residual, tol, residual <= tol, std::move(extra)};
}

Outcome verdict(bool pass, json extra = json::object()) { return {std::nullopt, std::nullopt, pass, std::move(extra)}; }

std::string tagged(const char* base, int n) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s.n=%02d", base, n);
  return buf;
}

std::string tagged(const char* base, int n, int branch) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s.n=%02d.b=%c", base, n, branch > 0 ? '+' : '-');
  return buf;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

  void check(const std::string& id, json params, const std::function<Outcome(Rng&)>& fn) {
    CheckReport r;
    r.check = id;
    r.params = std::move(params);
    r.params["seed"] = cfg_.seed;
    Rng rng(cfg_.seed, id);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = fn(rng);
      r.residual = o.residual;
      r.tol = o.tol;
      r.pass = o.pass;
      r.params.update(o.extra);
    } catch (const std::exception& e) {
      r.pass = false;
      r.error = e.what();
    }
    if (cfg_.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      r.runtimeMs = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    reports_.push_back(std::move(r));
  }

  const RunConfig& cfg() const { return cfg_; }
  std::vector<CheckReport> take() { return std::move(reports_); }

  /// The configured n, or the given range.
  std::vector<int> dims(int lo, int hi) const {
    if (cfg_.n) return {*cfg_.n};
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }

 private:
  const RunConfig& cfg_;
  std::vector<CheckReport> reports_;
};

std::vector<int> branches(int n) { return n % 2 == 1 ? std::vector<int>{1, -1} : std::vector<int>{1}; }

Multivectord random_integer_mv(Rng& rng, int n, int terms) {
  const BilinearForm form = BilinearForm::negative_definite(n);
  std::vector<Multivectord::Term> list;
  for (int t = 0; t < terms; ++t) {
    const auto mask = static_cast<Blade>(rng.uniform_int(0, (1 << n) - 1));
    list.emplace_back(mask, cd(rng.uniform_int(-3, 3), rng.uniform_int(-3, 3)));
  }
  return Multivectord(form, std::move(list));
}

cd random_nonzero_scalar(Rng& rng) {
  const double r = rng.uniform(0.5, 2.0);
  const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return std::polar(r, phi);
}

SpinCElement random_spinc(Rng& rng, int n) { return SpinCElement{random_spin(rng, n), random_nonzero_scalar(rng)}.canonical(); }

// ---------------------------------------------------------------- gamma

void gamma_suite(Runner& run) {
  for (int n : run.dims(1, 10)) {
    for (int b : branches(n)) {
      const json params = {{"n", n}, {"branch", b}};
      run.check(tagged("gamma.relations", n, b), params, [&](Rng&) {
        const GammaRepd rep = build_gamma(n, b);
        double unit = 0.0;
        for (const auto& g : rep.gammas()) {
          const MatrixXcd id = MatrixXcd::Identity(rep.k(), rep.k());
          unit = std::max({unit, linalg::max_abs(g.adjoint() * g - id), linalg::max_abs(g.adjoint() + g)});
        }
        return measured(std::max(relation_error(rep), unit), run.cfg().tol("gamma.relations", 1e-12), {{"k", rep.k()}});
      });
      run.check(tagged("gamma.commutant", n, b), params, [&](Rng&) {
        const int dim = commutant_dim(build_gamma(n, b));
        return verdict(dim == 1, {{"commutantDim", dim}});
      });
    }
    if (n % 2 == 1) {
      run.check(tagged("gamma.branch", n), {{"n", n}}, [&](Rng&) {
        const cd plus = branch_invariant(build_gamma(n, 1));
        const cd minus = branch_invariant(build_gamma(n, -1));
        return measured(std::abs(plus + minus), run.cfg().tol("gamma.branch", 1e-12),
                        {{"plusRe", plus.real()}, {"plusIm", plus.imag()}});
      });
    }
    if (n <= 8) {
      run.check(tagged("gamma.span", n), {{"n", n}}, [&](Rng&) {
        const GammaRepd rep = build_gamma(n);
        const int k = rep.k();
        std::vector<Blade> masks;
        for (Blade m = 0; m < (Blade{1} << n); ++m) {
          if (n % 2 == 0 || grade(m) % 2 == 0) masks.push_back(m);
        }
        MatrixXcd stack(k * k, static_cast<Eigen::Index>(masks.size()));
        for (std::size_t c = 0; c < masks.size(); ++c) {
          stack.col(static_cast<Eigen::Index>(c)) = Eigen::Map<const Eigen::VectorXcd>(rep.blade(masks[c]).data(), k * k);
        }
        const int rank = linalg::numerical_rank(stack);
        return verdict(rank == k * k, {{"rank", rank}, {"expected", k * k}});
      });
      run.check(tagged("gamma.equivalence", n), {{"n", n}}, [&](Rng& rng) {
        const GammaRepd rep = build_gamma(n, 1);
        // a unitarily conjugated copy must be intertwined back
        const MatrixXcd w = rng.unitary(rep.k());
        std::vector<MatrixXcd> conj;
        for (const auto& g : rep.gammas()) conj.push_back(w * g * w.adjoint());
        const auto t = intertwiner_solve(rep.gammas(), conj);
        if (!t) return verdict(false, {{"reason", "no intertwiner to a conjugate"}});
        double residual = intertwiner_residual(*t, rep.gammas(), conj);
        bool opposite_ok = true;
        if (n % 2 == 1) opposite_ok = !intertwiner_solve(rep, build_gamma(n, -1)).has_value();
        Outcome o = measured(residual, run.cfg().tol("gamma.intertwiner", 1e-10), {{"oppositeBranchSeparated", opposite_ok}});
        o.pass = o.pass && opposite_ok;
        return o;
      });
    }
  }

  run.check("gamma.classical", {{"n", 3}}, [&](Rng&) {
    const GammaRepd classical = classical_n3_gammas();
    const double rel = relation_error(classical);
    const cd s = branch_invariant(classical);
    int matches = 0;
    int matched_branch = 0;
    double residual = 0.0;
    for (int b : {1, -1}) {
      const GammaRepd ref = build_gamma(3, b);
      if (auto t = intertwiner_solve(ref, classical)) {
        ++matches;
        matched_branch = b;
        residual = intertwiner_residual(*t, ref.gammas(), classical.gammas());
      }
    }
    const int dim = commutant_dim(classical);
    Outcome o = measured(std::max(rel, residual), run.cfg().tol("gamma.intertwiner", 1e-10),
                         {{"matchingBranches", matches},
                          {"branch", matched_branch},
                          {"commutantDim", dim},
                          {"invariantRe", s.real()},
                          {"invariantIm", s.imag()}});
    o.pass = o.pass && rel == 0.0 && matches == 1 && dim == 1 && std::abs(s - 1.0) < 1e-12;
    return o;
  });
}

// ---------------------------------------------------------------- clifford

void clifford_suite(Runner& run) {
  for (int n : run.dims(1, 8)) {
    const json params = {{"n", n}, {"samples", 20}};
    const BilinearForm form = BilinearForm::negative_definite(n);
    run.check(tagged("clifford.associativity", n), params, [&](Rng& rng) {
      double worst = 0.0;
      for (int s = 0; s < 20; ++s) {
        const auto x = random_integer_mv(rng, n, 6);
        const auto y = random_integer_mv(rng, n, 6);
        const auto z = random_integer_mv(rng, n, 6);
        worst = std::max(worst, coefficient_distance((x * y) * z, x * (y * z)));
      }
      return measured(worst, run.cfg().tol("clifford.exact", 1e-14));
    });
    run.check(tagged("clifford.relations", n), {{"n", n}}, [&](Rng&) {
      double worst = 0.0;
      for (int j = 0; j < n; ++j) {
        const auto ej = Multivectord::basis(form, j);
        worst = std::max(worst, coefficient_distance(ej * ej, Multivectord::scalar(form, -1.0)));
        for (int l = j + 1; l < n; ++l) {
          const auto el = Multivectord::basis(form, l);
          worst = std::max(worst, coefficient_norm(ej * el + el * ej));
        }
      }
      return measured(worst, run.cfg().tol("clifford.exact", 1e-14));
    });
    run.check(tagged("clifford.reverse", n), params, [&](Rng& rng) {
      double worst = 0.0;
      for (int s = 0; s < 20; ++s) {
        const auto x = random_integer_mv(rng, n, 6);
        const auto y = random_integer_mv(rng, n, 6);
        worst = std::max(worst, coefficient_distance(reverse(x * y), reverse(y) * reverse(x)));
        worst = std::max(worst, coefficient_distance(reverse(reverse(x)), x));
      }
      return measured(worst, run.cfg().tol("clifford.exact", 1e-14));
    });
    run.check(tagged("clifford.rep_homomorphism", n), params, [&](Rng& rng) {
      const GammaRepd rep = build_gamma(n);
      double worst = 0.0;
      for (int s = 0; s < 20; ++s) {
        const auto x = random_integer_mv(rng, n, 6);
        const auto y = random_integer_mv(rng, n, 6);
        const MatrixXcd lhs = rep_apply(rep, x * y);
        const MatrixXcd rhs = rep_apply(rep, x) * rep_apply(rep, y);
        worst = std::max(worst, linalg::max_abs(lhs - rhs) / std::max(1.0, linalg::max_abs(rhs)));
      }
      return measured(worst, run.cfg().tol("clifford.homomorphism", 1e-12));
    });
  }
}

// ---------------------------------------------------------------- spin

void spin_suite(Runner& run) {
  const int samples = 100;
  for (int n : run.dims(2, 8)) {
    const json params = {{"n", n}, {"samples", samples}};
    run.check(tagged("spin.lift_roundtrip", n), params, [&](Rng& rng) {
      double worst = 0.0;
      for (int s = 0; s < samples; ++s) {
        const MatrixXd r = rng.rotation(n);
        worst = std::max(worst, (adjoint_matrix(lift_rotation(r)) - r).norm());
      }
      return measured(worst, run.cfg().tol("spin.lift", 1e-9));
    });
    run.check(tagged("spin.adjoint_homomorphism", n), {{"n", n}, {"samples", 50}}, [&](Rng& rng) {
      double worst = 0.0;
      for (int s = 0; s < 50; ++s) {
        const SpinElement a = random_spin(rng, n);
        const SpinElement b = random_spin(rng, n);
        worst = std::max(worst, (adjoint_matrix(a * b) - adjoint_matrix(a) * adjoint_matrix(b)).norm());
      }
      return measured(worst, run.cfg().tol("spin.homomorphism", 1e-9));
    });
    run.check(tagged("spin.kernel", n), {{"n", n}, {"samples", 50}}, [&](Rng& rng) {
      // the fiber over Ad_A is exactly {A, -A}
      double worst = 0.0;
      const auto one = SpinElement::identity(n);
      worst = std::max(worst, spin_distance(lift_rotation(MatrixXd::Identity(n, n)), one));
      worst = std::max(worst, (adjoint_matrix(-one) - MatrixXd::Identity(n, n)).norm());
      for (int s = 0; s < 50; ++s) {
        const SpinElement a = random_spin(rng, n);
        const SpinElement l = lift_rotation(adjoint_matrix(a));
        worst = std::max(worst, std::min(spin_distance(l, a), spin_distance(l, -a)));
      }
      return measured(worst, run.cfg().tol("spin.lift", 1e-9));
    });
  }
  const std::vector<int> mono_dims = run.cfg().n ? std::vector<int>{*run.cfg().n} : std::vector<int>{3, 5, 8};
  const int steps = run.cfg().steps.value_or(1000);
  for (int n : mono_dims) {
    run.check(tagged("spin.monodromy", n), {{"n", n}, {"steps", steps}, {"plane", "1,2"}}, [&](Rng&) {
      const int once = path_monodromy(plane_rotation_loop(n, 0, 1, 1, steps));
      const int twice = path_monodromy(plane_rotation_loop(n, 0, 1, 2, 2 * steps));
      return verdict(once == -1 && twice == 1, {{"monodromy", once}, {"doubled", twice}});
    });
  }
}

// ---------------------------------------------------------------- factorize

void factorize_suite(Runner& run) {
  for (int n : run.dims(1, 8)) {
    const GammaRepd rep = build_gamma(n);
    run.check(tagged("factorize.roundtrip", n), {{"n", n}, {"samples", 200}}, [&](Rng& rng) {
      double worst = 0.0;
      double well_defined = 0.0;
      for (int s = 0; s < 200; ++s) {
        const SpinCElement x = random_spinc(rng, n);
        const SpinCElement flipped{-x.a, -x.c};
        well_defined = std::max(well_defined, linalg::max_abs(epsilon(x, rep) - epsilon(flipped, rep)));
        const auto f = factorize(rep, p_map(x), epsilon(x, rep));
        const auto g = factorize(rep, p_map(flipped), epsilon(flipped, rep));
        worst = std::max({worst, class_distance(f.element, x), class_distance(g.element, f.element)});
      }
      return measured(std::max(worst, well_defined), run.cfg().tol("factorize.roundtrip", 1e-8));
    });
    run.check(tagged("factorize.uniqueness", n), {{"n", n}, {"samples", 50}}, [&](Rng& rng) {
      // every sign combination of (A, c) that reproduces (p', eps') lies in the output class
      double worst = 0.0;
      int consistent = 0;
      for (int s = 0; s < 50; ++s) {
        const SpinCElement x = random_spinc(rng, n);
        const MatrixXd p = p_map(x);
        const MatrixXcd eps = epsilon(x, rep);
        const SpinCElement f = factorize(rep, p, eps).element;
        for (int sa : {1, -1}) {
          for (int sc : {1, -1}) {
            const SpinCElement cand{sa > 0 ? f.a : -f.a, static_cast<double>(sc) * f.c};
            const double res = std::max((p_map(cand) - p).norm(), linalg::max_abs(epsilon(cand, rep) - eps));
            if (res < 1e-8) {
              ++consistent;
              worst = std::max(worst, class_distance(cand, f));
            }
          }
        }
      }
      Outcome o = measured(worst, run.cfg().tol("factorize.roundtrip", 1e-8), {{"solutions", consistent}});
      o.pass = o.pass && consistent == 100;
      return o;
    });
    run.check(tagged("factorize.unitary", n), {{"n", n}, {"samples", 50}}, [&](Rng& rng) {
      double worst = 0.0;
      for (int s = 0; s < 50; ++s) {
        const SpinCElement x =
            SpinCElement{random_spin(rng, n), std::polar(1.0, rng.uniform(-std::numbers::pi, std::numbers::pi))};
        const auto f = factorize(rep, p_map(x), epsilon(x, rep));
        worst = std::max(worst, std::abs(std::abs(f.element.c) - 1.0));
      }
      return measured(worst, run.cfg().tol("factorize.unit", 1e-9));
    });
    run.check(tagged("factorize.homomorphism", n), {{"n", n}, {"pairs", 50}}, [&](Rng& rng) {
      const SolutionInstance inst = spin_instance(rep, rng, 50, 50);
      const InstanceReport r = homomorphism_check(rep, inst, run.cfg().tol("factorize.roundtrip", 1e-8));
      return measured(r.worst, run.cfg().tol("factorize.roundtrip", 1e-8), {{"checked", r.checked}});
    });
    run.check(tagged("factorize.bijection", n), {{"n", n}, {"samples", 50}}, [&](Rng& rng) {
      const SolutionInstance inst = spin_instance(rep, rng, 50, 0);
      const InstanceReport r = bijection_roundtrip(rep, inst, run.cfg().tol("factorize.roundtrip", 1e-8));
      const InstanceReport id = bijection_roundtrip(rep, identity_instance(rep));
      return measured(std::max(r.worst, id.worst), run.cfg().tol("factorize.roundtrip", 1e-8), {{"checked", r.checked}});
    });
    if (n >= 2) {
      run.check(tagged("factorize.adversarial", n), {{"n", n}, {"cases", 50}}, [&](Rng& rng) {
        int rejected = 0;
        for (int s = 0; s < 50; ++s) {
          const SpinCElement x = random_spinc(rng, n);
          const MatrixXcd w = rng.unitary(rep.k());
          try {
            factorize(rep, p_map(x), epsilon(x, rep) * w);
          } catch (const Error& e) {
            if (e.code() == Errc::NotScalar) ++rejected;
          }
        }
        return verdict(rejected == 50, {{"rejected", rejected}});
      });
    }
  }
}

// ---------------------------------------------------------------- u-embed

SolutionInstance random_unitary_instance(Rng& rng, int m, int count, int pairs, std::vector<MatrixXcd>& us) {
  for (int i = 0; i < count; ++i) us.push_back(rng.unitary(m));
  std::vector<ClosureHint> hints;
  for (int i = 0; i < pairs; ++i) {
    const auto l = static_cast<std::size_t>(rng.uniform_int(0, count - 1));
    const auto r = static_cast<std::size_t>(rng.uniform_int(0, count - 1));
    hints.push_back({l, r, us.size()});
    us.push_back(us[l] * us[r]);
  }
  return unitary_exterior_instance(m, us, hints);
}

void u_embed_suite(Runner& run) {
  std::vector<int> ms;
  if (run.cfg().n) {
    ms.push_back(*run.cfg().n / 2);
  } else {
    ms = {1, 2, 3, 4};
  }
  for (int m : ms) {
    const int count = run.cfg().count.value_or(50);
    const json params = {{"m", m}, {"samples", count}};
    run.check(tagged("u-embed.equivariance", 2 * m), params, [&](Rng& rng) {
      double worst = exterior_equivariance_residual(MatrixXcd::Identity(m, m));
      for (int s = 0; s < count; ++s) worst = std::max(worst, exterior_equivariance_residual(rng.unitary(m)));
      return measured(worst, run.cfg().tol("u-embed.equivariance", 1e-10));
    });
    run.check(tagged("u-embed.factorize", 2 * m), params, [&](Rng& rng) {
      std::vector<MatrixXcd> us;
      const SolutionInstance inst = random_unitary_instance(rng, m, count, 0, us);
      const GammaRepd rep = build_gamma(2 * m);
      double p_err = 0.0;
      double unit_err = 0.0;
      for (const auto& s : inst.samples) {
        const auto f = factorize(rep, s.pPrime, s.epsPrime);
        p_err = std::max(p_err, (p_map(f.element) - s.pPrime).norm());
        unit_err = std::max(unit_err, std::abs(std::abs(f.element.c) - 1.0));
      }
      return measured(std::max(p_err, unit_err), run.cfg().tol("u-embed.factorize", 1e-9),
                      {{"inclusionResidual", p_err}, {"unitResidual", unit_err}});
    });
    run.check(tagged("u-embed.homomorphism", 2 * m), {{"m", m}, {"pairs", count}}, [&](Rng& rng) {
      std::vector<MatrixXcd> us;
      const SolutionInstance inst = random_unitary_instance(rng, m, count, count, us);
      const InstanceReport r = homomorphism_check(build_gamma(2 * m), inst);
      return measured(r.worst, run.cfg().tol("factorize.roundtrip", 1e-8), {{"checked", r.checked}});
    });
    run.check(tagged("u-embed.bijection", 2 * m), params, [&](Rng& rng) {
      std::vector<MatrixXcd> us;
      const SolutionInstance inst = random_unitary_instance(rng, m, count, 0, us);
      const InstanceReport r = bijection_roundtrip(build_gamma(2 * m), inst);
      return measured(r.worst, run.cfg().tol("factorize.roundtrip", 1e-8), {{"checked", r.checked}});
    });
  }
}

// ---------------------------------------------------------------- so-obstruction

void so_obstruction_suite(Runner& run) {
  const int n = run.cfg().n.value_or(3);
  const int steps = run.cfg().steps.value_or(1000);
  run.check(tagged("so-obstruction", n), {{"n", n}, {"steps", steps}}, [&](Rng&) {
    const ObstructionReport r = so_obstruction_demo(n, steps);
    return verdict(r.monodromy == -1 && r.doubled == 1,
                   {{"monodromy", r.monodromy}, {"doubled", r.doubled}, {"conclusion", r.conclusion}});
  });
}

// ---------------------------------------------------------------- dirac

void dirac_suite(Runner& run) {
  for (int n : run.dims(2, 8)) {
    for (int b : branches(n)) {
      run.check(tagged("dirac.square", n, b), {{"n", n}, {"branch", b}, {"degree", 5}, {"samples", 100}}, [&](Rng& rng) {
        const GammaRepq rep = to_exact(build_gamma(n, b));
        int equal = 0;
        std::string mismatch;
        for (int s = 0; s < 100; ++s) {
          const SquareCheck c = verify_square(rep, random_poly_spinor(rng, n, rep.k(), 5));
          if (c.equal) {
            ++equal;
          } else if (mismatch.empty()) {
            mismatch = c.mismatch;
          }
        }
        json extra = {{"equal", equal}};
        if (!mismatch.empty()) extra["firstMismatch"] = mismatch;
        return verdict(equal == 100, extra);
      });
    }
    run.check(tagged("dirac.plane_wave", n), {{"n", n}, {"samples", 100}}, [&](Rng& rng) {
      const GammaRepd rep = build_gamma(n);
      double worst = 0.0;
      for (int s = 0; s < 100; ++s) {
        Eigen::VectorXcd v(rep.k());
        for (int a = 0; a < rep.k(); ++a) v(a) = rng.complex_normal();
        worst = std::max(worst, plane_wave_check(rep, {rng.normal_vector(n), v}));
      }
      return measured(worst, run.cfg().tol("dirac.plane_wave", 1e-11));
    });
  }
  run.check("dirac.square.classical", {{"n", 3}, {"degree", 5}, {"samples", 100}}, [&](Rng& rng) {
    const GammaRepq rep = to_exact(classical_n3_gammas());
    int equal = 0;
    for (int s = 0; s < 100; ++s) equal += verify_square(rep, random_poly_spinor(rng, 3, 2, 5)).equal ? 1 : 0;
    return verdict(equal == 100, {{"equal", equal}});
  });
  run.check("dirac.sensitivity", {{"nMax", 4}, {"delta", "1/1000000"}}, [&](Rng& rng) {
    // corrupt one entry of one gamma and probe with x_l x_m e_c
    int detected = 0;
    int total = 0;
    for (int n = 2; n <= 4; ++n) {
      const GammaRepq exact = to_exact(build_gamma(n));
      const int k = exact.k();
      for (int j = 0; j < n; ++j) {
        auto gammas = exact.gammas();
        const int a = rng.uniform_int(0, k - 1);
        const int c = rng.uniform_int(0, k - 1);
        gammas[j](a, c) += GaussianRational(Rational(1, 1000000));
        const GammaRepq bad(gammas, exact.branch());
        bool found = false;
        for (int l = 0; l < n && !found; ++l) {
          for (int mm = l; mm < n && !found; ++mm) {
            for (int comp = 0; comp < k && !found; ++comp) {
              PolySpinor f = PolySpinor::zero(n, k);
              Exponent e(n, 0);
              ++e[l];
              ++e[mm];
              f.components[comp].add(e, 1);
              found = !verify_square(bad, f).equal;
            }
          }
        }
        detected += found ? 1 : 0;
        ++total;
      }
    }
    return verdict(detected == total, {{"detected", detected}, {"total", total}});
  });
}

// ---------------------------------------------------------------- weyl

std::vector<std::vector<double>> frame(int modes) {
  std::vector<std::vector<double>> out;
  for (int i = 0; i < 2 * modes; ++i) {
    std::vector<double> v(2 * modes, 0.0);
    v[i] = 1.0;
    out.push_back(v);
  }
  return out;
}

void weyl_suite(Runner& run) {
  const std::vector<int> mode_list = run.cfg().modes ? std::vector<int>{*run.cfg().modes} : std::vector<int>{1, 2};
  const int cutoff = run.cfg().cutoff.value_or(16);
  for (int modes : mode_list) {
    const json params = {{"modes", modes}, {"cutoff", cutoff}};
    run.check(tagged("weyl.structure", modes), params, [&](Rng&) {
      const HermiteModel model(modes, cutoff);
      double worst = 0.0;
      for (int j = 0; j < modes; ++j) {
        const MatrixXcd x(model.xop(j));
        const MatrixXcd d(model.dop(j));
        worst = std::max({worst, x.real().cwiseAbs().maxCoeff(), (x.imag() - x.imag().transpose()).cwiseAbs().maxCoeff(),
                          d.imag().cwiseAbs().maxCoeff(), (d.real() + d.real().transpose()).cwiseAbs().maxCoeff()});
      }
      return measured(worst, 0.0);
    });
    run.check(tagged("weyl.ccr", modes), params, [&](Rng&) {
      const HermiteModel model(modes, cutoff);
      const auto f = frame(modes);
      double worst = 0.0;
      double cross = 0.0;
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < f.size(); ++b) {
          const double r = ccr_residual(model, f[a], f[b]);
          worst = std::max(worst, r);
          if (a % modes != b % modes) cross = std::max(cross, r);
        }
      }
      Outcome o = measured(worst, run.cfg().tol("weyl.ccr", 1e-10), {{"crossModeResidual", cross}});
      o.pass = o.pass && cross == 0.0;
      return o;
    });
    run.check(tagged("weyl.ccr_refinement", modes), {{"modes", modes}, {"cutoffs", {16, 24, 32}}, {"levelBound", 13}},
              [&](Rng&) {
                const auto f = frame(modes);
                std::vector<double> worst;
                for (int big : {16, 24, 32}) {
                  const HermiteModel model(modes, big);
                  double w = 0.0;
                  for (const auto& v : f) {
                    for (const auto& u : f) w = std::max(w, ccr_residual(model, v, u, 13));
                  }
                  worst.push_back(w);
                }
                const bool monotone = worst[1] <= worst[0] && worst[2] <= worst[1];
                Outcome o = measured(worst[0], run.cfg().tol("weyl.ccr", 1e-10), {{"residuals", worst}});
                o.pass = o.pass && monotone;
                return o;
              });
    run.check(tagged("weyl.linearity", modes), params, [&](Rng& rng) {
      const HermiteModel model(modes, cutoff);
      double worst = 0.0;
      for (int s = 0; s < 10; ++s) {
        std::vector<double> y(2 * modes), z(2 * modes), sum(2 * modes);
        const double alpha = rng.normal();
        for (int i = 0; i < 2 * modes; ++i) {
          y[i] = rng.normal();
          z[i] = rng.normal();
          sum[i] = alpha * y[i] + z[i];
        }
        const SparseMatrixcd lhs = clifford_mult(model, sum);
        const SparseMatrixcd rhs = cd(alpha) * clifford_mult(model, y) + clifford_mult(model, z);
        worst = std::max(worst, SparseMatrixcd(lhs - rhs).norm());
      }
      return measured(worst, run.cfg().tol("weyl.linearity", 1e-12));
    });
  }
}

// ---------------------------------------------------------------- mp

struct Family {
  const char* name;
  MatrixXd (*make)(int, int);
};

const Family kFamilies[] = {
    {"osc", &oscillator_hamiltonian}, {"squeeze", &squeeze_hamiltonian}, {"shear", &shear_hamiltonian}};

void mp_suite(Runner& run) {
  const int cutoff = run.cfg().cutoff.value_or(32);
  const int modes = run.cfg().modes.value_or(1);
  for (const auto& fam : kFamilies) {
    const json params = {{"modes", modes}, {"cutoff", cutoff}, {"generator", fam.name}, {"tmax", 1.0}};
    const std::string base = std::string("mp.") + fam.name;
    run.check(base + ".equivariance", params, [&](Rng& rng) {
      const HermiteModel model(modes, cutoff);
      double worst = 0.0;
      double symplectic = 0.0;
      int max_work = 0;
      std::vector<double> ts = {-1.0, 1.0};
      for (int s = 0; s < 3; ++s) ts.push_back(rng.uniform(-1.0, 1.0));
      for (double t : ts) {
        MatrixXd h = MatrixXd::Zero(2 * modes, 2 * modes);
        for (int j = 0; j < modes; ++j) h += fam.make(modes, j);
        const MpCElement g = mp_one_param(model, h, t);
        symplectic = std::max(symplectic, symplectic_residual(g.s));
        max_work = std::max(max_work, g.workCutoff);
        for (int s = 0; s < 3; ++s) {
          std::vector<double> y(2 * modes);
          for (auto& v : y) v = rng.normal();
          worst = std::max(worst, mp_equivariance_residual(model, g, y));
        }
      }
      Outcome o = measured(worst, run.cfg().tol("mp.equivariance", 1e-6),
                           {{"symplecticResidual", symplectic}, {"maxWorkCutoff", max_work}});
      o.pass = o.pass && symplectic <= 1e-10;
      return o;
    });
    run.check(base + ".factorize", params, [&](Rng& rng) {
      const HermiteModel model(modes, cutoff);
      double worst = 0.0;
      int rejected = 0;
      for (int s = 0; s < 3; ++s) {
        const double t = rng.uniform(-1.0, 1.0);
        const MpCElement g = mp_one_param(model, fam.make(modes, 0), t);
        const cd z = random_nonzero_scalar(rng);
        const MatrixXcd eps = z * g.u;
        const MpFactorization f = mp_factorize(model, g.s, eps);
        // (U, z) and (-U, -z) give the same eps, so only the class is compared
        worst = std::max(worst, mp_class_distance(model, f.u, f.c, g.u, z));
        Eigen::VectorXcd bump(eps.rows());
        for (Eigen::Index a = 0; a < bump.size(); ++a) bump(a) = 1.0 + 0.01 * rng.normal();
        try {
          mp_factorize(model, g.s, eps * bump.asDiagonal());
        } catch (const Error& e) {
          if (e.code() == Errc::NotScalar) ++rejected;
        }
      }
      Outcome o = measured(worst, run.cfg().tol("mp.factorize", 1e-8), {{"perturbedRejected", rejected}});
      o.pass = o.pass && rejected == 3;
      return o;
    });
  }
  run.check("mp.multiplicativity", {{"modes", 1}, {"cutoff", cutoff}, {"generator", "osc"}}, [&](Rng& rng) {
    const HermiteModel model(1, cutoff);
    const MatrixXd h = oscillator_hamiltonian(1, 0);
    double worst = 0.0;
    for (int s = 0; s < 5; ++s) {
      const double t = rng.uniform(-3.0, 3.0);
      const double u = rng.uniform(-3.0, 3.0);
      const cd zt = random_nonzero_scalar(rng);
      const cd zu = random_nonzero_scalar(rng);
      const MpCElement gt = mp_one_param(model, h, t);
      const MpCElement gu = mp_one_param(model, h, u);
      const MpCElement gtu = mp_one_param(model, h, t + u);
      const MpFactorization ft = mp_factorize(model, gt.s, zt * gt.u);
      const MpFactorization fu = mp_factorize(model, gu.s, zu * gu.u);
      const MpFactorization ftu = mp_factorize(model, gtu.s, zt * zu * gtu.u);
      worst = std::max(worst, mp_class_distance(model, ft.u * fu.u, ft.c * fu.c, ftu.u, ftu.c));
    }
    return measured(worst, run.cfg().tol("mp.factorize", 1e-8));
  });
  run.check("mp.unitarity", {{"modes", 1}, {"cutoff", cutoff}}, [&](Rng& rng) {
    const HermiteModel model(1, cutoff);
    double worst = 0.0;
    for (const auto& h : {oscillator_hamiltonian(1, 0), shear_hamiltonian(1, 0)}) {
      const MpCElement g = mp_one_param(model, h, rng.uniform(-1.0, 1.0));
      const HermiteModel work(1, g.workCutoff);
      const auto cols = work.interior_indices(model.interior_bound());
      for (auto a : cols) {
        for (auto b : cols) {
          const cd ip = g.u.col(a).dot(g.u.col(b));
          worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
        }
      }
    }
    return measured(worst, run.cfg().tol("mp.unitarity", 1e-8));
  });
  run.check("mp.two_mode", {{"modes", 2}, {"cutoff", 8}, {"generator", "osc0+squeeze1"}}, [&](Rng& rng) {
    const HermiteModel model(2, 8);
    const MatrixXd h = oscillator_hamiltonian(2, 0) + squeeze_hamiltonian(2, 1);
    double worst = 0.0;
    for (int s = 0; s < 2; ++s) {
      const MpCElement g = mp_one_param(model, h, rng.uniform(-1.0, 1.0));
      std::vector<double> y(4);
      for (auto& v : y) v = rng.normal();
      worst = std::max(worst, mp_equivariance_residual(model, g, y));
    }
    return measured(worst, run.cfg().tol("mp.equivariance", 1e-6));
  });
  run.check("mp.monodromy", {{"modes", 1}, {"cutoff", cutoff}}, [&](Rng&) {
    const MpMonodromyReport r = mp_monodromy(HermiteModel(1, cutoff));
    Outcome o = measured(r.phaseDeviation, run.cfg().tol("mp.monodromy", 1e-10),
                         {{"monodromy", r.monodromy},
                          {"loopClosure", r.loopClosure},
                          {"halfLoop", r.halfLoop},
                          {"halfSquare", r.halfSquare},
                          {"doubled", r.doubled}});
    o.pass = o.pass && r.monodromy == -1 && r.loopClosure < 1e-10 && r.halfLoop < 1e-10 && r.halfSquare < 1e-10 &&
             r.doubled < 1e-10;
    return o;
  });
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"gamma", &gamma_suite},   {"clifford", &clifford_suite},
      {"spin", &spin_suite},     {"factorize", &factorize_suite},
      {"u-embed", &u_embed_suite}, {"so-obstruction", &so_obstruction_suite},
      {"dirac", &dirac_suite},   {"weyl", &weyl_suite},
      {"mp", &mp_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& cfg) {
  Runner run(cfg);
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) {
      fn(run);
      found = true;
    }
  }
  if (!found) throw Error(Errc::UnknownSuite, "unknown suite '" + name + "'");
  auto reports = run.take();
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return reports;
}

}  // namespace spinc
