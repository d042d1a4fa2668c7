// Command-line front end: runs the verification suites and the single
// operations (gamma listing, lifting, factorization) on JSON files.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "spinc/dirac.hpp"
#include "spinc/matrix_io.hpp"
#include "spinc/spin_group.hpp"
#include "spinc/spinor_rep.hpp"
#include "spinc/suites.hpp"
#include "spinc/universal_spinc.hpp"
#include "spinc/weyl_mp.hpp"

namespace {

using namespace spinc;
using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::NonFinite:
    case Errc::UnknownSuite:
    case Errc::InvalidArgument:
    case Errc::ShapeMismatch:
      return true;
    default:
      return false;
  }
}

int parse_branch(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw Error(Errc::InvalidArgument, "branch must be + or -");
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  void write(const std::string& text) const {
    if (cfg_.outputPath) {
      std::ofstream out(*cfg_.outputPath);
      if (!out) throw Error(Errc::InvalidArgument, "cannot write " + *cfg_.outputPath);
      out << text;
    } else {
      std::cout << text;
    }
  }
  void write(const json& j) const { write(j.dump(cfg_.jsonPretty ? 2 : -1) + "\n"); }
  int reports(const std::vector<CheckReport>& reports) const {
    write(render_reports(reports, cfg_.jsonLines, cfg_.jsonPretty));
    return all_pass(reports) ? kExitPass : kExitFail;
  }

 private:
  const RunConfig& cfg_;
};

CheckReport timed(const RunConfig& cfg, std::string id, json params, const std::function<void(CheckReport&)>& fn) {
  CheckReport r;
  r.check = std::move(id);
  r.params = std::move(params);
  r.params["seed"] = cfg.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = e.what();
  }
  if (cfg.timing) {
    r.runtimeMs = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

json rotation_to_json(const Eigen::MatrixXd& r) { return matrix_to_json(r.cast<std::complex<double>>()); }

std::vector<CheckReport> dirac_verify(const RunConfig& cfg, int degree, int count, bool classical) {
  const int n = classical ? 3 : cfg.n.value_or(3);
  const int branch = 1;
  if (classical && cfg.n && *cfg.n != 3) throw Error(Errc::InvalidArgument, "--paper-gammas needs n = 3");
  const GammaRepd rep = classical ? classical_n3_gammas() : build_gamma(n, branch);
  const json params = {{"n", n}, {"degree", degree}, {"count", count}, {"paperGammas", classical}};
  std::vector<CheckReport> out;
  out.push_back(timed(cfg, "dirac-verify.square", params, [&](CheckReport& r) {
    Rng rng(cfg.seed, r.check);
    const GammaRepq exact = to_exact(rep);
    int equal = 0;
    for (int s = 0; s < count; ++s) {
      const SquareCheck c = verify_square(exact, random_poly_spinor(rng, n, exact.k(), degree));
      if (c.equal) {
        ++equal;
      } else if (!r.params.contains("firstMismatch")) {
        r.params["firstMismatch"] = c.mismatch;
      }
    }
    r.params["equal"] = equal;
    r.pass = equal == count;
  }));
  out.push_back(timed(cfg, "dirac-verify.plane_wave", params, [&](CheckReport& r) {
    Rng rng(cfg.seed, r.check);
    double worst = 0.0;
    for (int s = 0; s < count; ++s) {
      Eigen::VectorXcd v(rep.k());
      for (int a = 0; a < rep.k(); ++a) v(a) = rng.complex_normal();
      worst = std::max(worst, plane_wave_check(rep, {rng.normal_vector(n), v}));
    }
    r.residual = worst;
    r.tol = cfg.tol("dirac.plane_wave", 1e-11);
    r.pass = worst <= *r.tol;
  }));
  return out;
}

std::vector<CheckReport> mp_verify(const RunConfig& cfg, const std::vector<std::string>& generators, double tmax) {
  const int modes = cfg.modes.value_or(1);
  const int cutoff = cfg.cutoff.value_or(32);
  const HermiteModel model(modes, cutoff);
  std::vector<CheckReport> out;
  for (const auto& name : generators) {
    Eigen::MatrixXd (*make)(int, int) = nullptr;
    if (name == "osc") make = &oscillator_hamiltonian;
    if (name == "squeeze") make = &squeeze_hamiltonian;
    if (name == "shear") make = &shear_hamiltonian;
    if (!make) throw Error(Errc::InvalidArgument, "unknown generator '" + name + "'");
    const json params = {{"modes", modes}, {"cutoff", cutoff}, {"generator", name}, {"tmax", tmax}};
    out.push_back(timed(cfg, "mp-verify." + name, params, [&](CheckReport& r) {
      Rng rng(cfg.seed, r.check);
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
      for (int j = 0; j < modes; ++j) h += make(modes, j);
      double worst = 0.0;
      for (double t : {-tmax, tmax, rng.uniform(-tmax, tmax), rng.uniform(-tmax, tmax)}) {
        const MpCElement g = mp_one_param(model, h, t);
        for (int s = 0; s < 3; ++s) {
          std::vector<double> y(2 * modes);
          for (auto& v : y) v = rng.normal();
          worst = std::max(worst, mp_equivariance_residual(model, g, y));
        }
      }
      r.residual = worst;
      r.tol = cfg.tol("mp.equivariance", 1e-6);
      r.pass = worst <= *r.tol;
    }));
  }
  std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return out;
}

json factorization_json(const FactorizationResult& f) {
  return {{"element",
           {{"A", to_json(f.element.a.mv())}, {"c", {{"re", f.element.c.real()}, {"im", f.element.c.imag()}}}}},
          {"scalarResidual", f.scalarResidual},
          {"ok", f.ok}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for Clifford algebras, spin groups and metaplectic factorization"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::vector<std::string> tol_args;
  std::string out_path;
  std::string branch_text = "+";
  bool aggregate = false;
  app.add_option("--seed", cfg.seed, "RNG seed")->envname("SPINC_SEED");
  app.add_option("--tol", tol_args, "tolerance override key=value")->envname("SPINC_TOL")->delimiter(',');
  app.add_option("--out", out_path, "write the report to FILE")->envname("SPINC_OUT");
  app.add_flag("--json", aggregate, "aggregated JSON array (default)")->envname("SPINC_JSON");
  app.add_flag("--json-lines", cfg.jsonLines, "one JSON object per line")->envname("SPINC_JSON_LINES");
  app.add_flag("--pretty", cfg.jsonPretty, "indent JSON output")->envname("SPINC_PRETTY");
  app.add_flag("--timing", cfg.timing, "record runtimeMs (reports are then not reproducible)")->envname("SPINC_TIMING");
  app.add_option("--n", cfg.n, "dimension n")->envname("SPINC_N");
  app.add_option("--modes", cfg.modes, "number of modes")->envname("SPINC_MODES");
  app.add_option("--cutoff", cfg.cutoff, "Hermite cutoff per mode")->envname("SPINC_CUTOFF");
  app.add_option("--count", cfg.count, "sample count")->envname("SPINC_COUNT");
  app.add_option("--steps", cfg.steps, "loop steps")->envname("SPINC_STEPS");
  app.add_option("--branch", branch_text, "odd-n branch, + or -")->envname("SPINC_BRANCH");

  std::map<std::string, CLI::App*> suites;
  for (const auto& name : suite_names()) suites[name] = app.add_subcommand(name, "run the " + name + " suite");

  std::string in_path;
  auto* spin_lift = app.add_subcommand("spin-lift", "lift a rotation matrix to Spin(n)");
  spin_lift->add_option("--in", in_path, "rotation matrix JSON")->required()->envname("SPINC_IN");

  std::string plane = "1,2";
  int turns = 1;
  auto* monodromy = app.add_subcommand("monodromy", "monodromy of a plane rotation loop");
  monodromy->add_option("--plane", plane, "rotation plane p,q (1-based)")->envname("SPINC_PLANE");
  monodromy->add_option("--turns", turns, "full turns")->envname("SPINC_TURNS");

  std::string pprime_path, epsprime_path;
  bool unitary = false;
  auto* factorize_cmd = suites["factorize"];
  factorize_cmd->add_option("--pprime", pprime_path, "rotation matrix JSON")->envname("SPINC_PPRIME");
  factorize_cmd->add_option("--epsprime", epsprime_path, "matrix JSON")->envname("SPINC_EPSPRIME");
  factorize_cmd->add_flag("--unitary", unitary, "also require |c| = 1")->envname("SPINC_UNITARY");

  int m = 0;
  suites["u-embed"]->add_option("--m", m, "U(m) with n = 2m")->envname("SPINC_M");

  int degree = 5;
  int dirac_count = 100;
  bool classical = false;
  auto* dirac_verify_cmd = app.add_subcommand("dirac-verify", "exact P^2 = Delta checks");
  dirac_verify_cmd->add_option("--degree", degree, "polynomial degree")->envname("SPINC_DEGREE");
  dirac_verify_cmd->add_flag("--paper-gammas", classical, "use the classical 2x2 triple (n = 3)")->envname("SPINC_PAPER_GAMMAS");

  auto* weyl_verify = app.add_subcommand("weyl-verify", "Hermite model CCR checks");
  std::string generators = "osc,squeeze,shear";
  double tmax = 1.0;
  auto* mp_verify_cmd = app.add_subcommand("mp-verify", "metaplectic equivariance checks");
  mp_verify_cmd->add_option("--generators", generators, "comma separated: osc,squeeze,shear")->envname("SPINC_GENERATORS");
  mp_verify_cmd->add_option("--tmax", tmax, "largest |t|")->envname("SPINC_TMAX");
  auto* mp_monodromy_cmd = app.add_subcommand("mp-monodromy", "oscillator loop in the metaplectic model");
  auto* mp_factorize_cmd = app.add_subcommand("mp-factorize", "factorize a symplectic sample");
  mp_factorize_cmd->add_option("--pprime", pprime_path, "symplectic matrix JSON")->required()->envname("SPINC_PPRIME");
  mp_factorize_cmd->add_option("--epsprime", epsprime_path, "matrix JSON")->required()->envname("SPINC_EPSPRIME");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    for (const auto& t : tol_args) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw Error(Errc::InvalidArgument, "--tol expects key=value");
      cfg.tolOverrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
    if (!out_path.empty()) cfg.outputPath = out_path;
    if (aggregate) cfg.jsonLines = false;
    const int branch = parse_branch(branch_text);
    const Output out(cfg);

    if (suites["gamma"]->parsed() && cfg.n) {
      const GammaRepd rep = build_gamma(*cfg.n, branch);
      json list = json::array();
      for (const auto& g : rep.gammas()) list.push_back(matrix_to_json(g));
      out.write(json{{"n", rep.n()}, {"k", rep.k()}, {"branch", rep.branch()}, {"gammas", list}});
      return kExitPass;
    }
    if (factorize_cmd->parsed() && !pprime_path.empty()) {
      if (epsprime_path.empty()) throw Error(Errc::InvalidArgument, "--epsprime is required with --pprime");
      const Eigen::MatrixXd p = load_real_matrix(pprime_path);
      const int n = cfg.n.value_or(static_cast<int>(p.rows()));
      const GammaRepd rep = build_gamma(n, branch);
      json result;
      bool ok = false;
      try {
        const FactorizationResult f = factorize(rep, p, load_matrix(epsprime_path));
        result = factorization_json(f);
        ok = f.ok;
        if (unitary) {
          const double dev = std::abs(std::abs(f.element.c) - 1.0);
          result["unitResidual"] = dev;
          ok = ok && dev < cfg.tol("factorize.unit", 1e-9);
          result["ok"] = ok;
        }
      } catch (const Error& e) {
        if (is_usage_error(e.code())) throw;
        result = {{"ok", false}, {"error", e.what()}};
      }
      out.write(result);
      return ok ? kExitPass : kExitFail;
    }
    if (suites["u-embed"]->parsed() && m > 0) cfg.n = 2 * m;

    for (const auto& [name, sub] : suites) {
      if (sub->parsed()) return out.reports(run_suite(name, cfg));
    }

    if (spin_lift->parsed()) {
      try {
        const SpinElement a = lift_rotation(load_real_matrix(in_path));
        out.write(to_json(a.mv()));
        return kExitPass;
      } catch (const Error& e) {
        if (is_usage_error(e.code())) throw;
        out.write(json{{"error", e.what()}});
        return kExitFail;
      }
    }
    if (monodromy->parsed()) {
      int p = 0, q = 0;
      char comma = 0;
      std::istringstream ps(plane);
      if (!(ps >> p >> comma >> q) || comma != ',') throw Error(Errc::InvalidArgument, "--plane expects p,q");
      const int n = cfg.n.value_or(3);
      const int steps = cfg.steps.value_or(1000);
      try {
        const int mono = path_monodromy(plane_rotation_loop(n, p - 1, q - 1, turns, steps * std::max(1, turns)));
        out.write(json{{"monodromy", mono}});
        return kExitPass;
      } catch (const Error& e) {
        if (is_usage_error(e.code())) throw;
        out.write(json{{"error", e.what()}});
        return kExitFail;
      }
    }
    if (dirac_verify_cmd->parsed()) return out.reports(dirac_verify(cfg, degree, cfg.count.value_or(dirac_count), classical));
    if (weyl_verify->parsed()) return out.reports(run_suite("weyl", cfg));
    if (mp_verify_cmd->parsed()) {
      std::vector<std::string> names;
      std::stringstream ss(generators);
      for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
      return out.reports(mp_verify(cfg, names, tmax));
    }
    if (mp_monodromy_cmd->parsed()) {
      const int cutoff = cfg.cutoff.value_or(32);
      const CheckReport r = timed(cfg, "mp-monodromy", {{"cutoff", cutoff}}, [&](CheckReport& rep) {
        const MpMonodromyReport mono = mp_monodromy(HermiteModel(1, cutoff));
        rep.residual = mono.phaseDeviation;
        rep.tol = cfg.tol("mp.monodromy", 1e-10);
        rep.params["monodromy"] = mono.monodromy;
        rep.params["doubled"] = mono.doubled;
        rep.pass = mono.monodromy == -1 && mono.phaseDeviation <= *rep.tol;
      });
      return out.reports({r});
    }
    if (mp_factorize_cmd->parsed()) {
      const Eigen::MatrixXd p = load_real_matrix(pprime_path);
      const Eigen::MatrixXcd eps = load_matrix(epsprime_path);
      const int modes = static_cast<int>(p.rows() / 2);
      const HermiteModel model(modes, cfg.cutoff.value_or(32));
      try {
        const MpFactorization f = mp_factorize(model, p, eps);
        out.write(json{{"pathTag", f.pathTag},
                       {"c", {{"re", f.c.real()}, {"im", f.c.imag()}}},
                       {"scalarResidual", f.scalarResidual},
                       {"ok", f.ok}});
        return kExitPass;
      } catch (const Error& e) {
        if (is_usage_error(e.code())) throw;
        out.write(json{{"ok", false}, {"error", e.what()}});
        return kExitFail;
      }
    }
  } catch (const Error& e) {
    std::cerr << "spinc: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "spinc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
