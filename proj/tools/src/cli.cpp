#include "stechkin_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "stechkin/bound_engine.hpp"
#include "stechkin/constants.hpp"
#include "stechkin/continuous.hpp"
#include "stechkin/error.hpp"
#include "stechkin/extremal.hpp"
#include "stechkin/sparse.hpp"
#include "stechkin_cli/figures.hpp"
#include "stechkin_cli/verify.hpp"

namespace stechkin::cli {

namespace {

// Thrown for bad arguments that the parser itself cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) { return format_number(x); }

std::string err_str(double e) {
  std::ostringstream os;
  os.precision(2);
  os << e;
  return os.str();
}

std::string pm(const CertifiedValue& v) { return num(v.value) + " ± " + err_str(v.err); }

double parse_real(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

Exponent parse_exponent(const std::string& s, bool allow_one) {
  if (s == "inf" || s == "infinity" || s == "∞") return Exponent::infinity();
  const double q = parse_real(s);
  if (allow_one && q == 1.0) return Exponent::one();
  if (!(q > 1.0)) throw DomainError("q must satisfy 1 < q <= inf (got " + s + ")");
  return Exponent::finite(q);
}

bool admits_one(ConstantKind k) { return k == ConstantKind::C1_best || k == ConstantKind::C1_weak; }

struct ConstantArgs {
  std::string kind;
  std::string q;
};

int cmd_constant(const ConstantArgs& a, std::ostream& out) {
  const auto kind = parse_constant_kind(a.kind);
  if (!kind) throw UsageError("unknown constant kind '" + a.kind + "'");
  const Exponent q = parse_exponent(a.q, admits_one(*kind));
  const CertifiedValue v = evaluate(*kind, q);
  out << a.kind << "(" << q.to_string() << ") = " << pm(v) << "\n";
  out << "formula: " << formula(*kind) << "\n";
  if (*kind == ConstantKind::C1_best) out << "status: " << to_string(C1_best_status(q)) << "\n";
  return kExitOk;
}

struct BoundArgs {
  double p = 0.88;
  std::size_t n = 100;
  std::uint64_t m = 200000;
  double q = 2.0;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  if (!(a.q > 1.0) || !std::isfinite(a.q)) throw DomainError("bound requires finite q > 1");
  const Exponent q = Exponent::finite(a.q);
  const BoundReport r = c_b(q, AuxSequence::power_family(a.p), a.n, a.m);
  out << "q = " << num(a.q) << ", p = " << num(a.p) << ", N = " << a.n << ", M = " << a.m << "\n";
  out << "supremum = " << pm(r.supremum);
  if (r.supremum_from_tail) {
    out << " (envelope at n >= " << a.n << ")";
  } else {
    out << " (at n = " << r.argmax << ")";
  }
  out << "\n";
  out << "largest computed term: n = " << r.argmax << ", " << pm(r.terms[r.argmax - 1]) << "\n";
  if (r.complete) {
    out << "certified upper bound = " << num(r.certified_upper()) << "\n";
  } else {
    out << "no tail envelope for this p: supremum covers n <= " << a.n << " only\n";
  }
  out << "truncation certificate = " << err_str(r.truncation_error) << " (A_n scale "
      << err_str(r.truncation_error_raw) << ")\n";
  return kExitOk;
}

struct ExtremalArgs {
  std::string which;
  double q = 2.0;
  std::uint64_t kmax = 1000;
};

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  const Exponent q = Exponent::finite(a.q);
  if (a.which == "strong") {
    const VertexSearch s = simplex_vertex_search(q, a.kmax);
    out << "max vertex sum over k0 <= " << a.kmax << " = " << num(s.best_ratio) << " at k0 = " << s.best_k0 << "\n";
    out << "c1(q) = " << pm(c1(q)) << "\n";
  } else if (a.which == "weak-lower") {
    const WeakExtremal w = weak_lower_extremal(q, a.kmax);
    out << "weak_gamma((1/n)_{n <= " << a.kmax << "}) = " << num(w.value) << " at n = " << w.argmax << "\n";
    out << "c1_weak(q) = " << pm(c1_weak(q)) << "\n";
  } else if (a.which == "weak-upper") {
    const WeakExtremal w = weak_upper_extremal(q, a.kmax);
    out << "weak_gamma(flat, N = " << a.kmax << ") = " << num(w.value) << " at n = " << w.argmax << "\n";
    out << "1/value = " << num(1.0 / w.value) << ", C1_weak(q) = " << pm(C1_weak(q)) << "\n";
  } else {
    throw UsageError("extremal: expected strong, weak-lower or weak-upper");
  }
  return kExitOk;
}

struct ContinuousArgs {
  std::string which;
  double q = 2.0;
  double t = 1.0;
};

int cmd_continuous(const ContinuousArgs& a, std::ostream& out) {
  const Exponent q = Exponent::finite(a.q);
  const StepFunction f = StepFunction::normalized_indicator(a.t);
  const ContinuousConstants k = continuous_constants(q);
  if (a.which == "strong") {
    out << "strong lhs of (1/T) chi_(0,T), T = " << num(a.t) << ": " << pm(strong_cont_lhs(f, q)) << "\n";
    out << "pi/(q sin(pi/q)) = " << pm(k.c1) << "\n";
  } else if (a.which == "weak") {
    const WeakContinuousValues w = weak_cont_values(f, q);
    out << "weak lhs of (1/T) chi_(0,T), T = " << num(a.t) << ": " << num(w.weak_lhs) << " at t = "
        << num(w.weak_lhs_at) << "\n";
    out << "1/C1_weak(q) = " << num(1.0 / k.C1_weak.value) << "\n";
    out << "weak lhs of 1/t: " << num(weak_cont_values(ReciprocalPowerLaw{}, q).weak_lhs)
        << ", (q-1)^{-1/q} = " << pm(k.c1_weak) << "\n";
  } else {
    throw UsageError("continuous: expected strong or weak");
  }
  return kExitOk;
}

struct SparseArgs {
  std::string action;
  double alpha = 0.5;
  std::string r = "tau";
  std::vector<double> coeffs;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

int cmd_sparse(const SparseArgs& a, std::ostream& out) {
  if (a.action != "check") throw UsageError("sparse: expected 'check'");
  RMode mode;
  if (a.r == "tau") {
    mode = RMode::tau;
  } else if (a.r == "inf" || a.r == "infinity") {
    mode = RMode::infinity;
  } else {
    throw UsageError("--r must be 'tau' or 'inf'");
  }
  const DevoreConstants k = devore_constants(a.alpha, mode);
  out << "alpha = " << num(a.alpha) << ", r = " << a.r << ", q = " << num(2 * a.alpha + 1) << "\n";
  out << "c = " << pm(k.c) << "\n";
  out << "C = " << pm(k.C) << " (" << to_string(k.C_status) << ")\n";

  std::vector<std::vector<double>> inputs;
  if (!a.coeffs.empty()) {
    inputs.push_back(a.coeffs);
  } else {
    std::vector<double> harmonic(1000);
    for (std::size_t i = 0; i < harmonic.size(); ++i) harmonic[i] = 1.0 / static_cast<double>(i + 1);
    inputs.push_back(std::move(harmonic));
    std::mt19937_64 rng(a.seed);
    std::normal_distribution<double> gauss;
    for (std::size_t t = 0; t < a.trials; ++t) {
      std::vector<double> c(std::uniform_int_distribution<std::size_t>(1, 300)(rng));
      for (double& x : c) x = gauss(rng);
      inputs.push_back(std::move(c));
    }
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const EquivalenceCheck r = equivalence_check(CoeffVector(inputs[i]), a.alpha, mode);
    if (!r.low_ok || !r.high_ok) {
      ++failures;
      out << "FAIL input " << i << " (seed " << a.seed << "): approx = " << num(r.approx_norm)
          << ", lorentz = " << num(r.lorentz) << "\n";
    }
  }
  out << inputs.size() - failures << "/" << inputs.size() << " inputs satisfy both inequalities\n";
  return failures == 0 ? kExitOk : kExitPropertyFailure;
}

struct FigureArgs {
  std::string tag;
  int grid = 199;
  std::string out_path;
};

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  const auto f = parse_figure(a.tag);
  if (!f) throw UsageError("unknown figure '" + a.tag + "'");
  if (a.grid < 2) throw UsageError("--grid must be >= 2");
  const std::string csv = figure_csv(*f, a.grid);
  if (a.out_path.empty() || a.out_path == "-") {
    out << csv;
    return kExitOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + a.out_path + "'");
  file << csv;
  file.close();
  if (!file) throw UsageError("cannot write '" + a.out_path + "'");
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  bool inject = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto s = parse_suite(a.suite);
  if (!s) throw UsageError("unknown suite '" + a.suite + "'");
  const auto results = run_verify(*s, {a.seed, a.trials, a.inject});
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const PropertyResult& r : results) {
    out << (r.failed == 0 ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.passed + r.failed << "\n";
    if (r.failed > 0) out << "  reproduce: " << r.first_failure << "\n";
    passed += r.passed;
    failed += r.failed;
  }
  out << "verify " << a.suite << ": " << passed << " passed, " << failed << " failed (seed " << a.seed
      << ", trials " << a.trials << ")\n";
  return failed == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stechkin-inequality constants, bounds and checks", "stechkin"};
  app.require_subcommand(1);

  ConstantArgs constant;
  auto* c = app.add_subcommand("constant", "Evaluate a catalog constant at q");
  c->add_option("kind", constant.kind, "Constant name, e.g. c1, C1_best, c1_weak")->required();
  c->add_option("q", constant.q, "Exponent q, or 'inf'")->required();

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Upper bound C(p,q) for b_k = (k(k+1))^p");
  b->add_option("--p", bound.p, "Exponent of the auxiliary sequence")->capture_default_str();
  b->add_option("--N", bound.n, "Number of directly computed terms")->capture_default_str();
  b->add_option("--M", bound.m, "Inner series truncation index")->capture_default_str();
  b->add_option("--q", bound.q, "Exponent q")->capture_default_str();

  ExtremalArgs extremal;
  auto* e = app.add_subcommand("extremal", "Extremal sequences");
  e->add_option("which", extremal.which, "strong, weak-lower or weak-upper")->required();
  e->add_option("--q", extremal.q, "Exponent q")->capture_default_str();
  e->add_option("--kmax", extremal.kmax, "Vertex count or truncation length")->capture_default_str();

  ContinuousArgs continuous;
  auto* ct = app.add_subcommand("continuous", "Continuous inequalities on the extremal indicator");
  ct->add_option("which", continuous.which, "strong or weak")->required();
  ct->add_option("--q", continuous.q, "Exponent q")->capture_default_str();
  ct->add_option("--T", continuous.t, "Support length of (1/T) chi_(0,T)")->capture_default_str();

  SparseArgs sparse;
  auto* sp = app.add_subcommand("sparse", "Approximation-space / Lorentz equivalence");
  sp->add_option("action", sparse.action, "check")->required();
  sp->add_option("--alpha", sparse.alpha, "Approximation order alpha > 0")->capture_default_str();
  sp->add_option("--r", sparse.r, "'tau' or 'inf'")->capture_default_str();
  sp->add_option("--coeffs", sparse.coeffs, "Explicit coefficients (otherwise random inputs)")->delimiter(',');
  sp->add_option("--seed", sparse.seed, "Seed for random inputs")->capture_default_str();
  sp->add_option("--trials", sparse.trials, "Number of random inputs")->capture_default_str();

  FigureArgs figure;
  auto* fg = app.add_subcommand("figure", "Emit a figure curve as CSV");
  fg->add_option("tag", figure.tag, "fig1_c1, fig4_c1weak, fig5_C1weak, fig6_cont_pair, "
                                    "fig7_weakcont_pair or fig8_bounds_overlay")
      ->required();
  fg->add_option("--grid", figure.grid, "Number of 1/q samples")->capture_default_str();
  fg->add_option("--out", figure.out_path, "Output file (default: stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("suite", verify.suite, "strong, weak, continuous, sparse or all")->required();
  v->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
  v->add_option("--trials", verify.trials, "Random inputs per property")->capture_default_str();
  v->add_flag("--inject-failure", verify.inject)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return cmd_constant(constant, out);
    if (*b) return cmd_bound(bound, out);
    if (*e) return cmd_extremal(extremal, out);
    if (*ct) return cmd_continuous(continuous, out);
    if (*sp) return cmd_sparse(sparse, out);
    if (*fg) return cmd_figure(figure, out);
    if (*v) return cmd_verify(verify, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}

}  // namespace stechkin::cli
