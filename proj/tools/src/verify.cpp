#include "stechkin_cli/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "stechkin/bound_engine.hpp"
#include "stechkin/constants.hpp"
#include "stechkin/continuous.hpp"
#include "stechkin/extremal.hpp"
#include "stechkin/functionals.hpp"
#include "stechkin/sampling.hpp"
#include "stechkin/sparse.hpp"

namespace stechkin::cli {

namespace {

constexpr double kStrongQs[] = {1.5, 2.0, 3.0};
constexpr std::size_t kMaxLen = 400;

// A trial returns an empty string on success, else a description of the
// violated inequality.
using Trial = std::function<std::string(Rng&, std::size_t)>;

struct Property {
  std::string name;
  Trial trial;
};

std::uint64_t mix(std::uint64_t seed, std::string_view name, std::size_t index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  std::seed_seq seq{seed, h, static_cast<std::uint64_t>(index)};
  std::uint64_t out[1];
  seq.generate(out, out + 1);
  return out[0];
}

std::string describe(std::string_view what, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": " << lhs << " vs " << rhs;
  return os.str();
}

bool le(double a, double b, double rel = 1e-12) { return a <= b * (1 + rel) + 1e-300; }

std::vector<Property> strong_properties() {
  std::vector<Property> ps;
  for (double qv : kStrongQs) {
    const Exponent q = Exponent::finite(qv);
    const double lo = c1(q).hi();
    const double hi = C1_best(q).hi();
    ps.push_back({"sandwich_strong_q" + std::to_string(qv).substr(0, 3), [=](Rng& rng, std::size_t) {
                    const auto a = random_monotone_sequence(rng, kMaxLen);
                    const double g = gamma(a, q).value;
                    const double s = ell1(a).value;
                    if (!le(g, lo * s)) return describe("gamma/c1 <= ell1", g / lo, s);
                    if (!le(s, hi * g)) return describe("ell1 <= C1_best gamma", s, hi * g);
                    return std::string();
                  }});
  }
  ps.push_back({"homogeneity", [](Rng& rng, std::size_t) {
                  const auto a = random_monotone_sequence(rng, kMaxLen);
                  const double t = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
                  const auto ta = a.scaled(t);
                  for (double qv : kStrongQs) {
                    const Exponent q = Exponent::finite(qv);
                    const double x = gamma(ta, q).value;
                    const double y = t * gamma(a, q).value;
                    if (std::fabs(x - y) > 1e-12 * std::fabs(y)) return describe("gamma(t a) = t gamma(a)", x, y);
                    const double wx = weak_gamma(ta, q).value;
                    const double wy = t * weak_gamma(a, q).value;
                    if (std::fabs(wx - wy) > 1e-12 * std::fabs(wy)) {
                      return describe("weak_gamma(t a) = t weak_gamma(a)", wx, wy);
                    }
                  }
                  return std::string();
                }});
  ps.push_back({"monotonicity", [](Rng& rng, std::size_t) {
                  const auto a = random_monotone_sequence(rng, kMaxLen);
                  std::vector<double> b(a.entries().begin(), a.entries().end());
                  std::vector<double> d(b.size());
                  for (double& x : d) x = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
                  std::sort(d.begin(), d.end(), std::greater<>());
                  for (std::size_t i = 0; i < b.size(); ++i) b[i] += d[i];
                  const MonotoneSequence bb(std::move(b));
                  for (double qv : kStrongQs) {
                    const Exponent q = Exponent::finite(qv);
                    if (!le(gamma(a, q).value, gamma(bb, q).value)) return std::string("gamma monotone");
                    if (!le(weak_gamma(a, q).value, weak_gamma(bb, q).value)) {
                      return std::string("weak_gamma monotone");
                    }
                  }
                  if (!le(ell1(a).value, ell1(bb).value)) return std::string("ell1 monotone");
                  if (!le(weak_ell1(a).value, weak_ell1(bb).value)) return std::string("weak_ell1 monotone");
                  return std::string();
                }});
  ps.push_back({"infinite_exponent", [](Rng& rng, std::size_t) {
                  const auto a = random_monotone_sequence(rng, kMaxLen);
                  const Exponent inf = Exponent::infinity();
                  if (gamma(a, inf).value != ell1(a).value) return std::string("gamma(a, inf) != ell1(a)");
                  if (weak_gamma(a, inf).value != weak_ell1(a).value) {
                    return std::string("weak_gamma(a, inf) != weak_ell1(a)");
                  }
                  return std::string();
                }});
  ps.push_back({"q_one_convention", [](Rng& rng, std::size_t) {
                  const auto a = random_monotone_sequence(rng, kMaxLen);
                  const double s = ell1(a).value;
                  const double g = gamma(a, Exponent::one()).value;
                  if (!le(s, g)) return describe("ell1 <= gamma_1", s, g);
                  return std::string();
                }});
  // One bound report per (q, p); trials only draw sequences.
  for (double qv : {1.5, 2.0, 2.5}) {
    for (double p : {0.88, 1.0}) {
      const Exponent q = Exponent::finite(qv);
      const double bound = c_b(q, AuxSequence::power_family(p), 100, 200000).certified_upper();
      std::ostringstream name;
      name << "aux_bound_q" << qv << "_p" << p;
      ps.push_back({name.str(), [=](Rng& rng, std::size_t) {
                      const auto a = random_monotone_sequence(rng, kMaxLen);
                      const double s = ell1(a).value;
                      const double g = gamma(a, q).value;
                      if (!le(s, bound * g)) return describe("ell1 <= C_b gamma", s, bound * g);
                      return std::string();
                    }});
    }
  }
  return ps;
}

std::vector<Property> weak_properties() {
  std::vector<Property> ps;
  for (double qv : kStrongQs) {
    const Exponent q = Exponent::finite(qv);
    const double lo = c1_weak(q).hi();
    const double hi = C1_weak(q).hi();
    ps.push_back({"sandwich_weak_q" + std::to_string(qv).substr(0, 3), [=](Rng& rng, std::size_t) {
                    const auto a = random_monotone_sequence(rng, kMaxLen);
                    const double g = weak_gamma(a, q).value;
                    const double s = weak_ell1(a).value;
                    if (!le(g, lo * s)) return describe("weak_gamma/c1_weak <= weak_ell1", g / lo, s);
                    if (!le(s, hi * g)) return describe("weak_ell1 <= C1_weak weak_gamma", s, hi * g);
                    return std::string();
                  }});
  }
  ps.push_back({"harmonic_argmax_is_one", [](Rng& rng, std::size_t) {
                  constexpr double qs[] = {1.5, 2.0, 3.0};
                  constexpr std::size_t ks[] = {100, 10000};
                  const double qv = qs[std::uniform_int_distribution<int>(0, 2)(rng)];
                  const std::size_t k = ks[std::uniform_int_distribution<int>(0, 1)(rng)];
                  const auto r = weak_lower_extremal(Exponent::finite(qv), k);
                  if (r.argmax != 1) return describe("argmax", static_cast<double>(r.argmax), 1.0);
                  return std::string();
                }});
  ps.push_back({"flat_is_weak_minimizer", [](Rng& rng, std::size_t) {
                  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
                  const double qv = std::uniform_real_distribution<double>(1.2, 6.0)(rng);
                  const Exponent q = Exponent::finite(qv);
                  auto a = random_monotone_sequence(rng, n);
                  const double s = weak_ell1(a).value;
                  if (s == 0.0) return std::string();
                  a = a.scaled(1.0 / s);
                  const std::size_t support = a.size();
                  const double flat = weak_upper_extremal(q, support).value;
                  const double g = weak_gamma(a, q).value;
                  if (g < flat - 1e-12) return describe("weak_gamma >= flat value", g, flat);
                  return std::string();
                }});
  return ps;
}

std::vector<Property> continuous_properties() {
  std::vector<Property> ps;
  ps.push_back({"sandwich_strong_continuous", [](Rng& rng, std::size_t) {
                  const auto f = random_step_function(rng, 8);
                  const double qv = kStrongQs[std::uniform_int_distribution<int>(0, 2)(rng)];
                  const auto s = strong_cont_sandwich(f, Exponent::finite(qv));
                  if (!s.lower_ok) return describe("lhs <= c1 int f", s.lhs.value, s.integral);
                  if (!s.upper_ok) return describe("int f <= (q-1)^{1/q} lhs", s.integral, s.lhs.value);
                  return std::string();
                }});
  ps.push_back({"sandwich_weak_continuous", [](Rng& rng, std::size_t) {
                  const auto f = random_step_function(rng, 8);
                  const double qv = kStrongQs[std::uniform_int_distribution<int>(0, 2)(rng)];
                  const auto s = weak_cont_sandwich(f, Exponent::finite(qv));
                  if (!s.lower_ok) return describe("weak lhs", s.values.weak_lhs, s.values.weak_rhs);
                  if (!s.upper_ok) return describe("weak rhs", s.values.weak_rhs, s.values.weak_lhs);
                  return std::string();
                }});
  ps.push_back({"subadditivity", [](Rng& rng, std::size_t) {
                  const auto f = random_step_function(rng, 5);
                  const auto g = random_step_function(rng, 5);
                  const Exponent q = Exponent::finite(kStrongQs[std::uniform_int_distribution<int>(0, 2)(rng)]);
                  const auto fg = strong_cont_lhs(f + g, q);
                  const auto a = strong_cont_lhs(f, q);
                  const auto b = strong_cont_lhs(g, q);
                  if (fg.lo() > a.hi() + b.hi()) return describe("lhs(f+g) <= lhs(f) + lhs(g)", fg.value, a.value + b.value);
                  return std::string();
                }});
  ps.push_back({"indicator_scale_invariance", [](Rng& rng, std::size_t) {
                  const double t = std::uniform_real_distribution<double>(0.1, 20.0)(rng);
                  const Exponent q = Exponent::finite(kStrongQs[std::uniform_int_distribution<int>(0, 2)(rng)]);
                  const double x = strong_cont_lhs(StepFunction::normalized_indicator(t), q).value;
                  const double y = strong_cont_lhs(StepFunction::normalized_indicator(1.0), q).value;
                  if (std::fabs(x - y) > 1e-10) return describe("T-invariance", x, y);
                  return std::string();
                }});
  return ps;
}

std::vector<Property> sparse_properties() {
  std::vector<Property> ps;
  struct Mode {
    double alpha;
    RMode r;
    const char* name;
  };
  for (const Mode m : {Mode{0.5, RMode::tau, "equivalence_a0.5_tau"}, Mode{0.5, RMode::infinity, "equivalence_a0.5_inf"},
                       Mode{1.5, RMode::tau, "equivalence_a1.5_tau"}}) {
    ps.push_back({m.name, [m](Rng& rng, std::size_t) {
                    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
                    std::normal_distribution<double> gauss;
                    std::vector<double> c(n);
                    for (double& x : c) x = gauss(rng);
                    if (std::all_of(c.begin(), c.end(), [](double x) { return x == 0.0; })) c[0] = 1.0;
                    const auto r = equivalence_check(CoeffVector(std::move(c)), m.alpha, m.r);
                    if (!r.low_ok) return describe("approx/c <= lorentz", r.approx_norm / r.constants.c.value, r.lorentz);
                    if (!r.high_ok) return describe("lorentz <= C approx", r.lorentz, r.constants.C.value * r.approx_norm);
                    return std::string();
                  }});
  }
  ps.push_back({"substitution_identity", [](Rng& rng, std::size_t) {
                  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
                  const double alpha = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
                  std::normal_distribution<double> gauss;
                  std::vector<double> c(n);
                  for (double& x : c) x = gauss(rng);
                  const CoeffVector cv(c);
                  const ApproxParams p(alpha, 1.0 / (alpha + 0.5));
                  const double lhs = std::pow(approx_space_norm(cv, p), p.tau());
                  std::vector<double> a = cv.rearranged();
                  for (double& x : a) x = std::pow(x, p.tau());
                  const double rhs = gamma(MonotoneSequence(std::move(a)), Exponent::finite(2 * alpha + 1)).value;
                  if (std::fabs(lhs - rhs) > 1e-10 * std::fabs(rhs)) return describe("||f||^tau = gamma", lhs, rhs);
                  return std::string();
                }});
  ps.push_back({"errors_permutation_invariant", [](Rng& rng, std::size_t) {
                  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
                  std::normal_distribution<double> gauss;
                  std::vector<double> c(n);
                  for (double& x : c) x = gauss(rng);
                  std::vector<double> d(c);
                  std::shuffle(d.begin(), d.end(), rng);
                  for (double& x : d) x = std::bernoulli_distribution(0.5)(rng) ? -x : x;
                  const auto e = approximation_errors(CoeffVector(c));
                  const auto f = approximation_errors(CoeffVector(d));
                  for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] != f[i]) return describe("E_n permutation", e[i], f[i]);
                    if (i > 0 && e[i] > e[i - 1]) return describe("E_n nonincreasing", e[i], e[i - 1]);
                  }
                  return std::string();
                }});
  return ps;
}

std::vector<Property> properties(Suite s) {
  switch (s) {
    case Suite::strong:
      return strong_properties();
    case Suite::weak:
      return weak_properties();
    case Suite::continuous:
      return continuous_properties();
    case Suite::sparse:
      return sparse_properties();
    case Suite::all: {
      std::vector<Property> all;
      for (Suite part : {Suite::strong, Suite::weak, Suite::continuous, Suite::sparse}) {
        for (Property& p : properties(part)) all.push_back(std::move(p));
      }
      return all;
    }
  }
  return {};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::strong, Suite::weak, Suite::continuous, Suite::sparse, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::strong:
      return "strong";
    case Suite::weak:
      return "weak";
    case Suite::continuous:
      return "continuous";
    case Suite::sparse:
      return "sparse";
    case Suite::all:
      return "all";
  }
  return "?";
}

std::vector<PropertyResult> run_verify(Suite s, const VerifyOptions& opts) {
  std::vector<PropertyResult> out;
  if (opts.trials == 0) return out;
  const std::vector<Property> props = properties(s);
  for (std::size_t pi = 0; pi < props.size(); ++pi) {
    const Property& p = props[pi];
    PropertyResult r;
    r.name = p.name;
    for (std::size_t i = 0; i < opts.trials; ++i) {
      Rng rng(mix(opts.seed, p.name, i));
      std::string why = p.trial(rng, i);
      if (opts.inject_failure && pi == 0 && i == 0) why = why.empty() ? "injected failure" : std::string();
      if (why.empty()) {
        ++r.passed;
        continue;
      }
      if (r.failed++ == 0) {
        std::ostringstream os;
        os << p.name << " seed=" << opts.seed << " trial=" << i << ": " << why;
        r.first_failure = os.str();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace stechkin::cli
