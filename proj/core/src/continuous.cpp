#include "stechkin/continuous.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "stechkin/constants.hpp"
#include "stechkin/error.hpp"

namespace stechkin {

namespace {

void require_finite_q(const Exponent& q, const char* what) {
  if (!q.is_finite()) throw DomainError(std::string(what) + " requires 1 < q < inf");
}

// The integrator caches its abscissas; one per thread keeps calls pure.
boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts;
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> levels)
    : t_(std::move(breakpoints)), v_(std::move(levels)) {
  if (t_.empty()) throw DomainError("step function needs at least one step");
  if (t_.size() != v_.size()) throw DomainError("step function: breakpoints and levels differ in length");
  double prev_t = 0.0;
  double prev_v = HUGE_VAL;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!(t_[i] > prev_t) || !std::isfinite(t_[i])) {
      throw DomainError("step function: breakpoints must be positive and strictly increasing");
    }
    if (!(v_[i] >= 0.0) || !std::isfinite(v_[i]) || v_[i] > prev_v) {
      throw DomainError("step function: levels must be finite, nonnegative and nonincreasing");
    }
    prev_t = t_[i];
    prev_v = v_[i];
  }
}

StepFunction StepFunction::normalized_indicator(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("indicator needs a finite T > 0");
  return StepFunction({t}, {1.0 / t});
}

StepFunction StepFunction::rearranged(std::span<const double> samples, double width) {
  if (samples.empty()) throw DomainError("rearranged: no samples");
  if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("rearranged: width must be positive");
  std::vector<double> v(samples.size());
  std::vector<double> t(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) throw DomainError("rearranged: non-finite sample");
    v[i] = std::fabs(samples[i]);
    t[i] = static_cast<double>(i + 1) * width;
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return StepFunction(std::move(t), std::move(v));
}

double StepFunction::operator()(double t) const {
  if (!(t > 0.0)) throw DomainError("step function is defined on t > 0");
  const auto it = std::lower_bound(t_.begin(), t_.end(), t);
  if (it == t_.end()) return 0.0;
  return v_[static_cast<std::size_t>(it - t_.begin())];
}

double StepFunction::integral() const {
  CompensatedSum s;
  double prev = 0.0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    s.add(v_[i] * (t_[i] - prev));
    prev = t_[i];
  }
  return s.value();
}

double StepFunction::sup_t_times_f() const {
  double best = 0.0;
  for (std::size_t i = 0; i < t_.size(); ++i) best = std::max(best, t_[i] * v_[i]);
  return best;
}

StepFunction StepFunction::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("scale must be finite and >= 0");
  std::vector<double> v(v_);
  for (double& x : v) x *= c;
  return StepFunction(t_, std::move(v));
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  std::vector<double> t;
  t.reserve(f.t_.size() + g.t_.size());
  std::merge(f.t_.begin(), f.t_.end(), g.t_.begin(), g.t_.end(), std::back_inserter(t));
  t.erase(std::unique(t.begin(), t.end()), t.end());
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = f(t[i]) + g(t[i]);
  return StepFunction(std::move(t), std::move(v));
}

std::vector<double> StepFunction::tail_powers(double q) const {
  std::vector<double> r(t_.size(), 0.0);
  CompensatedSum s;
  for (std::size_t i = t_.size(); i-- > 0;) {
    r[i] = s.value();
    const double left = i == 0 ? 0.0 : t_[i - 1];
    s.add(std::pow(v_[i], q) * (t_[i] - left));
  }
  return r;
}

CertifiedValue strong_cont_lhs(const StepFunction& f, Exponent q, double quad_tol) {
  require_finite_q(q, "strong_cont_lhs");
  if (!(quad_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const double qv = q.value();
  const double qc = q.conjugate_value();
  const double r = q.reciprocal();
  const auto t = f.breakpoints();
  const auto v = f.levels();
  const std::vector<double> tails = f.tail_powers(qv);
  auto& ts = integrator();

  CompensatedSum total;
  double err = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double c = std::pow(v[i], qv);
    const double rest = tails[i];
    if (c == 0.0 && rest == 0.0) continue;
    const double b = t[i];
    double value = 0.0;
    double e = 0.0;
    double mag = 0.0;
    if (i == 0) {
      // t = b s^{q'}: (F(t)/t)^{1/q} dt = q' b^{1-1/q} F(b s^{q'})^{1/q} ds.
      const double pre = qc * std::pow(b, 1.0 - r);
      auto g = [&](double s) {
        const double one_minus = -std::expm1(qc * std::log(s));
        return pre * std::pow(c * b * one_minus + rest, r);
      };
      value = ts.integrate(g, 0.0, 1.0, quad_tol, &e, &mag);
    } else {
      const double a = t[i - 1];
      auto g = [&](double x) { return std::pow((c * (b - x) + rest) / x, r); };
      value = ts.integrate(g, a, b, quad_tol, &e, &mag);
    }
    total.add(value);
    err += e;
    l1 += mag;
  }
  const double value = total.value();
  const double rounding = 32 * kUnitRoundoff * l1 + total.error_bound(t.size());
  if (err > quad_tol * std::max(value, 1e-300) * 64) {
    std::ostringstream os;
    os << "strong_cont_lhs: quadrature error estimate " << err << " above tolerance";
    throw ConvergenceError(os.str(), err);
  }
  return {value, outward(err + rounding)};
}

StrongContinuousSandwich strong_cont_sandwich(const StepFunction& f, Exponent q) {
  require_finite_q(q, "strong_cont_sandwich");
  const double integral = f.integral();
  if (!(integral > 0.0)) throw DomainError("strong_cont_sandwich: int f = 0 is degenerate");
  StrongContinuousSandwich out;
  out.lhs = strong_cont_lhs(f, q);
  out.integral = integral;
  out.lhs_ratio = out.lhs.value / integral;
  out.rhs_ratio = integral / out.lhs.value;
  const ContinuousConstants k = continuous_constants(q);
  const double slack = 1.0 + 8 * kUnitRoundoff;
  out.lower_ok = out.lhs.lo() <= k.c1.hi() * integral * slack;
  out.upper_ok = integral <= k.C1.hi() * out.lhs.hi() * slack;
  return out;
}

WeakContinuousValues weak_cont_values(const StepFunction& f, Exponent q) {
  require_finite_q(q, "weak_cont_values");
  const double qv = q.value();
  const double r = q.reciprocal();
  const auto t = f.breakpoints();
  const auto v = f.levels();
  const std::vector<double> tails = f.tail_powers(qv);

  WeakContinuousValues out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double a = i == 0 ? 0.0 : t[i - 1];
    const double b = t[i];
    const double c = std::pow(v[i], qv);
    const double rest = tails[i];
    // log G(t) = (1-1/q) log t + (1/q) log(c(b - t) + R) is concave.
    double at = b;
    if (c > 0.0) at = std::clamp((qv - 1.0) * (c * b + rest) / (c * qv), a, b);
    if (at <= 0.0) continue;
    const double g = std::pow(at, 1.0 - r) * std::pow(c * (b - at) + rest, r);
    if (g > out.weak_lhs) {
      out.weak_lhs = g;
      out.weak_lhs_at = at;
    }
  }
  out.weak_rhs = f.sup_t_times_f();
  return out;
}

WeakContinuousValues weak_cont_values(const ReciprocalPowerLaw& f, Exponent q) {
  require_finite_q(q, "weak_cont_values");
  if (!(f.scale >= 0.0) || !std::isfinite(f.scale)) throw DomainError("power law scale must be >= 0");
  const double v = f.scale * std::pow(q.value() - 1.0, -q.reciprocal());
  return {v, 0.0, f.scale};
}

WeakContinuousSandwich weak_cont_sandwich(const StepFunction& f, Exponent q) {
  WeakContinuousSandwich out;
  out.values = weak_cont_values(f, q);
  const ContinuousConstants k = continuous_constants(q);
  const double slack = 1.0 + 16 * kUnitRoundoff;
  out.lower_ok = out.values.weak_lhs <= k.c1_weak.hi() * out.values.weak_rhs * slack;
  out.upper_ok = out.values.weak_rhs <= k.C1_weak.hi() * out.values.weak_lhs * slack;
  return out;
}

}  // namespace stechkin
