#include "stechkin/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "stechkin/error.hpp"

namespace stechkin {

namespace {

// (sum_n w_n^r / n)^{1/r} or sup_n w_n, with w supplied by index.
template <typename Weighted>
double weighted_norm(std::size_t len, double r, Weighted w) {
  if (std::isinf(r)) {
    double best = 0.0;
    for (std::size_t n = 1; n <= len; ++n) best = std::max(best, w(n));
    return best;
  }
  CompensatedSum s;
  for (std::size_t n = 1; n <= len; ++n) s.add(std::pow(w(n), r) / static_cast<double>(n));
  return std::pow(s.value(), 1.0 / r);
}

}  // namespace

CoeffVector::CoeffVector(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  for (double x : c_) {
    if (!std::isfinite(x)) throw DomainError("coefficient vector has a non-finite entry");
  }
}

std::vector<double> CoeffVector::rearranged() const {
  std::vector<double> a(c_.size());
  std::transform(c_.begin(), c_.end(), a.begin(), [](double x) { return std::fabs(x); });
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

ApproxParams::ApproxParams(double alpha, double r) : alpha_(alpha), r_(r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > 0");
  if (!(r > 0.0)) throw DomainError("r must be > 0");
}

std::vector<double> approximation_errors(const CoeffVector& c) {
  const std::vector<double> a = c.rearranged();
  std::vector<double> e(a.size() + 1, 0.0);
  CompensatedSum s;
  for (std::size_t i = a.size(); i-- > 0;) {
    s.add(a[i] * a[i]);
    e[i] = std::sqrt(s.value());
  }
  return e;
}

double approx_space_norm(const CoeffVector& c, const ApproxParams& p) {
  const std::vector<double> e = approximation_errors(c);
  const double alpha = p.alpha();
  return weighted_norm(c.size(), p.r(), [&](std::size_t n) {
    return std::pow(static_cast<double>(n), alpha) * e[n - 1];
  });
}

double lorentz_norm(const CoeffVector& c, double p, double r) {
  if (!(p > 0.0)) throw DomainError("Lorentz index p must be > 0");
  if (!(r > 0.0)) throw DomainError("Lorentz index r must be > 0");
  const std::vector<double> a = c.rearranged();
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return weighted_norm(a.size(), r, [&](std::size_t n) {
    return std::pow(static_cast<double>(n), inv_p) * a[n - 1];
  });
}

DevoreConstants devore_constants(double alpha, RMode mode) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > 0");
  const Exponent q = Exponent::finite(2.0 * alpha + 1.0);
  const double power = alpha + 0.5;
  DevoreConstants out;
  if (mode == RMode::tau) {
    out.c = certified_pow(c1(q), power);
    out.C = certified_pow(C1_best(q), power);
    out.C_status = C1_best_status(q);
  } else {
    out.c = certified_pow(c1_weak(q), power);
    out.C = certified_pow(C1_weak(q), power);
  }
  // x^1 is exact; keep the catalog value untouched.
  if (power == 1.0) {
    out.c = mode == RMode::tau ? c1(q) : c1_weak(q);
    out.C = mode == RMode::tau ? C1_best(q) : C1_weak(q);
  }
  return out;
}

EquivalenceCheck equivalence_check(const CoeffVector& c, double alpha, RMode mode) {
  const bool nonzero = std::any_of(c.coefficients().begin(), c.coefficients().end(),
                                   [](double x) { return x != 0.0; });
  if (!nonzero) throw DomainError("equivalence_check needs a nonzero vector");
  const ApproxParams params(alpha, mode == RMode::tau ? 1.0 / (alpha + 0.5) : HUGE_VAL);
  EquivalenceCheck out;
  out.approx_norm = approx_space_norm(c, params);
  out.lorentz = lorentz_norm(c, params.tau(), params.r());
  out.constants = devore_constants(alpha, mode);
  // Evaluating the norms costs a handful of roundings per term.
  constexpr double rel = 1e-12;
  out.low_ok = out.approx_norm <= out.constants.c.hi() * out.lorentz * (1 + rel);
  out.high_ok = out.lorentz <= out.constants.C.hi() * out.approx_norm * (1 + rel);
  return out;
}

}  // namespace stechkin
