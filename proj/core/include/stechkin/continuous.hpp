#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stechkin/certified.hpp"
#include "stechkin/exponent.hpp"

namespace stechkin {

/// Nonincreasing nonnegative staircase on (0, ∞): f = v_i on (t_{i-1}, t_i]
/// with t_0 = 0, and f = 0 beyond t_m.
class StepFunction {
 public:
  // Throws DomainError unless breakpoints are positive and strictly
  // increasing, levels are finite, nonnegative and nonincreasing, and both
  // have the same length m >= 1.
  StepFunction(std::vector<double> breakpoints, std::vector<double> levels);

  // (1/T) chi_{(0, T)}.
  static StepFunction normalized_indicator(double t);

  // Decreasing rearrangement of sampled data on cells of the given width.
  static StepFunction rearranged(std::span<const double> samples, double width);

  std::span<const double> breakpoints() const { return t_; }
  std::span<const double> levels() const { return v_; }
  std::size_t steps() const { return t_.size(); }

  double operator()(double t) const;
  double integral() const;
  // sup_t t f(t), attained at a right breakpoint.
  double sup_t_times_f() const;

  StepFunction scaled(double c) const;
  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);

  // R_i = int_{t_i}^∞ f^q: the part of the tail past panel i.
  std::vector<double> tail_powers(double q) const;

 private:
  std::vector<double> t_;
  std::vector<double> v_;
};

/// f(t) = scale / t.
struct ReciprocalPowerLaw {
  double scale = 1.0;
};

/// int_0^∞ ((1/t) int_t^∞ f^q)^{1/q} dt, by tanh-sinh quadrature per panel.
/// On the first panel t = t_1 s^{q'} removes the t^{-1/q} singularity.
/// err is the quadrature's own error estimate plus rounding. Throws
/// ConvergenceError if that estimate exceeds quad_tol relative to the
/// value.
CertifiedValue strong_cont_lhs(const StepFunction& f, Exponent q, double quad_tol = 1e-12);

struct StrongContinuousSandwich {
  CertifiedValue lhs;
  double integral = 0.0;
  double lhs_ratio = 0.0;  // lhs / int f, at most c1(q)
  double rhs_ratio = 0.0;  // int f / lhs, at most (q-1)^{1/q}
  bool lower_ok = false;
  bool upper_ok = false;
};

/// Both sides of the strong continuous inequality. Rejects int f = 0.
StrongContinuousSandwich strong_cont_sandwich(const StepFunction& f, Exponent q);

struct WeakContinuousValues {
  double weak_lhs = 0.0;     // sup_t t^{1-1/q} (int_t^∞ f^q)^{1/q}
  double weak_lhs_at = 0.0;  // a maximizing t (0 when t-independent)
  double weak_rhs = 0.0;     // sup_t t f(t)
};

/// Panel-wise closed-form sup: on each panel the objective is log-concave
/// with critical point t* = (q-1)(c t_i + R)/(c q), clipped to the panel.
WeakContinuousValues weak_cont_values(const StepFunction& f, Exponent q);
/// For scale/t the objective is constant: scale (q-1)^{-1/q}.
WeakContinuousValues weak_cont_values(const ReciprocalPowerLaw& f, Exponent q);

struct WeakContinuousSandwich {
  WeakContinuousValues values;
  bool lower_ok = false;  // weak_lhs <= (q-1)^{-1/q} sup t f
  bool upper_ok = false;  // sup t f <= C1_weak(q) weak_lhs
};

WeakContinuousSandwich weak_cont_sandwich(const StepFunction& f, Exponent q);

}  // namespace stechkin
