#pragma once

#include <functional>

namespace stechkin {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;

  double midpoint() const { return lo + (hi - lo) / 2; }
  double half_width() const { return (hi - lo) / 2; }
};

/// Bisection on [lo, hi]. Requires f(lo) and f(hi) of opposite sign (a zero
/// at an endpoint counts). Stops when the half-width is <= half_width_tol,
/// after max_iterations, or when the midpoint no longer splits the bracket.
/// Throws BracketError without a sign change.
Bracket bisect(const std::function<double(double)>& f, double lo, double hi,
               double half_width_tol, int max_iterations = 200);

/// Golden-section search for the minimizer of a unimodal f on [lo, hi].
/// The returned bracket contains the minimizer.
Bracket golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                double half_width_tol, int max_iterations = 400);

}  // namespace stechkin
