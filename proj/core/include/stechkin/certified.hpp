#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace stechkin {

inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Error terms are inflated by this factor whenever they are combined, so the
// rounding committed while computing the error itself stays inside the bound.
inline constexpr double kOutwardFactor = 1.0 + 0x1p-40;

inline double outward(double err) { return err * kOutwardFactor; }

/// A binary64 value together with a nonnegative radius such that the exact
/// quantity lies in [value - err, value + err].
struct CertifiedValue {
  double value = 0.0;
  double err = 0.0;

  double lo() const { return value - err; }
  double hi() const { return value + err; }
  bool contains(double x) const { return lo() <= x && x <= hi(); }

  // Closed-form evaluation whose rounding is covered by `ulps` units of
  // relative roundoff.
  static CertifiedValue rounded(double v, double ulps) {
    return {v, outward(ulps * kUnitRoundoff * std::fabs(v))};
  }
  static CertifiedValue exact(double v) { return {v, 0.0}; }
};

// Enclosure of x^e for an enclosure x (x.lo() clamped at 0, e > 0).
inline CertifiedValue certified_pow(const CertifiedValue& x, double e, double ulps = 4) {
  const double v = std::pow(x.value, e);
  const double hi = std::pow(x.hi(), e);
  const double lo = std::pow(std::fmax(x.lo(), 0.0), e);
  const double spread = std::fmax(hi - v, v - lo);
  return {v, outward(spread + ulps * kUnitRoundoff * std::fabs(hi))};
}

/// Neumaier's variant of Kahan summation. The compensation term is kept
/// separately and folded in on read.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    abs_ += std::fabs(x);
  }

  double value() const { return sum_ + comp_; }

  // Sum of |x_i| seen so far; used for rounding bounds.
  double magnitude() const { return abs_; }

  // Bound on |value() - exact sum| for the addends as given.
  double error_bound(std::size_t n) const {
    const double u = kUnitRoundoff;
    return outward((2 * u + static_cast<double>(n) * u * u) * abs_);
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace stechkin
