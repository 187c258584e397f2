#include "stechkin/functionals.hpp"

#include <cmath>

#include "stechkin/certified.hpp"

namespace stechkin {

FunctionalValue ell1(const MonotoneSequence& a) {
  return {compensated_sum(a.entries()), std::nullopt};
}

FunctionalValue gamma(const MonotoneSequence& a, Exponent q) {
  if (q.is_infinite()) return ell1(a);
  const SuffixPowerTable suffix = suffix_power_table(a, q);
  const double inv_q = q.reciprocal();
  CompensatedSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double mean = suffix[i] / static_cast<double>(i + 1);
    acc.add(q.is_one() ? mean : std::pow(mean, inv_q));
  }
  return {acc.value(), std::nullopt};
}

FunctionalValue weak_ell1(const MonotoneSequence& a) {
  double best = -1.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double v = static_cast<double>(i + 1) * a[i];
    if (v > best) {
      best = v;
      at = i + 1;
    }
  }
  return {best, at};
}

FunctionalValue weak_gamma(const MonotoneSequence& a, Exponent q) {
  if (q.is_infinite()) return weak_ell1(a);
  const SuffixPowerTable suffix = suffix_power_table(a, q);
  const double inv_q = q.reciprocal();
  double best = -1.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    const double v =
        q.is_one() ? suffix[i] : std::pow(n, 1.0 - inv_q) * std::pow(suffix[i], inv_q);
    if (v > best) {
      best = v;
      at = i + 1;
    }
  }
  return {best, at};
}

}  // namespace stechkin
