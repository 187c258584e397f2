#include "stechkin/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "stechkin/error.hpp"

namespace stechkin {

namespace {

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

MonotoneSequence random_monotone_sequence(Rng& rng, std::size_t max_len) {
  if (max_len < 1) throw DomainError("max_len must be >= 1");
  const std::size_t n = pick(rng, 1, max_len);
  std::vector<double> a(n);
  switch (pick(rng, 0, 4)) {
    case 0:
      for (double& x : a) x = uniform(rng);
      std::sort(a.begin(), a.end(), std::greater<>());
      break;
    case 1: {
      const double s = uniform(rng, 0.1, 3.0);
      for (std::size_t i = 0; i < n; ++i) a[i] = std::pow(static_cast<double>(i + 1), -s);
      break;
    }
    case 2: {
      const double ratio = uniform(rng, 0.5, 0.999);
      double v = 1.0;
      for (double& x : a) {
        x = v;
        v *= ratio;
      }
      break;
    }
    case 3: {
      // Flat prefix, then zeros: a simplex vertex.
      const std::size_t k = pick(rng, 1, n);
      for (std::size_t i = 0; i < n; ++i) a[i] = i < k ? 1.0 / static_cast<double>(k) : 0.0;
      break;
    }
    default: {
      // Few random levels with a zero tail.
      double v = uniform(rng, 0.5, 2.0);
      const std::size_t cut = pick(rng, 1, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i >= cut) {
          a[i] = 0.0;
          continue;
        }
        if (uniform(rng) < 0.2) v *= uniform(rng);
        a[i] = v;
      }
      break;
    }
  }
  return MonotoneSequence(std::move(a));
}

StepFunction random_step_function(Rng& rng, std::size_t max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  const std::size_t m = pick(rng, 1, max_steps);
  std::vector<double> t(m);
  std::vector<double> v(m);
  double at = 0.0;
  for (double& x : t) {
    at += uniform(rng, 0.05, 3.0);
    x = at;
  }
  for (double& x : v) x = uniform(rng, 0.0, 2.0);
  std::sort(v.begin(), v.end(), std::greater<>());
  if (v.front() == 0.0) v.front() = 1.0;
  return StepFunction(std::move(t), std::move(v));
}

MonotoneSequence sample_monotone_simplex(Rng& rng, std::size_t n) {
  if (n < 1) throw DomainError("simplex dimension must be >= 1");
  std::vector<double> cuts(n - 1);
  for (double& x : cuts) x = uniform(rng);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> w(n);
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    w[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  w[n - 1] = 1.0 - prev;
  // Sum of the vertices (1/k, ..., 1/k, 0, ...) weighted by w_k.
  std::vector<double> a(n);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    acc += w[i] / static_cast<double>(i + 1);
    a[i] = acc;
  }
  return MonotoneSequence(std::move(a));
}

}  // namespace stechkin
