#include "stechkin/extremal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "stechkin/certified.hpp"
#include "stechkin/error.hpp"
#include "stechkin/functionals.hpp"
#include "stechkin/sequence.hpp"

namespace stechkin {

namespace {

constexpr std::uint64_t kMaxSearch = 1000000;
constexpr std::uint64_t kDirectSearchLimit = 1024;

void require_finite_q(const Exponent& q, const char* what) {
  if (!q.is_finite()) throw DomainError(std::string(what) + " requires 1 < q < inf");
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
std::unique_ptr<T[], FftwFree> fftw_array(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (!p) throw std::bad_alloc();
  return std::unique_ptr<T[], FftwFree>(p);
}

// c[j] = sum_i x[i] y[j - i] for j < x.size() + y.size() - 1.
std::vector<double> convolve(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t need = x.size() + y.size() - 1;
  std::size_t len = 1;
  while (len < need) len <<= 1;
  const std::size_t half = len / 2 + 1;

  auto a = fftw_array<double>(len);
  auto b = fftw_array<double>(len);
  auto fa = fftw_array<fftw_complex>(half);
  auto fb = fftw_array<fftw_complex>(half);
  const int n = static_cast<int>(len);
  fftw_plan pa = fftw_plan_dft_r2c_1d(n, a.get(), fa.get(), FFTW_ESTIMATE);
  fftw_plan pb = fftw_plan_dft_r2c_1d(n, b.get(), fb.get(), FFTW_ESTIMATE);
  fftw_plan inv = fftw_plan_dft_c2r_1d(n, fa.get(), a.get(), FFTW_ESTIMATE);

  std::fill_n(a.get(), len, 0.0);
  std::fill_n(b.get(), len, 0.0);
  std::copy(x.begin(), x.end(), a.get());
  std::copy(y.begin(), y.end(), b.get());
  fftw_execute(pa);
  fftw_execute(pb);
  for (std::size_t i = 0; i < half; ++i) {
    const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
    const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
    fa[i][0] = re;
    fa[i][1] = im;
  }
  fftw_execute(inv);
  fftw_destroy_plan(pa);
  fftw_destroy_plan(pb);
  fftw_destroy_plan(inv);

  std::vector<double> c(need);
  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t j = 0; j < need; ++j) c[j] = a[j] * scale;
  return c;
}

}  // namespace

double vertex_sum(Exponent q, std::uint64_t k0) {
  require_finite_q(q, "vertex_sum");
  if (k0 < 1) throw DomainError("vertex_sum requires k0 >= 1");
  const double kp1 = static_cast<double>(k0) + 1.0;
  CompensatedSum s;
  if (q.value() == 2.0) {
    for (std::uint64_t n = 1; n <= k0; ++n) {
      const double nd = static_cast<double>(n);
      s.add(std::sqrt((kp1 - nd) / nd));
    }
  } else {
    const double r = q.reciprocal();
    for (std::uint64_t n = 1; n <= k0; ++n) {
      const double nd = static_cast<double>(n);
      s.add(std::pow((kp1 - nd) / nd, r));
    }
  }
  return s.value() / static_cast<double>(k0);
}

IntegralBrackets integral_brackets(std::uint64_t k0) {
  if (k0 < 1) throw DomainError("integral_brackets requires k0 >= 1");
  const double k = static_cast<double>(k0);
  const double c = k + 1.0;
  const double rk = std::sqrt(k);
  // Antiderivative of sqrt((c - t)/t): c arcsin(sqrt(t/c)) + sqrt(t(c - t)).
  const double lower = (c * std::numbers::pi / 2 - rk - c * std::atan(1.0 / rk)) / k;
  const double upper = (rk + c * (std::atan(rk) - std::atan(1.0 / rk))) / k;
  return {lower, upper};
}

WeakExtremal weak_lower_extremal(Exponent q, std::size_t k) {
  if (!q.is_finite() || q.value() <= 1.0 + 1e-3) {
    throw DomainError("weak_lower_extremal requires 1.001 < q < inf");
  }
  if (k < 1) throw DomainError("weak_lower_extremal requires K >= 1");
  std::vector<double> a(k);
  for (std::size_t n = 0; n < k; ++n) a[n] = 1.0 / static_cast<double>(n + 1);
  const FunctionalValue v = weak_gamma(MonotoneSequence(std::move(a)), q);
  return {v.value, *v.attained_at};
}

WeakExtremal weak_upper_extremal(Exponent q, std::size_t n) {
  require_finite_q(q, "weak_upper_extremal");
  if (n < 1) throw DomainError("weak_upper_extremal requires N >= 1");
  const double nd = static_cast<double>(n);
  const FunctionalValue v = weak_gamma(MonotoneSequence(std::vector<double>(n, 1.0 / nd)), q);
  std::size_t at = *v.attained_at;

  const double x = (nd + 1.0) * (1.0 - q.reciprocal());
  const auto lo = static_cast<std::size_t>(std::max(1.0, std::floor(x)));
  const auto hi = static_cast<std::size_t>(std::min(nd, std::ceil(x)));
  // Candidates that differ only by rounding count as a tie.
  if (at == hi && lo < hi) {
    const double r = q.reciprocal();
    const double ld = static_cast<double>(lo);
    const double at_lo = std::pow(ld, 1.0 - r) * std::pow((nd - ld + 1.0) / nd, r) / std::pow(nd, 1.0 - r);
    if (at_lo >= v.value * (1.0 - 8 * kUnitRoundoff)) at = lo;
  }
  if (at < lo || at > hi) {
    throw std::logic_error("weak_upper_extremal: maximizer outside {floor, ceil} of (N+1)(1-1/q)");
  }
  return {v.value, at};
}

VertexSearch simplex_vertex_search(Exponent q, std::uint64_t n) {
  require_finite_q(q, "simplex_vertex_search");
  if (n < 1 || n > kMaxSearch) throw DomainError("simplex_vertex_search requires 1 <= N <= 10^6");
  VertexSearch best;
  auto consider = [&](std::uint64_t k0, double v) {
    if (v > best.best_ratio) {
      best.best_ratio = v;
      best.best_k0 = k0;
    }
  };

  if (n <= kDirectSearchLimit) {
    for (std::uint64_t k0 = 1; k0 <= n; ++k0) consider(k0, vertex_sum(q, k0));
    return best;
  }

  const double r = q.reciprocal();
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> w(n + 1, 0.0);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double d = static_cast<double>(i);
    u[i] = std::pow(d, -r);
    w[i] = std::pow(d, r);
  }

  // (u * w)[k0 + 1] = sum_n u[n] w[k0 + 1 - n] = k0 * vertex_sum(q, k0).
  const std::vector<double> conv = convolve(u, w);
  double norm_u = 0.0;
  double norm_w = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    norm_u += u[i] * u[i];
    norm_w += w[i] * w[i];
  }
  // Standard forward error bound for FFT convolution, with a safety factor.
  const double noise = 16.0 * kUnitRoundoff * std::log2(static_cast<double>(conv.size())) *
                       std::sqrt(norm_u) * std::sqrt(norm_w);

  // The direct sums round differently from u[n] w[m]; allow for that too.
  std::vector<double> approx(n + 1, 0.0);
  std::vector<double> slack(n + 1, 0.0);
  double floor_best = -1.0;
  for (std::uint64_t k0 = 1; k0 <= n; ++k0) {
    const double kd = static_cast<double>(k0);
    approx[k0] = conv[k0 + 1] / kd;
    slack[k0] = noise / kd + 16 * kUnitRoundoff * std::fabs(approx[k0]);
    floor_best = std::max(floor_best, approx[k0] - slack[k0]);
  }
  for (std::uint64_t k0 = 1; k0 <= n; ++k0) {
    if (approx[k0] + slack[k0] >= floor_best) {
      consider(k0, vertex_sum(q, k0));
    }
  }
  return best;
}

}  // namespace stechkin
