#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stechkin/constants.hpp"
#include "stechkin/functionals.hpp"
#include "stechkin/sampling.hpp"

using namespace stechkin;

namespace {

const Exponent two = Exponent::finite(2.0);

double rel(double x, double y) { return std::fabs(x - y) / std::fabs(y); }

}  // namespace

TEST_CASE("ell1 examples") {
  CHECK(ell1(MonotoneSequence({1.0, 0.0, 0.0})).value == 1.0);
  CHECK(ell1(MonotoneSequence({0.5, 0.5})).value == 1.0);
  CHECK(ell1(MonotoneSequence({1.0, 0.5, 1.0 / 3, 0.25})).value == doctest::Approx(25.0 / 12).epsilon(1e-15));
  CHECK_FALSE(ell1(MonotoneSequence({1.0})).attained_at.has_value());
}

TEST_CASE("gamma examples") {
  CHECK(gamma(MonotoneSequence({1.0, 0.0}), two).value == 1.0);
  // (1/2)^{1/2} + (1/8)^{1/2}
  CHECK(gamma(MonotoneSequence({0.5, 0.5}), two).value == doctest::Approx(1.0606601717798212).epsilon(1e-15));
  const std::vector<double> flat3(3, 1.0 / 3);
  const double g3 = gamma(MonotoneSequence(flat3), two).value;
  CHECK(g3 == doctest::Approx(static_cast<double>(oracle::vertex_formula(2.0, 3))).epsilon(1e-15));
  CHECK(g3 == doctest::Approx(1.1031336922).epsilon(1e-10));
}

TEST_CASE("weak functionals") {
  auto w = weak_ell1(MonotoneSequence({1.0, 0.5, 1.0 / 3}));
  CHECK(w.value == doctest::Approx(1.0));
  CHECK(*w.attained_at == 1);
  CHECK(*weak_ell1(MonotoneSequence({1.0, 0.0})).attained_at == 1);
  auto w2 = weak_ell1(MonotoneSequence({0.6, 0.5}));
  CHECK(w2.value == 1.0);
  CHECK(*w2.attained_at == 2);

  auto g = weak_gamma(MonotoneSequence({1.0, 0.0}), two);
  CHECK(g.value == 1.0);
  CHECK(*g.attained_at == 1);

  auto flat = weak_gamma(MonotoneSequence(std::vector<double>(4, 0.25)), two);
  CHECK(flat.value == doctest::Approx(std::sqrt(6.0) / 4).epsilon(1e-15));
  CHECK(*flat.attained_at == 2);

  std::vector<double> h(1000);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = 1.0 / static_cast<double>(i + 1);
  auto hv = weak_gamma(MonotoneSequence(h), two);
  CHECK(*hv.attained_at == 1);
  CHECK(hv.value == doctest::Approx(1.2821601).epsilon(1e-7));
  long double partial = 0;
  for (int k = 1000; k >= 1; --k) partial += 1.0L / (static_cast<long double>(k) * k);
  CHECK(hv.value == doctest::Approx(static_cast<double>(std::sqrt(partial))).epsilon(1e-14));
}

TEST_CASE("functionals agree with brute force") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_monotone_sequence(rng, 300);
    const std::vector<double> v(a.entries().begin(), a.entries().end());
    for (double qv : {1.5, 2.0, 3.0, 7.0}) {
      const Exponent q = Exponent::finite(qv);
      const double ref = static_cast<double>(oracle::gamma_brute(v, qv));
      CHECK(rel(gamma(a, q).value, ref) <= 1e-13);
      std::size_t at = 0;
      const double wref = static_cast<double>(oracle::weak_gamma_brute(v, qv, &at));
      CHECK(rel(weak_gamma(a, q).value, wref) <= 1e-13);
    }
  }
}

TEST_CASE("homogeneity, monotonicity and degenerate exponents") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_monotone_sequence(rng, 200);
    const double t = std::uniform_real_distribution<double>(0.0, 5.0)(rng);
    const auto ta = a.scaled(t);
    for (double qv : {1.5, 2.0, 3.0}) {
      const Exponent q = Exponent::finite(qv);
      CHECK(gamma(ta, q).value == doctest::Approx(t * gamma(a, q).value).epsilon(1e-12));
      CHECK(weak_gamma(ta, q).value == doctest::Approx(t * weak_gamma(a, q).value).epsilon(1e-12));
      // Entrywise a <= 2a.
      const auto b = a.scaled(2.0);
      CHECK(gamma(a, q).value <= gamma(b, q).value);
      CHECK(weak_gamma(a, q).value <= weak_gamma(b, q).value);
    }
    CHECK(ell1(ta).value == doctest::Approx(t * ell1(a).value).epsilon(1e-12));
    CHECK(weak_ell1(ta).value == doctest::Approx(t * weak_ell1(a).value).epsilon(1e-12));
    CHECK(gamma(a, Exponent::infinity()).value == ell1(a).value);
    CHECK(weak_gamma(a, Exponent::infinity()).value == weak_ell1(a).value);
    CHECK(ell1(a).value <= gamma(a, Exponent::one()).value * (1 + 1e-14));
  }
}

TEST_CASE("discrete sandwiches on random sequences") {
  Rng rng(8);
  for (double qv : {1.5, 2.0, 3.0}) {
    const Exponent q = Exponent::finite(qv);
    const double lo = c1(q).hi();
    const double hi = C1_best(q).hi();
    const double wlo = c1_weak(q).hi();
    const double whi = C1_weak(q).hi();
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_monotone_sequence(rng, 500);
      const double s = ell1(a).value;
      const double g = gamma(a, q).value;
      CHECK(g <= lo * s * (1 + 1e-12));
      CHECK(s <= hi * g * (1 + 1e-12));
      const double ws = weak_ell1(a).value;
      const double wg = weak_gamma(a, q).value;
      CHECK(wg <= wlo * ws * (1 + 1e-12));
      CHECK(ws <= whi * wg * (1 + 1e-12));
    }
  }
}
