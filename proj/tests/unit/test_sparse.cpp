#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "stechkin/constants.hpp"
#include "stechkin/error.hpp"
#include "stechkin/functionals.hpp"
#include "stechkin/sampling.hpp"
#include "stechkin/sparse.hpp"

using namespace stechkin;

namespace {

std::vector<double> gaussian_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> gauss;
  std::vector<double> c(n);
  for (double& x : c) x = gauss(rng);
  return c;
}

}  // namespace

TEST_CASE("approximation errors") {
  const auto e = approximation_errors(CoeffVector({3.0, -4.0}));
  REQUIRE(e.size() == 3);
  CHECK(e[0] == 5.0);
  CHECK(e[1] == 3.0);
  CHECK(e[2] == 0.0);
  const auto ones = approximation_errors(CoeffVector({1.0, 1.0, 1.0, 1.0}));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(ones[n - 1] == doctest::Approx(std::sqrt(5.0 - n)).epsilon(1e-15));
  CHECK_THROWS_AS(CoeffVector({1.0, NAN}), DomainError);
}

TEST_CASE("norm examples") {
  const CoeffVector c({3.0, 4.0});
  CHECK(approx_space_norm(c, ApproxParams(0.5, HUGE_VAL)) == 5.0);
  CHECK(approx_space_norm(c, ApproxParams(0.5, 1.0)) == doctest::Approx(5 + 3 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::fabs(approx_space_norm(c, ApproxParams(0.5, 1.0)) - 7.1213) <= 1e-4);
  CHECK(lorentz_norm(c, 2.0, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lorentz_norm(c, HUGE_VAL, HUGE_VAL) == 4.0);
  CHECK(lorentz_norm(c, 1.0, HUGE_VAL) == 6.0);
  CHECK(ApproxParams(0.5, 1.0).tau() == 1.0);
  CHECK_THROWS_AS(ApproxParams(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ApproxParams(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(lorentz_norm(c, 0.0, 1.0), DomainError);
}

TEST_CASE("Lorentz l_{2,2} is the Euclidean norm") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto v = gaussian_vector(rng, 1 + i * 3);
    long double s = 0;
    for (double x : v) s += static_cast<long double>(x) * x;
    CHECK(lorentz_norm(CoeffVector(v), 2.0, 2.0) == doctest::Approx(static_cast<double>(std::sqrt(s))).epsilon(1e-13));
  }
}

TEST_CASE("equivalence constants") {
  const auto t = devore_constants(0.5, RMode::tau);
  CHECK(t.c.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(t.C.value == kDeBruijnC1At2);
  CHECK(t.C.err == kDeBruijnC1At2Err);
  CHECK(t.C_status == ConstantStatus::reference);
  const auto w = devore_constants(0.5, RMode::infinity);
  CHECK(w.c.value == doctest::Approx(std::sqrt(std::numbers::pi * std::numbers::pi / 6)).epsilon(1e-13));
  CHECK(w.C.value == doctest::Approx(2.0).epsilon(1e-15));
  const auto t4 = devore_constants(1.5, RMode::tau);
  CHECK(t4.c.value == doctest::Approx(std::numbers::pi * std::numbers::pi / 8).epsilon(1e-14));
  CHECK(std::fabs(t4.c.value - 1.2337) <= 1e-4);
  CHECK(t4.C.value == doctest::Approx(std::pow(C1_best(Exponent::finite(4.0)).value, 2.0)).epsilon(1e-15));
  CHECK(t4.C_status == ConstantStatus::exact);
  CHECK_THROWS_AS(devore_constants(0.0, RMode::tau), DomainError);
}

TEST_CASE("equivalence holds on random coefficient vectors") {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto v = gaussian_vector(rng, 1 + static_cast<std::size_t>(i));
    for (double alpha : {0.25, 0.5, 1.0, 1.5}) {
      for (RMode mode : {RMode::tau, RMode::infinity}) {
        const auto r = equivalence_check(CoeffVector(v), alpha, mode);
        CHECK(r.low_ok);
        CHECK(r.high_ok);
      }
    }
  }
  CHECK_THROWS_AS(equivalence_check(CoeffVector({0.0, 0.0}), 0.5, RMode::tau), DomainError);
}

TEST_CASE("tau-power of the approximation norm is gamma of the tau-powers") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const double alpha = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
    const ApproxParams p(alpha, 1.0 / (alpha + 0.5));
    const auto v = gaussian_vector(rng, 1 + static_cast<std::size_t>(i) * 2);
    const double lhs = std::pow(approx_space_norm(CoeffVector(v), p), p.tau());
    std::vector<double> a(v.size());
    std::transform(v.begin(), v.end(), a.begin(), [&](double x) { return std::pow(std::fabs(x), p.tau()); });
    std::sort(a.begin(), a.end(), std::greater<>());
    const double rhs = static_cast<double>(oracle::gamma_brute(a, 2 * alpha + 1));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("approximation errors ignore order and sign") {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    auto v = gaussian_vector(rng, 1 + static_cast<std::size_t>(i));
    const auto e = approximation_errors(CoeffVector(v));
    std::shuffle(v.begin(), v.end(), rng);
    for (double& x : v) x = -x;
    CHECK(approximation_errors(CoeffVector(v)) == e);
    CHECK(std::is_sorted(e.rbegin(), e.rend()));
  }
}

TEST_CASE("samplers") {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_monotone_sequence(rng, 50);
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 50);
    const auto s = sample_monotone_simplex(rng, 7);
    CHECK(s.size() == 7);
    CHECK(ell1(s).value == doctest::Approx(1.0).epsilon(1e-14));
    const auto f = random_step_function(rng, 4);
    CHECK(f.steps() >= 1);
    CHECK(f.steps() <= 4);
  }
  Rng a(77);
  Rng b(77);
  CHECK(random_monotone_sequence(a, 30).entries()[0] == random_monotone_sequence(b, 30).entries()[0]);
}
