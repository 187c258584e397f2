#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stechkin/bound_engine.hpp"
#include "stechkin/constants.hpp"
#include "stechkin/error.hpp"
#include "stechkin/functionals.hpp"
#include "stechkin/sampling.hpp"

using namespace stechkin;

namespace {

const Exponent two = Exponent::finite(2.0);

}  // namespace

TEST_CASE("auxiliary sequence validation") {
  CHECK_THROWS_AS(AuxSequence::power_family(0.0), DomainError);
  CHECK_THROWS_AS(AuxSequence([](std::uint64_t n) { return 1.0 + n; }, [](std::uint64_t, double) { return 0.0; }),
                  DomainError);
  CHECK_THROWS_AS(AuxSequence([](std::uint64_t n) { return n > 5000 ? 1.0 : static_cast<double>(n); },
                              [](std::uint64_t, double) { return 0.0; }),
                  DomainError);
  CHECK(AuxSequence::power_family(0.88).p() == 0.88);
  CHECK(AuxSequence::power_family(1)(3) == 12.0);
}

TEST_CASE("p = 1 reproduces 2/sqrt(3) at q = 2") {
  const BoundReport r = c_b(two, AuxSequence::power_family(1.0), 50, 100000);
  CHECK(r.complete);
  CHECK(r.certified_upper() <= 2 / std::sqrt(3.0) + 1e-6);
  CHECK(r.supremum.value == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("p = 1 supremum matches the closed form for several q") {
  for (double q : {1.5, 2.0, 3.0}) {
    const Exponent e = Exponent::finite(q);
    const BoundReport r = c_b(e, AuxSequence::power_family(1.0), 100, 200000);
    CHECK(std::fabs(r.supremum.value - stechkin_choice(e).value) <= 1e-6);
  }
}

TEST_CASE("p = 0.88 at q = 2 stays below 1.1086983") {
  const BoundReport r = c_b(two, AuxSequence::power_family(0.88), 100, 200000);
  CHECK(r.complete);
  CHECK(r.supremum_from_tail);
  CHECK(r.certified_upper() <= 1.1086983);
  CHECK(r.supremum.value >= 1.108);
  CHECK(r.truncation_error <= 5e-9);
  CHECK(r.argmax == 100);
  // The two-argument max with the envelope at N dominates every computed term.
  for (const auto& t : r.terms) CHECK(t.hi() <= r.supremum.hi());
  // Raw remainder scale of the (N/M)^{4p-1} estimate.
  const double estimate = std::pow(100.0 / 200000.0, 4 * 0.88 - 1);
  CHECK(estimate == doctest::Approx(4.8018e-9).epsilon(1e-4));
  CHECK(r.truncation_error_raw <= 2 * estimate);
  CHECK(r.truncation_error <= estimate);
}

TEST_CASE("terms agree with a long double forward oracle") {
  const BoundReport r = c_b(two, AuxSequence::power_family(0.88), 20, 200000);
  for (std::size_t n = 1; n <= 20; ++n) {
    const double ref = static_cast<double>(std::sqrt(oracle::a_n_forward(2.0, 0.88, n, 200000)));
    CHECK(std::fabs(r.terms[n - 1].value - ref) <= 1e-13 * ref);
  }
}

TEST_CASE("A_1 for p = 1, q = 2 matches the closed form") {
  const auto a = a_n_terms(two, 1.0, 5, 1000000);
  const double ref = 4 * (std::numbers::pi * std::numbers::pi / 3 - 3);
  CHECK(a[0].contains(ref));
  CHECK(a[0].value == doctest::Approx(1.1594725347).epsilon(1e-9));
}

TEST_CASE("envelope dominates A_n") {
  for (double p : {0.6, 0.88, 1.0}) {
    const auto a = a_n_terms(two, p, 100, 200000);
    for (std::size_t n = 1; n <= 100; ++n) {
      CHECK(a[n - 1].lo() <= a_n_envelope(two, p, n).hi());
    }
  }
}

TEST_CASE("A'_n is nonincreasing") {
  for (double p : {0.6, 0.88, 1.0}) {
    CHECK(a_prime(p, 1) == doctest::Approx(std::pow(2.0, p)).epsilon(1e-15));
    CHECK(a_prime(p, 1) >= a_prime(p, 2));
    double prev = a_prime(p, 1);
    for (std::uint64_t n = 2; n <= 10000; ++n) {
      const double cur = a_prime(p, n);
      // p = 1 is the constant 2, so allow a few ulps of rounding.
      CHECK(cur <= prev * (1 + 8 * kUnitRoundoff));
      prev = cur;
    }
  }
  CHECK(a_prime(1.0, 777) == doctest::Approx(2.0).epsilon(1e-14));
  // Cancellation-free against long double for large n.
  const long double n = 1e6L;
  const long double ref = (std::pow(n + 1, 0.88L) - std::pow(n - 1, 0.88L)) / std::pow(n, -0.12L);
  CHECK(a_prime(0.88, 1000000) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
}

TEST_CASE("truncation certificate survives M' = 4M") {
  for (double p : {0.7, 0.88, 1.0}) {
    const BoundReport r = c_b(two, AuxSequence::power_family(p), 60, 50000);
    const BoundReport r4 = c_b(two, AuxSequence::power_family(p), 60, 200000);
    for (std::size_t i = 0; i < 60; ++i) {
      CHECK(std::fabs(r4.terms[i].value - r.terms[i].value) < r.truncation_error);
      CHECK(r.terms[i].contains(r4.terms[i].value));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(c_b(two, AuxSequence::power_family(0.2), 10, 100), DomainError);
  CHECK_THROWS_AS(c_b(two, AuxSequence::power_family(0.25), 10, 100), DomainError);
  CHECK_THROWS_AS(c_b(two, AuxSequence::power_family(0.88), 10, 5), DomainError);
  CHECK_THROWS_AS(c_b(two, AuxSequence::power_family(0.88), 0, 5), DomainError);
  CHECK_THROWS_AS(c_b(Exponent::infinity(), AuxSequence::power_family(0.88), 10, 100), DomainError);
  CHECK_THROWS_AS(a_n_terms(two, 1.2, 10, 100), DomainError);
}

TEST_CASE("no envelope beyond its hypotheses") {
  // q'p < 1: power-mean step fails, so no tail majorant.
  const BoundReport r = c_b(two, AuxSequence::power_family(0.4), 20, 10000);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.tail_majorant.has_value());
  const BoundReport big = c_b(two, AuxSequence::power_family(1.3), 20, 10000);
  CHECK_FALSE(big.complete);
}

TEST_CASE("generic auxiliary sequence matches the power family") {
  const AuxSequence generic([](std::uint64_t k) { return static_cast<double>(k) * (k + 1.0); },
                            [](std::uint64_t m, double qc) { return std::pow(static_cast<double>(m), 1 - 2 * qc) / (2 * qc - 1); });
  const BoundReport g = c_b(two, generic, 30, 100000);
  const BoundReport p = c_b(two, AuxSequence::power_family(1.0), 30, 100000);
  CHECK_FALSE(g.complete);
  for (std::size_t i = 0; i < 30; ++i) {
    CHECK(g.terms[i].value == doctest::Approx(p.terms[i].value).epsilon(1e-13));
    CHECK(g.terms[i].contains(p.terms[i].value));
  }
}

TEST_CASE("optimal p") {
  const auto o = optimize_p(two);
  CHECK(o.p_star == doctest::Approx((2 + std::numbers::ln2) / (2 * std::log(4.0))).epsilon(1e-15));
  CHECK(o.p_star == doctest::Approx(0.9712).epsilon(1e-4));
  CHECK(o.bound.value == doctest::Approx(1.1542).epsilon(1e-4));
  CHECK(optimize_p(Exponent::finite(improved_limit())).p_star == 1.0);
  for (double q : {1.2, 1.5, 2.0}) {
    const Exponent e = Exponent::finite(q);
    CHECK(std::fabs(optimize_p(e).bound.value - improved(e).value) <= 1e-12);
  }
  CHECK_THROWS_AS(optimize_p(Exponent::finite(2.2)), DomainError);
}

TEST_CASE("bound holds on random sequences") {
  Rng rng(21);
  for (double q : {1.5, 2.0, 2.5}) {
    for (double p : {0.88, 1.0}) {
      const Exponent e = Exponent::finite(q);
      const double bound = c_b(e, AuxSequence::power_family(p), 100, 200000).certified_upper();
      for (int i = 0; i < 500; ++i) {
        const auto a = random_monotone_sequence(rng, 200);
        CHECK(ell1(a).value <= bound * gamma(a, e).value * (1 + 1e-12));
      }
    }
  }
}
