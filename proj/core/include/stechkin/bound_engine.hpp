#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stechkin/certified.hpp"
#include "stechkin/exponent.hpp"

namespace stechkin {

/// Auxiliary sequence b_0 = 0 < b_1 < b_2 < ... for the upper-bound
/// machinery. Either the family b_k = (k(k+1))^p or a caller-supplied
/// generator with its own tail bound.
class AuxSequence {
 public:
  using Generator = std::function<double(std::uint64_t)>;
  // tail(M, q') must bound sum_{k > M} b_k^{-q'} from above.
  using TailBound = std::function<double(std::uint64_t, double)>;

  // Throws DomainError unless p > 0 and finite.
  static AuxSequence power_family(double p);

  // Spot-checks b(0) = 0 and strict increase on n <= 10^4.
  AuxSequence(Generator b, TailBound tail);

  double operator()(std::uint64_t n) const { return b_(n); }
  std::optional<double> p() const { return p_; }
  double tail_bound(std::uint64_t m, double qc) const { return tail_(m, qc); }

 private:
  AuxSequence(Generator b, TailBound tail, double p);

  Generator b_;
  TailBound tail_;
  std::optional<double> p_;
};

struct BoundReport {
  Exponent q;
  std::optional<double> p;
  std::size_t n_terms = 0;
  std::uint64_t m = 0;
  // A_n^{1/q'} for n = 1..n_terms, each enclosing the untruncated value.
  std::vector<CertifiedValue> terms{};
  // Envelope bound covering every n >= n_terms; present for the power
  // family with p <= 1.
  std::optional<CertifiedValue> tail_majorant{};
  CertifiedValue supremum{};
  // 1-based index of the largest term, and whether the tail majorant
  // exceeded every term.
  std::size_t argmax = 0;
  bool supremum_from_tail = false;
  // Without a tail majorant the supremum covers n <= n_terms only.
  bool complete = false;
  // Bound on sum_{k > M} b_k^{-q'}.
  double inner_tail_bound = 0.0;
  // Largest effect of the inner truncation on any term, in A_n^{1/q'} units.
  double truncation_error = 0.0;
  // Same, on the A_n scale.
  double truncation_error_raw = 0.0;

  // Rigorous upper bound on the supremum over all n (when complete).
  double certified_upper() const { return supremum.hi(); }
};

/// C_b(q) = sup_n (n^{q'/q} (b_n - b_{n-1})^{q'} sum_{k>=n} b_k^{-q'})^{1/q'}
/// with the inner series summed to M and bounded beyond.
/// Requires 1 < q < ∞, n_terms >= 1, M >= n_terms. For the power family,
/// p <= 1/(2q') diverges and is rejected.
BoundReport c_b(Exponent q, const AuxSequence& b, std::size_t n_terms, std::uint64_t m);

/// A_n for b_k = (k(k+1))^p, n = 1..n_max. Requires 1/(2q') < p <= 1.
std::vector<CertifiedValue> a_n_terms(Exponent q, double p, std::size_t n_max, std::uint64_t m);

/// A'_n = ((n+1)^p - (n-1)^p) / n^{p-1}, evaluated without cancellation.
double a_prime(double p, std::uint64_t n);

/// Upper envelope A'_n^{q'} / (2q'p - 1) of A_n.
CertifiedValue a_n_envelope(Exponent q, double p, std::uint64_t n);

struct OptimalP {
  double p_star = 0.0;
  CertifiedValue bound;
};

/// Minimizer of 2^p / (2q'p - 1)^{1/q'} over p. Requires
/// 1 < q <= (2 + ln 2)/(2 - ln 2), where p* <= 1.
OptimalP optimize_p(Exponent q);

}  // namespace stechkin
