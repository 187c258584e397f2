#pragma once

#include <span>
#include <vector>

#include "stechkin/certified.hpp"
#include "stechkin/constants.hpp"

namespace stechkin {

/// Coordinates <f, e_k> in an orthonormal basis, zero-padded to infinity.
class CoeffVector {
 public:
  // Throws DomainError on non-finite entries.
  explicit CoeffVector(std::vector<double> coefficients);

  std::span<const double> coefficients() const { return c_; }
  std::size_t size() const { return c_.size(); }
  // f*_1 >= f*_2 >= ... : moduli sorted nonincreasingly.
  std::vector<double> rearranged() const;

 private:
  std::vector<double> c_;
};

/// alpha > 0 and r in (0, ∞]; tau = 1/(alpha + 1/2).
class ApproxParams {
 public:
  ApproxParams(double alpha, double r);

  double alpha() const { return alpha_; }
  double r() const { return r_; }
  double tau() const { return 1.0 / (alpha_ + 0.5); }

 private:
  double alpha_;
  double r_;
};

/// E_n = (sum_{k>=n} f*_k^2)^{1/2} for n = 1..len+1, so E_1 = ||f|| and
/// E_{len+1} = 0.
std::vector<double> approximation_errors(const CoeffVector& c);

/// (sum_n (n^alpha E_n)^r / n)^{1/r}, or sup_n n^alpha E_n for r = ∞.
double approx_space_norm(const CoeffVector& c, const ApproxParams& p);

/// (sum_n (n^{1/p} f*_n)^r / n)^{1/r}, or sup_n n^{1/p} f*_n for r = ∞.
/// p = ∞ drops the weight.
double lorentz_norm(const CoeffVector& c, double p, double r);

enum class RMode { tau, infinity };

struct DevoreConstants {
  CertifiedValue c;
  CertifiedValue C;
  // exact unless C comes from a best-known bound or a reference value.
  ConstantStatus C_status = ConstantStatus::exact;
};

/// Catalog constants at q = 2 alpha + 1 raised to alpha + 1/2: strong ones
/// for r = tau, weak ones for r = ∞.
DevoreConstants devore_constants(double alpha, RMode mode);

struct EquivalenceCheck {
  double approx_norm = 0.0;
  double lorentz = 0.0;
  DevoreConstants constants;
  bool low_ok = false;   // approx_norm / c <= lorentz
  bool high_ok = false;  // lorentz <= C approx_norm
};

/// (1/c) ||f||_{A} <= ||f*||_{l_{tau,r}} <= C ||f||_{A}. Requires a
/// nonzero vector.
EquivalenceCheck equivalence_check(const CoeffVector& c, double alpha, RMode mode);

}  // namespace stechkin
