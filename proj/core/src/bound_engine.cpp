#include "stechkin/bound_engine.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "stechkin/error.hpp"

namespace stechkin {

namespace {

constexpr std::uint64_t kMonotoneCheckLimit = 10000;

// (n+1)^p - (n-1)^p without cancellation.
double symmetric_difference(double p, std::uint64_t n) {
  const double up = static_cast<double>(n) + 1.0;
  return -std::pow(up, p) * std::expm1(p * std::log1p(-2.0 / up));
}

void require_finite_q(const Exponent& q) {
  if (!q.is_finite()) throw DomainError("bound engine requires 1 < q < inf");
}

void require_convergent(const Exponent& q, double p) {
  if (!(p * q.conjugate_value() > 0.5)) {
    std::ostringstream os;
    os << "series diverges: p = " << p << " <= 1/(2q') = " << 0.5 / q.conjugate_value();
    throw DomainError(os.str());
  }
}

struct InnerSums {
  std::vector<CertifiedValue> prefix;  // sum_{k=n}^{M} b_k^{-q'} for n = 1..n_terms
  double tail = 0.0;                   // bound on sum_{k>M}
};

// One backward compensated pass over k = M..1, recording the suffix sums
// for the first n_terms indices.
template <typename Term>
InnerSums inner_sums(Term term, std::size_t n_terms, std::uint64_t m) {
  InnerSums out;
  out.prefix.resize(n_terms);
  CompensatedSum s;
  for (std::uint64_t k = m; k >= 1; --k) {
    s.add(term(k));
    if (k <= n_terms) {
      // Each addend is within 1 ulp of b_k^{-q'}.
      const double err = s.error_bound(m - k + 1) + 2 * kUnitRoundoff * s.magnitude();
      out.prefix[k - 1] = {s.value(), outward(err)};
    }
  }
  return out;
}

}  // namespace

AuxSequence::AuxSequence(Generator b, TailBound tail, double p)
    : b_(std::move(b)), tail_(std::move(tail)), p_(p) {}

AuxSequence::AuxSequence(Generator b, TailBound tail) : b_(std::move(b)), tail_(std::move(tail)) {
  if (!b_ || !tail_) throw DomainError("auxiliary sequence needs a generator and a tail bound");
  if (b_(0) != 0.0) throw DomainError("auxiliary sequence must start with b_0 = 0");
  double prev = 0.0;
  for (std::uint64_t n = 1; n <= kMonotoneCheckLimit; ++n) {
    const double v = b_(n);
    if (!(v > prev) || !std::isfinite(v)) {
      std::ostringstream os;
      os << "auxiliary sequence not strictly increasing at n = " << n;
      throw DomainError(os.str());
    }
    prev = v;
  }
}

AuxSequence AuxSequence::power_family(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("power family needs finite p > 0");
  auto b = [p](std::uint64_t k) {
    const double x = static_cast<double>(k);
    return std::pow(x * (x + 1.0), p);
  };
  // sum_{k>M} (k(k+1))^{-lambda} <= sum_{k>M} k^{-2 lambda} <= M^{1-2 lambda}/(2 lambda - 1)
  auto tail = [p](std::uint64_t m, double qc) {
    const double lambda = p * qc;
    return std::pow(static_cast<double>(m), 1.0 - 2.0 * lambda) / (2.0 * lambda - 1.0);
  };
  return AuxSequence(std::move(b), std::move(tail), p);
}

double a_prime(double p, std::uint64_t n) {
  return symmetric_difference(p, n) / std::pow(static_cast<double>(n), p - 1.0);
}

CertifiedValue a_n_envelope(Exponent q, double p, std::uint64_t n) {
  require_finite_q(q);
  require_convergent(q, p);
  const double qc = q.conjugate_value();
  const double v = std::pow(a_prime(p, n), qc) / (2.0 * qc * p - 1.0);
  return CertifiedValue::rounded(v, 24);
}

BoundReport c_b(Exponent q, const AuxSequence& b, std::size_t n_terms, std::uint64_t m) {
  require_finite_q(q);
  if (n_terms < 1) throw DomainError("c_b needs n_terms >= 1");
  if (m < n_terms) throw DomainError("c_b needs M >= n_terms");
  const std::optional<double> p = b.p();
  if (p) require_convergent(q, *p);

  const double qc = q.conjugate_value();
  const double inv_q = q.reciprocal();
  const double inv_qc = 1.0 / qc;
  const double u = kUnitRoundoff;

  InnerSums sums;
  if (p) {
    const double lambda = *p * qc;
    sums = inner_sums(
        [lambda](std::uint64_t k) {
          const double x = static_cast<double>(k);
          return std::pow(x * (x + 1.0), -lambda);
        },
        n_terms, m);
  } else {
    sums = inner_sums([&b, qc](std::uint64_t k) { return std::pow(b(k), -qc); }, n_terms, m);
  }
  const double tail = b.tail_bound(m, qc);
  if (!(tail >= 0.0) || !std::isfinite(tail)) throw DomainError("tail bound must be finite and >= 0");

  BoundReport r{.q = q, .p = p};
  r.n_terms = n_terms;
  r.m = m;
  r.inner_tail_bound = tail;
  r.terms.reserve(n_terms);

  double best_hi = -1.0;
  for (std::size_t i = 0; i < n_terms; ++i) {
    const std::uint64_t n = i + 1;
    const double nd = static_cast<double>(n);
    // Delta b_n and its relative rounding.
    double db = 0.0;
    double db_rel = 0.0;
    if (p) {
      db = std::pow(nd, *p) * symmetric_difference(*p, n);
      db_rel = 12 * u;
    } else {
      const double hi = b(n);
      db = hi - b(n - 1);
      if (!(db > 0.0)) throw DomainError("auxiliary sequence not strictly increasing");
      db_rel = 2 * u * (1.0 + 2.0 * std::fabs(hi) / db);
    }
    const CertifiedValue& s = sums.prefix[i];
    const double k = std::pow(nd, inv_q) * db;
    const double term = k * std::pow(s.value, inv_qc);
    // Concavity of S^{1/q'} turns the inner tail into a term-level bound.
    const double trunc = term * std::expm1(std::log1p(tail / s.value) * inv_qc);
    const double rel = db_rel + 8 * u + (s.err / s.value) * inv_qc;
    const double raw_scale = std::pow(k, qc);
    r.truncation_error = std::fmax(r.truncation_error, outward(trunc));
    r.truncation_error_raw = std::fmax(r.truncation_error_raw, outward(raw_scale * tail * (1 + 8 * u)));
    const CertifiedValue cv{term, outward(trunc + rel * term + 2 * u * trunc)};
    r.terms.push_back(cv);
    if (cv.value > r.supremum.value || i == 0) {
      r.supremum = cv;
      r.argmax = n;
    }
    best_hi = std::fmax(best_hi, cv.hi());
  }

  // The envelope is nonincreasing in n for p <= 1, and dominates A_n when
  // q'p >= 1 (the power-mean step in its derivation needs that).
  if (p && *p <= 1.0 && *p * qc >= 1.0) {
    const CertifiedValue env = a_n_envelope(q, *p, n_terms);
    r.tail_majorant = certified_pow(env, inv_qc);
    r.complete = true;
    if (r.tail_majorant->value > r.supremum.value) {
      r.supremum = *r.tail_majorant;
      r.supremum_from_tail = true;
    }
  }
  // An entry with a smaller value but wider error could still be larger.
  if (best_hi > r.supremum.hi()) r.supremum.err = outward(best_hi - r.supremum.value);
  return r;
}

std::vector<CertifiedValue> a_n_terms(Exponent q, double p, std::size_t n_max, std::uint64_t m) {
  require_finite_q(q);
  require_convergent(q, p);
  if (p > 1.0) throw DomainError("a_n_terms requires p <= 1");
  if (n_max < 1 || m < n_max) throw DomainError("a_n_terms requires 1 <= n_max <= M");
  const double qc = q.conjugate_value();
  const BoundReport r = c_b(q, AuxSequence::power_family(p), n_max, m);
  std::vector<CertifiedValue> out;
  out.reserve(n_max);
  for (const CertifiedValue& t : r.terms) out.push_back(certified_pow(t, qc));
  return out;
}

OptimalP optimize_p(Exponent q) {
  require_finite_q(q);
  const double limit = (2.0 + std::numbers::ln2) / (2.0 - std::numbers::ln2);
  if (q.value() > limit) {
    throw DomainError("optimal p exceeds 1 for q > (2+ln2)/(2-ln2)");
  }
  const double lambda = (2.0 + std::numbers::ln2) / (2.0 * std::numbers::ln2);
  const double qc = q.conjugate_value();
  const double p = q.value() == limit ? 1.0 : lambda / qc;
  const double bound = std::pow(2.0, p) / std::pow(2.0 * qc * p - 1.0, 1.0 / qc);
  return {p, CertifiedValue::rounded(bound, 24)};
}

}  // namespace stechkin
