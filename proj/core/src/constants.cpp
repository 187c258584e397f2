#include "stechkin/constants.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "stechkin/error.hpp"
#include "stechkin/roots.hpp"

namespace stechkin {

namespace {

using std::numbers::pi;

struct KindInfo {
  ConstantKind kind;
  std::string_view name;
  std::string_view formula;
};

constexpr KindInfo kKindInfo[] = {
    {ConstantKind::c1, "c1", "pi / (q sin(pi/q))"},
    {ConstantKind::C1_best, "C1_best",
     "(e ln2/sqrt2)^{1-1/q} on [1, (2+ln2)/(2-ln2)], 1.1064957714 at q=2 (de Bruijn), "
     "2(2q'-1)^{-1/q'} below q0, (q-1)^{1/q} from q0 (Gao)"},
    {ConstantKind::c1_weak, "c1_weak", "zeta(q)^{1/q}"},
    {ConstantKind::C1_weak, "C1_weak", "(1/q)^{-1/q} (1-1/q)^{-(1-1/q)}"},
    {ConstantKind::c1_cont, "c1_cont", "pi / (q sin(pi/q)) = B(1-1/q, 1+1/q)"},
    {ConstantKind::C1_cont, "C1_cont", "(q-1)^{1/q}"},
    {ConstantKind::c1_weak_cont, "c1_weak_cont", "(q-1)^{-1/q}"},
    {ConstantKind::C1_weak_cont, "C1_weak_cont", "(1/q)^{-1/q} (1-1/q)^{-(1-1/q)}"},
    {ConstantKind::copson, "copson", "q^{1/q} (Copson)"},
    {ConstantKind::levin_stechkin, "levin_stechkin",
     "2^{1/q-2}(3-1/q) q (2-1/q)^{1/q-1} for q<5/3; 2(2q'-1)^{-1/q'} for 5/3<=q<3; "
     "(q-1)^{1/q} for q>=3 (Levin-Stechkin)"},
    {ConstantKind::stechkin_choice, "stechkin_choice", "2 (2q'-1)^{-1/q'}, b_k = k(k+1)"},
    {ConstantKind::improved, "improved",
     "(e ln2 / sqrt2)^{1/q'}, b_k = (k(k+1))^p with optimal p"},
    {ConstantKind::gao_exact, "gao_exact", "(q-1)^{1/q} for q >= q0 (Gao)"},
};

const KindInfo& info(ConstantKind kind) {
  for (const auto& k : kKindInfo) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown constant kind");
}

[[noreturn]] void reject(std::string_view what, const Exponent& q) {
  std::ostringstream os;
  os << what << " (q = " << q.to_string() << ")";
  throw DomainError(os.str());
}

void require_finite(std::string_view name, const Exponent& q) {
  if (!q.is_finite()) reject(std::string(name) + " requires 1 < q < inf", q);
}

// 2 (2q'-1)^{-1/q'}
double stechkin_choice_raw(const Exponent& q) {
  const double qc = q.conjugate_value();
  return 2.0 * std::pow(2.0 * qc - 1.0, -1.0 / qc);
}

double levin_branch1_raw(double q) {
  const double r = 1.0 / q;
  return std::pow(2.0, r - 2.0) * (3.0 - r) * q * std::pow(2.0 - r, r - 1.0);
}

double copson_raw(double q) { return std::pow(q, 1.0 / q); }

// (q-1)^{1/q}
double hlp_raw(double q) { return std::pow(q - 1.0, 1.0 / q); }

constexpr double kClosedFormUlps = 16;

}  // namespace

std::string_view to_string(ConstantKind kind) { return info(kind).name; }

std::optional<ConstantKind> parse_constant_kind(std::string_view name) {
  for (const auto& k : kKindInfo) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::string_view formula(ConstantKind kind) { return info(kind).formula; }

std::string_view to_string(ConstantStatus status) {
  switch (status) {
    case ConstantStatus::exact:
      return "exact";
    case ConstantStatus::upper_bound:
      return "upper bound";
    case ConstantStatus::reference:
      return "reference value";
  }
  return "?";
}

double improved_limit() {
  static const double limit = (2.0 + std::numbers::ln2) / (2.0 - std::numbers::ln2);
  return limit;
}

CertifiedValue c1(Exponent q) {
  if (q.is_infinite()) return CertifiedValue::exact(1.0);
  require_finite("c1", q);
  const double x = pi / q.value();
  const double v = x / std::sin(x);
  // Relative condition number of x/sin(x) is |1 - x cot x|.
  const double cond = std::fabs(1.0 - x * std::cos(x) / std::sin(x));
  return CertifiedValue::rounded(v, 6 + 2 * cond);
}

CertifiedValue copson(Exponent q) {
  require_finite("copson", q);
  return CertifiedValue::rounded(copson_raw(q.value()), kClosedFormUlps);
}

CertifiedValue stechkin_choice(Exponent q) {
  require_finite("stechkin_choice", q);
  return CertifiedValue::rounded(stechkin_choice_raw(q), kClosedFormUlps);
}

CertifiedValue levin_stechkin_branch1(Exponent q) {
  require_finite("levin_stechkin", q);
  return CertifiedValue::rounded(levin_branch1_raw(q.value()), kClosedFormUlps);
}

CertifiedValue levin_stechkin(Exponent q) {
  require_finite("levin_stechkin", q);
  const double v = q.value();
  if (v < 5.0 / 3.0) return levin_stechkin_branch1(q);
  if (v < 3.0) return stechkin_choice(q);
  return CertifiedValue::rounded(hlp_raw(v), kClosedFormUlps);
}

CertifiedValue improved(Exponent q) {
  require_finite("improved", q);
  if (q.value() > improved_limit()) {
    reject("improved bound requires q <= (2+ln2)/(2-ln2)", q);
  }
  const double base = std::numbers::e * std::numbers::ln2 / std::numbers::sqrt2;
  return CertifiedValue::rounded(std::pow(base, 1.0 / q.conjugate_value()), kClosedFormUlps);
}

CertifiedValue gao_exact(Exponent q) {
  if (q.is_infinite()) return CertifiedValue::exact(1.0);
  require_finite("gao_exact", q);
  if (q.value() < gao_q0().hi()) reject("Gao's formula requires q >= q0 ~ 2.8855", q);
  return CertifiedValue::rounded(hlp_raw(q.value()), kClosedFormUlps);
}

ConstantStatus C1_best_status(Exponent q) {
  if (q.is_one() || q.is_infinite()) return ConstantStatus::exact;
  const double v = q.value();
  if (v == 2.0) return ConstantStatus::reference;
  if (v < gao_q0().hi()) return ConstantStatus::upper_bound;
  return ConstantStatus::exact;
}

CertifiedValue C1_best(Exponent q) {
  if (q.is_one() || q.is_infinite()) return CertifiedValue::exact(1.0);
  const double v = q.value();
  if (v == 2.0) return {kDeBruijnC1At2, kDeBruijnC1At2Err};
  if (v <= improved_limit()) return improved(q);
  if (v < gao_q0().hi()) return stechkin_choice(q);
  return CertifiedValue::rounded(hlp_raw(v), kClosedFormUlps);
}

CertifiedValue zeta(double q, double tol) {
  if (std::isnan(q) || q < 1.0 + 1e-3) {
    std::ostringstream os;
    os << "zeta: q too close to 1 (q = " << q << ", need q >= 1.001)";
    throw DomainError(os.str());
  }
  if (!(tol > 0.0)) throw DomainError("zeta: tolerance must be positive");
  if (std::isinf(q)) return CertifiedValue::exact(1.0);

  const double u = kUnitRoundoff;
  // For convex x^{-q} the tail sum_{k>M} k^{-q} lies between the trapezoid
  // bound  int_{M+1}^inf + (M+1)^{-q}/2  and the midpoint bound
  // int_{M+1/2}^inf. Their gap is int_{M+1/2}^{M+1} x^{-q} dx - (M+1)^{-q}/2.
  auto gap = [q](double m) {
    const double a = m + 0.5;
    const double b = m + 1.0;
    const double slab = std::pow(b, 1.0 - q) * std::expm1((q - 1.0) * std::log1p(0.5 / a)) / (q - 1.0);
    return slab - 0.5 * std::pow(b, -q);
  };

  constexpr double kMaxTerms = 0x1p32;
  double m = 8.0;
  while (gap(m) / 2 > tol / 2) {
    m *= 2.0;
    if (m > kMaxTerms) throw ConvergenceError("zeta: tail bracket did not reach tolerance", gap(m / 2) / 2);
  }

  CompensatedSum partial;
  const auto terms = static_cast<std::uint64_t>(m);
  for (std::uint64_t k = terms; k >= 1; --k) {
    partial.add(std::pow(static_cast<double>(k), -q));
  }
  const double b = m + 1.0;
  const double tail_lo = std::pow(b, 1.0 - q) / (q - 1.0) + 0.5 * std::pow(b, -q);
  const double tail_hi = std::pow(m + 0.5, 1.0 - q) / (q - 1.0);
  const double width = std::fmax(gap(m), tail_hi - tail_lo);

  const double s = partial.value();
  const double value = s + (tail_lo + tail_hi) / 2;
  // pow is within 1 ulp per term; the tails carry a handful of roundings.
  const double rounding = partial.error_bound(terms) + 2 * u * s + 8 * u * tail_hi + 2 * u * value;
  const double err = outward(width / 2 + rounding);
  if (err > tol) {
    std::ostringstream os;
    os << "zeta: rounding floor " << err << " exceeds tolerance " << tol;
    throw ConvergenceError(os.str(), err);
  }
  return {value, err};
}

CertifiedValue c1_weak(Exponent q, double rel_tol) {
  if (q.is_infinite()) return CertifiedValue::exact(1.0);
  if (!q.is_finite() || q.value() < 1.0 + 1e-3) {
    reject("c1_weak: q too close to 1 (need q >= 1.001)", q);
  }
  const double v = q.value();
  // zeta(q) < 1/(q-1) + 1, so this makes the tolerance relative.
  const CertifiedValue z = zeta(v, rel_tol * (1.0 / (v - 1.0) + 1.0));
  return certified_pow(z, 1.0 / v);
}

CertifiedValue C1_weak(Exponent q) {
  if (q.is_one() || q.is_infinite()) return CertifiedValue::exact(1.0);
  // Symmetric in (1/q, 1/q'); swapping the pair gives a bitwise-equal result.
  const double x = 1.0 / q.value();
  const double y = 1.0 / q.conjugate_value();
  const double v = std::exp(-(x * std::log(x) + y * std::log(y)));
  return CertifiedValue::rounded(v, kClosedFormUlps);
}

ContinuousConstants continuous_constants(Exponent q) {
  if (q.is_infinite()) {
    const auto one = CertifiedValue::exact(1.0);
    return {one, one, one, one};
  }
  require_finite("continuous constants", q);
  const double v = q.value();
  return {
      c1(q),
      CertifiedValue::rounded(hlp_raw(v), kClosedFormUlps),
      CertifiedValue::rounded(std::pow(v - 1.0, -1.0 / v), kClosedFormUlps),
      C1_weak(q),
  };
}

double gao_function(double q) {
  const double e = q / (q - 1.0);
  return std::pow(2.0, 1.0 / (q - 1.0)) * (std::pow(q - 1.0, e) - (q - 1.0)) -
         std::pow((5.0 - q) / 2.0, e);
}

CertifiedValue gao_q0() {
  static const CertifiedValue root = [] {
    const Bracket b = bisect(gao_function, 2.5, 3.0, 1e-8);
    return CertifiedValue{b.midpoint(), outward(b.half_width())};
  }();
  return root;
}

Crossovers crossovers() {
  auto choice = [](double q) { return stechkin_choice_raw(Exponent::finite(q)); };
  auto choice_minus_copson = [&](double q) { return choice(q) - copson_raw(q); };
  auto branch1_minus_choice = [&](double q) { return levin_branch1_raw(q) - choice(q); };
  auto cert = [](const Bracket& b) { return CertifiedValue{b.midpoint(), outward(b.half_width())}; };

  constexpr double tol = 1e-6;
  return {
      cert(bisect(choice_minus_copson, 1.1, 2.0, tol)),
      cert(bisect(choice_minus_copson, 3.0, 6.0, tol)),
      cert(golden_section_minimize(choice, 1.1, 3.0, tol)),
      cert(bisect(branch1_minus_choice, 1.1, 5.0 / 3.0, tol)),
  };
}

CertifiedValue evaluate(ConstantKind kind, Exponent q) {
  switch (kind) {
    case ConstantKind::c1:
      return c1(q);
    case ConstantKind::C1_best:
      return C1_best(q);
    case ConstantKind::c1_weak:
      return c1_weak(q);
    case ConstantKind::C1_weak:
      return C1_weak(q);
    case ConstantKind::c1_cont:
      return continuous_constants(q).c1;
    case ConstantKind::C1_cont:
      return continuous_constants(q).C1;
    case ConstantKind::c1_weak_cont:
      return continuous_constants(q).c1_weak;
    case ConstantKind::C1_weak_cont:
      return continuous_constants(q).C1_weak;
    case ConstantKind::copson:
      return copson(q);
    case ConstantKind::levin_stechkin:
      return levin_stechkin(q);
    case ConstantKind::stechkin_choice:
      return stechkin_choice(q);
    case ConstantKind::improved:
      return improved(q);
    case ConstantKind::gao_exact:
      return gao_exact(q);
  }
  throw std::logic_error("unknown constant kind");
}

}  // namespace stechkin
