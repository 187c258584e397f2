#include "stechkin/exponent.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "stechkin/error.hpp"

namespace stechkin {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Exponent Exponent::finite(double q) {
  if (std::isnan(q) || q <= 1.0) {
    std::ostringstream os;
    os << "exponent must satisfy q > 1, got " << q;
    throw DomainError(os.str());
  }
  if (std::isinf(q)) return infinity();
  const double qc = q / (q - 1.0);
  return Exponent(Kind::finite, q, qc);
}

Exponent Exponent::infinity() { return Exponent(Kind::infinite, kInf, 1.0); }

Exponent Exponent::one() { return Exponent(Kind::one, 1.0, kInf); }

Exponent Exponent::closed(double q) {
  if (q == 1.0) return one();
  return finite(q);
}

double Exponent::value() const { return q_; }

double Exponent::conjugate_value() const { return qc_; }

double Exponent::reciprocal() const {
  switch (kind_) {
    case Kind::infinite:
      return 0.0;
    case Kind::one:
      return 1.0;
    case Kind::finite:
      break;
  }
  return 1.0 / q_;
}

std::string Exponent::to_string() const {
  if (is_infinite()) return "inf";
  // Shortest precision that round-trips.
  for (int digits = 15; digits <= 17; ++digits) {
    std::ostringstream os;
    os.precision(digits);
    os << q_;
    if (digits == 17 || std::stod(os.str()) == q_) return os.str();
  }
  return {};
}

Exponent conjugate(Exponent q) {
  switch (q.kind_) {
    case Exponent::Kind::infinite:
      return Exponent::one();
    case Exponent::Kind::one:
      return Exponent::infinity();
    case Exponent::Kind::finite:
      break;
  }
  return Exponent(Exponent::Kind::finite, q.qc_, q.q_);
}

}  // namespace stechkin
