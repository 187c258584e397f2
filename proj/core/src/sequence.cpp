#include "stechkin/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "stechkin/certified.hpp"
#include "stechkin/error.hpp"

namespace stechkin {

MonotoneSequence::MonotoneSequence(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("monotone sequence must have at least one entry");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double x = entries_[i];
    if (!std::isfinite(x) || x < 0.0) {
      std::ostringstream os;
      os << "entry " << i + 1 << " is not a finite nonnegative number: " << x;
      throw DomainError(os.str());
    }
    if (i > 0 && x > entries_[i - 1]) {
      std::ostringstream os;
      os << "sequence increases at index " << i + 1 << " (" << entries_[i - 1] << " < " << x << ")";
      throw DomainError(os.str());
    }
  }
}

MonotoneSequence MonotoneSequence::scaled(double t) const {
  std::vector<double> out(entries_);
  for (double& x : out) x *= t;
  return MonotoneSequence(std::move(out));
}

MonotoneSequence rearrange(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("cannot rearrange an empty list");
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!std::isfinite(x)) throw DomainError("rearrange: non-finite entry");
    out.push_back(std::fabs(x));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return MonotoneSequence(std::move(out));
}

SuffixPowerTable suffix_power_table(const MonotoneSequence& a, Exponent q) {
  const std::size_t n = a.size();
  std::vector<double> values(n + 1, 0.0);
  if (q.is_infinite()) {
    std::copy(a.entries().begin(), a.entries().end(), values.begin());
    return SuffixPowerTable(std::move(values), q);
  }
  const double e = q.value();
  CompensatedSum acc;
  for (std::size_t i = n; i-- > 0;) {
    const double term = q.is_one() ? a[i] : std::pow(a[i], e);
    if (!std::isfinite(term)) {
      std::ostringstream os;
      os << "a_" << i + 1 << "^q overflows for a = " << a[i] << ", q = " << e;
      throw OverflowError(os.str());
    }
    acc.add(term);
    values[i] = acc.value();
    if (!std::isfinite(values[i])) throw OverflowError("suffix power sum overflows");
  }
  return SuffixPowerTable(std::move(values), q);
}

}  // namespace stechkin
