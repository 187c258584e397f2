#pragma once

#include <cstddef>
#include <optional>

#include "stechkin/exponent.hpp"
#include "stechkin/sequence.hpp"

namespace stechkin {

struct FunctionalValue {
  double value = 0.0;
  // 1-based index of the smallest maximizer; empty for sum-type functionals.
  std::optional<std::size_t> attained_at;
};

// sum_n a_n
FunctionalValue ell1(const MonotoneSequence& a);

// sum_n ((1/n) sum_{k>=n} a_k^q)^{1/q}; q = ∞ gives ell1(a), q = 1 gives
// sum_n (1/n) sum_{k>=n} a_k.
FunctionalValue gamma(const MonotoneSequence& a, Exponent q);

// max_n n a_n
FunctionalValue weak_ell1(const MonotoneSequence& a);

// max_n n^{1-1/q} (sum_{k>=n} a_k^q)^{1/q}; q = ∞ gives weak_ell1(a).
FunctionalValue weak_gamma(const MonotoneSequence& a, Exponent q);

}  // namespace stechkin
