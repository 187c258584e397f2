#pragma once

#include <cstddef>
#include <cstdint>

#include "stechkin/exponent.hpp"

namespace stechkin {

/// gamma of the flat vertex (1/k0, ..., 1/k0):
/// (1/k0) sum_{n=1}^{k0} n^{-1/q} (k0 - n + 1)^{1/q}.
double vertex_sum(Exponent q, std::uint64_t k0);

struct IntegralBrackets {
  double lower = 0.0;  // (1/k0) int_1^{k0+1} g
  double upper = 0.0;  // (1/k0) (g(1) + int_1^{k0} g)
};

/// Closed-form integral bounds on vertex_sum(2, k0), with
/// g(t) = sqrt((k0 + 1 - t)/t).
IntegralBrackets integral_brackets(std::uint64_t k0);

struct WeakExtremal {
  double value = 0.0;
  std::size_t argmax = 0;  // 1-based
};

/// weak_gamma of the harmonic sequence (1/n)_{n <= K}.
WeakExtremal weak_lower_extremal(Exponent q, std::size_t k);

/// weak_gamma of the flat sequence (1/N, ..., 1/N). The maximizer lies at
/// floor or ceil of (N+1)(1-1/q); a violation throws std::logic_error.
/// Exact ties break to the lower index.
WeakExtremal weak_upper_extremal(Exponent q, std::size_t n);

struct VertexSearch {
  double best_ratio = 0.0;
  std::uint64_t best_k0 = 0;
};

/// max over k0 in 1..N of vertex_sum(q, k0). Large N computes all vertex
/// sums at once by FFT convolution, then re-evaluates the near-maximal
/// candidates directly. Requires 1 <= N <= 10^6.
VertexSearch simplex_vertex_search(Exponent q, std::uint64_t n);

}  // namespace stechkin
