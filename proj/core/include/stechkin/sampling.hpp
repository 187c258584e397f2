#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "stechkin/continuous.hpp"
#include "stechkin/sequence.hpp"

namespace stechkin {

using Rng = std::mt19937_64;

/// Random nonincreasing sequence of length in [1, max_len]. Mixes several
/// shapes (uniform order statistics, power laws, geometric decay, flat
/// blocks, zero tails) so that suites see both spread and near-extremal
/// inputs.
MonotoneSequence random_monotone_sequence(Rng& rng, std::size_t max_len);

/// Random staircase with 1..max_steps steps.
StepFunction random_step_function(Rng& rng, std::size_t max_steps);

/// Uniform point of the monotone simplex on N coordinates: uniform
/// spacings w on the standard simplex mapped to a_n = sum_{k>=n} w_k / k.
MonotoneSequence sample_monotone_simplex(Rng& rng, std::size_t n);

}  // namespace stechkin
