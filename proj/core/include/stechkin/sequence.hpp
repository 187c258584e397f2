#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stechkin/exponent.hpp"

namespace stechkin {

/// Finite nonincreasing sequence a_1 >= ... >= a_N >= 0 with N >= 1.
/// Indices are 0-based in code; entry i is a_{i+1}.
class MonotoneSequence {
 public:
  // Throws DomainError if empty, non-finite, negative, or increasing anywhere.
  explicit MonotoneSequence(std::vector<double> entries);

  std::span<const double> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  MonotoneSequence scaled(double t) const;

 private:
  std::vector<double> entries_;
};

/// Absolute values sorted nonincreasingly. Throws DomainError on an empty or
/// non-finite input.
MonotoneSequence rearrange(std::span<const double> xs);

/// values()[i] = sum_{k >= i} a_k^q (0-based), with values()[N] = 0. For
/// q = ∞ the entries are the suffix suprema, i.e. values()[i] = a_i.
class SuffixPowerTable {
 public:
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const Exponent& exponent() const { return q_; }

 private:
  friend SuffixPowerTable suffix_power_table(const MonotoneSequence&, Exponent);
  SuffixPowerTable(std::vector<double> v, Exponent q) : values_(std::move(v)), q_(q) {}

  std::vector<double> values_;
  Exponent q_;
};

// One backward compensated pass. q = 1 is admitted. Throws OverflowError if
// some a_k^q is not representable.
SuffixPowerTable suffix_power_table(const MonotoneSequence& a, Exponent q);

}  // namespace stechkin
