#pragma once

#include <string>

namespace stechkin {

/// Exponent q in (1, ∞]. The infinite exponent is a distinct state, not a
/// large float. The closure point q = 1 can be constructed explicitly via
/// one(); operations that do not admit it reject it.
///
/// The Hölder conjugate is computed once at construction and carried along,
/// so conjugate() is an exact involution.
class Exponent {
 public:
  enum class Kind { one, finite, infinite };

  // Throws DomainError unless 1 < q < ∞ (q = +inf is mapped to infinity()).
  static Exponent finite(double q);
  static Exponent infinity();
  static Exponent one();
  // Like finite(), but q = 1 yields one().
  static Exponent closed(double q);

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_one() const { return kind_ == Kind::one; }
  bool is_finite() const { return kind_ == Kind::finite; }

  // q as a double; +inf for the infinite exponent.
  double value() const;
  // q' as a double; +inf for q = 1, 1 for q = ∞.
  double conjugate_value() const;
  // 1/q; 0 for the infinite exponent.
  double reciprocal() const;

  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(Kind k, double q, double qc) : kind_(k), q_(q), qc_(qc) {}

  friend Exponent conjugate(Exponent q);

  Kind kind_;
  double q_;
  double qc_;
};

/// Hölder conjugate q' = q/(q-1); ∞ ↔ 1.
Exponent conjugate(Exponent q);

}  // namespace stechkin
