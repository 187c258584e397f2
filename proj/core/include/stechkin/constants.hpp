#pragma once

#include <optional>
#include <string_view>

#include "stechkin/certified.hpp"
#include "stechkin/exponent.hpp"

namespace stechkin {

/// Every constant and published bound the catalog can evaluate.
enum class ConstantKind {
  c1,               // optimal lower constant, strong discrete
  C1_best,          // best known upper constant, strong discrete (piecewise)
  c1_weak,          // optimal lower constant, weak discrete
  C1_weak,          // optimal upper constant, weak discrete
  c1_cont,          // optimal lower constant, strong continuous
  C1_cont,          // optimal upper constant, strong continuous
  c1_weak_cont,     // optimal lower constant, weak continuous
  C1_weak_cont,     // optimal upper constant, weak continuous
  copson,           // q^{1/q}
  levin_stechkin,   // three-branch bound
  stechkin_choice,  // 2 (2q'-1)^{-1/q'}
  improved,         // (e ln2 / sqrt 2)^{1/q'}
  gao_exact,        // (q-1)^{1/q} for q >= q0
};

inline constexpr ConstantKind kAllConstantKinds[] = {
    ConstantKind::c1,           ConstantKind::C1_best,        ConstantKind::c1_weak,
    ConstantKind::C1_weak,      ConstantKind::c1_cont,        ConstantKind::C1_cont,
    ConstantKind::c1_weak_cont, ConstantKind::C1_weak_cont,   ConstantKind::copson,
    ConstantKind::levin_stechkin, ConstantKind::stechkin_choice, ConstantKind::improved,
    ConstantKind::gao_exact,
};

std::string_view to_string(ConstantKind kind);
std::optional<ConstantKind> parse_constant_kind(std::string_view name);
// Human-readable formula, e.g. "pi / (q sin(pi/q))".
std::string_view formula(ConstantKind kind);

enum class ConstantStatus {
  exact,        // the optimal constant itself
  upper_bound,  // a proven upper bound on the optimal constant
  reference,    // a literature value with an error bar, not computed here
};

std::string_view to_string(ConstantStatus status);

/// Dispatches to the functions below. Throws DomainError outside the kind's
/// domain.
CertifiedValue evaluate(ConstantKind kind, Exponent q);

// de Bruijn's value of C1(2) and its stated error bar.
inline constexpr double kDeBruijnC1At2 = 1.1064957714;
inline constexpr double kDeBruijnC1At2Err = 9e-10;

// Upper end (2 + ln 2)/(2 - ln 2) of the validity interval of improved().
double improved_limit();

// pi/(q sin(pi/q)); 1 at q = ∞.
CertifiedValue c1(Exponent q);

// Best known upper constant: improved() on [1, improved_limit()] except the
// reference value at q = 2, stechkin_choice() up to q0, then (q-1)^{1/q}.
CertifiedValue C1_best(Exponent q);
ConstantStatus C1_best_status(Exponent q);

CertifiedValue copson(Exponent q);
CertifiedValue levin_stechkin(Exponent q);
// First branch of levin_stechkin() evaluated for any finite q > 1:
// 2^{1/q-2} (3 - 1/q) q (2 - 1/q)^{1/q-1}.
CertifiedValue levin_stechkin_branch1(Exponent q);
CertifiedValue stechkin_choice(Exponent q);
// Requires q <= improved_limit().
CertifiedValue improved(Exponent q);
// (q-1)^{1/q}; requires q >= q0 (or q = ∞).
CertifiedValue gao_exact(Exponent q);

/// Riemann zeta by direct summation of k^{-q}, k <= M, plus a two-sided
/// bracket on the tail. M doubles until the bracket is narrower than tol.
/// Requires q >= 1 + 1e-3. Throws ConvergenceError if rounding alone
/// exceeds tol.
CertifiedValue zeta(double q, double tol);

// zeta(q)^{1/q}; 1 at q = ∞. `rel_tol` is relative to zeta(q).
CertifiedValue c1_weak(Exponent q, double rel_tol = 1e-13);
// q^{1/q} q'^{1/q'}; 1 at q = 1 and q = ∞.
CertifiedValue C1_weak(Exponent q);

struct ContinuousConstants {
  CertifiedValue c1;       // pi/(q sin(pi/q))
  CertifiedValue C1;       // (q-1)^{1/q}
  CertifiedValue c1_weak;  // (q-1)^{-1/q}
  CertifiedValue C1_weak;  // q^{1/q} q'^{1/q'}
};

ContinuousConstants continuous_constants(Exponent q);

// Left-hand side of Gao's threshold equation; q0 is its root in [2.5, 3].
double gao_function(double q);
// Bisection root of gao_function on [2.5, 3] to half-width <= 1e-8.
CertifiedValue gao_q0();

struct Crossovers {
  CertifiedValue q1;  // stechkin_choice = copson, lower root
  CertifiedValue q2;  // stechkin_choice = copson, upper root
  CertifiedValue q3;  // minimizer of stechkin_choice
  CertifiedValue q4;  // levin_stechkin branch 1 = stechkin_choice
};

Crossovers crossovers();

}  // namespace stechkin
