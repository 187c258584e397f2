#include "stechkin/roots.hpp"

#include <cmath>
#include <sstream>

#include "stechkin/error.hpp"

namespace stechkin {

Bracket bisect(const std::function<double(double)>& f, double lo, double hi,
               double half_width_tol, int max_iterations) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, 0};
  if (fhi == 0.0) return {hi, hi, 0};
  if (std::isnan(flo) || std::isnan(fhi) || (flo > 0) == (fhi > 0)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "]: f(lo) = " << flo
       << ", f(hi) = " << fhi;
    throw BracketError(os.str());
  }

  Bracket b{lo, hi, 0};
  while (b.iterations < max_iterations && b.half_width() > half_width_tol) {
    const double mid = b.midpoint();
    if (mid <= b.lo || mid >= b.hi) break;
    const double fm = f(mid);
    ++b.iterations;
    if (fm == 0.0) return {mid, mid, b.iterations};
    if ((fm > 0) == (flo > 0)) {
      b.lo = mid;
      flo = fm;
    } else {
      b.hi = mid;
    }
  }
  return b;
}

Bracket golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                double half_width_tol, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  Bracket b{lo, hi, 0};
  double x1 = b.hi - inv_phi * (b.hi - b.lo);
  double x2 = b.lo + inv_phi * (b.hi - b.lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b.iterations < max_iterations && b.half_width() > half_width_tol) {
    ++b.iterations;
    if (f1 <= f2) {
      b.hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = b.hi - inv_phi * (b.hi - b.lo);
      f1 = f(x1);
    } else {
      b.lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = b.lo + inv_phi * (b.hi - b.lo);
      f2 = f(x2);
    }
  }
  return b;
}

}  // namespace stechkin
