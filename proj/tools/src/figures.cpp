#include "stechkin_cli/figures.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "stechkin/constants.hpp"
#include "stechkin/error.hpp"

namespace stechkin::cli {

namespace {

using Curve = std::function<double(Exponent)>;

struct Column {
  std::string name;
  Curve curve;
};

Curve catalog(ConstantKind kind) {
  return [kind](Exponent q) { return evaluate(kind, q).value; };
}

// Solid line of the bounds overlay: Levin-Stechkin below q0, Gao's exact
// constant from q0 on.
double levin_gao(Exponent q) {
  if (q.value() >= gao_q0().hi()) return gao_exact(q).value;
  return levin_stechkin(q).value;
}

std::vector<Column> columns(Figure f) {
  switch (f) {
    case Figure::fig1_c1:
      return {{"c1", catalog(ConstantKind::c1)}};
    case Figure::fig4_c1weak:
      return {{"c1_weak", catalog(ConstantKind::c1_weak)}};
    case Figure::fig5_C1weak:
      return {{"C1_weak", catalog(ConstantKind::C1_weak)}};
    case Figure::fig6_cont_pair:
      return {{"c1_cont", catalog(ConstantKind::c1_cont)},
              {"C1_cont", catalog(ConstantKind::C1_cont)}};
    case Figure::fig7_weakcont_pair:
      return {{"c1_weak_cont", catalog(ConstantKind::c1_weak_cont)},
              {"C1_weak_cont", catalog(ConstantKind::C1_weak_cont)}};
    case Figure::fig8_bounds_overlay:
      return {{"copson", catalog(ConstantKind::copson)},
              {"levin_stechkin_gao", levin_gao},
              {"stechkin_choice", catalog(ConstantKind::stechkin_choice)},
              {"improved", catalog(ConstantKind::improved)}};
  }
  return {};
}

}  // namespace

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::fig1_c1:
      return "fig1_c1";
    case Figure::fig4_c1weak:
      return "fig4_c1weak";
    case Figure::fig5_C1weak:
      return "fig5_C1weak";
    case Figure::fig6_cont_pair:
      return "fig6_cont_pair";
    case Figure::fig7_weakcont_pair:
      return "fig7_weakcont_pair";
    case Figure::fig8_bounds_overlay:
      return "fig8_bounds_overlay";
  }
  return "?";
}

std::optional<Figure> parse_figure(std::string_view name) {
  for (Figure f : kAllFigures) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string figure_csv(Figure f, int grid) {
  if (grid < 2) throw DomainError("grid must be >= 2");
  const std::vector<Column> cols = columns(f);
  std::string out = "inv_q";
  for (const Column& c : cols) out += "," + c.name;
  out += '\n';
  const double denom = static_cast<double>(grid) + 1.0;
  for (int i = 1; i <= grid; ++i) {
    const double x = i / denom;
    const Exponent q = Exponent::finite(denom / i);
    out += format_number(x);
    for (const Column& c : cols) {
      double v = NAN;
      try {
        v = c.curve(q);
      } catch (const DomainError&) {
      } catch (const ConvergenceError&) {
      }
      out += ',' + format_number(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace stechkin::cli
