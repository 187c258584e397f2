#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace stechkin::cli {

enum class Figure {
  fig1_c1,
  fig4_c1weak,
  fig5_C1weak,
  fig6_cont_pair,
  fig7_weakcont_pair,
  fig8_bounds_overlay,
};

inline constexpr Figure kAllFigures[] = {
    Figure::fig1_c1,        Figure::fig4_c1weak,        Figure::fig5_C1weak,
    Figure::fig6_cont_pair, Figure::fig7_weakcont_pair, Figure::fig8_bounds_overlay,
};

std::string_view to_string(Figure f);
std::optional<Figure> parse_figure(std::string_view name);

// CSV with a header row and one row per 1/q = i/(grid+1), i = 1..grid.
// Cells outside a curve's domain read "nan". Requires grid >= 2.
std::string figure_csv(Figure f, int grid);

// %.15g, which is the shortest round-trip form capped at 15 digits.
std::string format_number(double x);

}  // namespace stechkin::cli
