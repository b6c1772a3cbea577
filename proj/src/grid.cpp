#include "esr/grid.hpp"

namespace esr {

std::vector<double> uniform_interfaces(double x_min, double x_max, std::size_t cells) {
  if (!(x_max > x_min) || cells < 1) throw Error(ErrorCode::kUsage, "invalid uniform grid");
  std::vector<double> x(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i)
    x[i] = x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(cells);
  x.back() = x_max;
  return x;
}

}  // namespace esr
