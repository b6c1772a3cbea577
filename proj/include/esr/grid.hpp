#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "esr/error.hpp"
#include "esr/systems/system.hpp"

namespace esr {

/// Cells C_i = [x_{i-1/2}, x_{i+1/2}], not necessarily equidistant.
template <ConservationSystem System>
struct Grid1D {
  using State = typename System::State;

  std::vector<double> interfaces;  // K + 1, strictly increasing
  std::vector<State> states;       // K

  std::size_t cells() const { return states.size(); }
  double width(std::size_t i) const { return interfaces[i + 1] - interfaces[i]; }
  double center(std::size_t i) const { return 0.5 * (interfaces[i] + interfaces[i + 1]); }

  void validate(const System& sys) const {
    if (interfaces.size() != states.size() + 1 || states.size() < 2)
      throw Error(ErrorCode::kUsage, "grid needs K >= 2 cells and K + 1 interfaces");
    for (std::size_t i = 0; i + 1 < interfaces.size(); ++i) {
      if (!(interfaces[i + 1] > interfaces[i]))
        throw Error(ErrorCode::kUsage, "grid interfaces must be strictly increasing");
    }
    for (const auto& q : states) sys.check_physical(q);
  }
};

template <ConservationSystem System>
struct DirichletBc {
  typename System::State left;
  typename System::State right;
};

std::vector<double> uniform_interfaces(double x_min, double x_max, std::size_t cells);

template <ConservationSystem System>
Grid1D<System> make_grid(std::vector<double> interfaces,
                         const std::function<typename System::State(double)>& init) {
  Grid1D<System> grid;
  grid.interfaces = std::move(interfaces);
  grid.states.reserve(grid.interfaces.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.interfaces.size(); ++i)
    grid.states.push_back(init(grid.center(i)));
  return grid;
}

}  // namespace esr
