#include "proxwell/stack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace proxwell {

PotentialStack::PotentialStack(std::vector<Layer> layers,
                               BoundaryCondition left_bc,
                               BoundaryCondition right_bc)
    : layers_(std::move(layers)), left_bc_(left_bc), right_bc_(right_bc) {
  if (layers_.empty()) {
    throw std::invalid_argument("PotentialStack: at least one layer required");
  }
  edges_.reserve(layers_.size() + 1);
  edges_.push_back(0.0);
  max_potential_ = layers_.front().potential;
  for (const Layer& layer : layers_) {
    if (!(layer.width > 0.0) || !std::isfinite(layer.width)) {
      throw std::invalid_argument("PotentialStack: layer width must be positive and finite");
    }
    if (!std::isfinite(layer.potential)) {
      throw std::invalid_argument("PotentialStack: layer potential must be finite");
    }
    edges_.push_back(edges_.back() + layer.width);
    max_potential_ = std::max(max_potential_, layer.potential);
  }
}

LayerLocation PotentialStack::locate(double x) const {
  if (!(x >= 0.0) || !(x <= total_width())) {
    throw std::invalid_argument("PotentialStack::locate: x = " + std::to_string(x) +
                                " outside [0, " + std::to_string(total_width()) + "]");
  }
  // First edge strictly greater than x; interior edges send x to the right
  // layer, the right wall stays in the last one.
  auto it = std::upper_bound(edges_.begin() + 1, edges_.end(), x);
  std::size_t index = static_cast<std::size_t>(it - edges_.begin()) - 1;
  index = std::min(index, layers_.size() - 1);
  return {index, x - edges_[index]};
}

PotentialStack make_periodic_bilayer(int periods, double barrier,
                                     BoundaryCondition bc) {
  if (periods < 1) {
    throw std::invalid_argument("make_periodic_bilayer: periods must be >= 1");
  }
  if (!(barrier >= 0.0) || !std::isfinite(barrier)) {
    throw std::invalid_argument("make_periodic_bilayer: barrier must be >= 0 and finite");
  }
  std::vector<Layer> layers;
  layers.reserve(2 * static_cast<std::size_t>(periods));
  for (int p = 0; p < periods; ++p) {
    layers.push_back({0.0, 1.0});
    layers.push_back({barrier, 1.0});
  }
  return PotentialStack(std::move(layers), bc, bc);
}

}  // namespace proxwell
