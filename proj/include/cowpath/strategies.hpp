#pragma once

#include <cstdint>
#include <optional>

#include "cowpath/polyline.hpp"

namespace cowpath {

/// Classic 1-d doubling strategy: vertices 0, 1, -2, 4, ..., (-2)^k_max.
Polyline doubling_1d(int k_max);

/// Logarithmic spiral r(theta) = e^{b theta} sampled at points_per_turn
/// uniform angles per full turn, from radius 0.01 up to theta_max, with an
/// exact origin vertex prepended. Requires points_per_turn >= 64 and an end
/// radius of at least 2.
Polyline log_spiral_2d(double growth_b, double theta_max, int points_per_turn);

/// Tour of the scaled cross-polytope vertices: origin, +scale e_1 ... +scale e_d,
/// -scale e_1 ... -scale e_d. At scale >= sqrt(d) its hull contains the unit
/// ball. Total length scale * (1 + (2d-1) sqrt(2)). Default scale sqrt(d).
Polyline cross_polytope_tour(std::size_t d,
                             std::optional<double> scale = std::nullopt);

/// Seeded random walk of `steps` equal-length steps totalling target_length,
/// reflected at the radius boundary so every point stays within `radius`.
Polyline confined_random_path(std::size_t d, double radius,
                              double target_length, std::size_t steps,
                              std::uint64_t seed);

} // namespace cowpath
