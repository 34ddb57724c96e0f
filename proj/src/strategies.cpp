#include "cowpath/strategies.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cowpath/rng.hpp"
#include "cowpath/vec.hpp"

namespace cowpath {

Polyline doubling_1d(int k_max) {
    if (k_max < 1) throw std::invalid_argument("doubling_1d: k_max must be >= 1");
    std::vector<Vec> verts;
    verts.reserve(static_cast<std::size_t>(k_max) + 2);
    verts.push_back(Vec{0.0});
    double x = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        verts.push_back(Vec{x});
        x *= -2.0;
    }
    return Polyline(std::move(verts));
}

Polyline log_spiral_2d(double growth_b, double theta_max, int points_per_turn) {
    if (!(growth_b > 0.0)) throw std::domain_error("log_spiral_2d: growth must be > 0");
    if (points_per_turn < 64) {
        throw std::domain_error("log_spiral_2d: needs at least 64 points per turn");
    }
    const double r_end = std::exp(growth_b * theta_max);
    if (!(r_end >= 2.0)) {
        throw std::domain_error("log_spiral_2d: theta_max must give an end radius >= 2");
    }
    // Start where the radius has shrunk to 0.01, with an exact origin vertex
    // prepended; the missing inner winding is shorter than 0.035.
    const double theta_min = std::log(0.01) / growth_b;
    const double span = theta_max - theta_min;
    const std::size_t segments = static_cast<std::size_t>(
        std::ceil(span * points_per_turn / (2.0 * std::numbers::pi)));
    std::vector<Vec> verts;
    verts.reserve(segments + 2);
    verts.push_back(Vec{0.0, 0.0});
    for (std::size_t k = 0; k <= segments; ++k) {
        double theta = theta_min + span * static_cast<double>(k) /
                                       static_cast<double>(segments);
        double r = std::exp(growth_b * theta);
        verts.push_back(Vec{r * std::cos(theta), r * std::sin(theta)});
    }
    return Polyline(std::move(verts));
}

Polyline cross_polytope_tour(std::size_t d, std::optional<double> scale) {
    if (d < 2) throw std::invalid_argument("cross_polytope_tour: d must be >= 2");
    const double s = scale.value_or(std::sqrt(static_cast<double>(d)));
    if (!(s > 0.0)) throw std::invalid_argument("cross_polytope_tour: scale must be > 0");
    std::vector<Vec> verts;
    verts.reserve(2 * d + 1);
    verts.push_back(Vec(d));
    for (std::size_t i = 0; i < d; ++i) verts.push_back(Vec::axis(d, i, s));
    for (std::size_t i = 0; i < d; ++i) verts.push_back(Vec::axis(d, i, -s));
    return Polyline(std::move(verts));
}

Polyline confined_random_path(std::size_t d, double radius, double target_length,
                              std::size_t steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("confined_random_path: steps must be >= 1");
    if (!(target_length >= 0.0)) {
        throw std::invalid_argument("confined_random_path: negative target length");
    }
    if (target_length > 0.0 && !(radius > 0.0)) {
        throw std::domain_error("confined_random_path: cannot move inside radius 0");
    }
    const double step_len = target_length / static_cast<double>(steps);
    std::vector<Vec> verts;
    verts.push_back(Vec(d));
    Vec pos(d);
    for (std::size_t k = 0; k < steps; ++k) {
        CounterRng rng(seed, k);
        Vec dir = rng.unit_vector(d);
        double remaining = step_len;
        int bounces = 0;
        while (remaining > 0.0) {
            // Travel to the boundary sphere or for the remaining budget,
            // whichever comes first; mirror-reflect at the boundary so the
            // step length is preserved.
            double b_half = dot(pos, dir);
            double c = std::min(0.0, pos.norm_squared() - radius * radius);
            double reach = -b_half + std::sqrt(std::max(0.0, b_half * b_half - c));
            if (reach >= remaining) {
                pos += dir * remaining;
                remaining = 0.0;
                verts.push_back(pos);
            } else {
                pos += dir * reach;
                remaining -= reach;
                verts.push_back(pos);
                Vec n = pos * (1.0 / pos.norm());
                dir -= n * (2.0 * dot(dir, n));
                if (++bounces > 10000) {
                    throw std::runtime_error("confined_random_path: reflection stall");
                }
            }
        }
    }
    return Polyline(std::move(verts));
}

} // namespace cowpath
