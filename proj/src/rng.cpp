#include "cowpath/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cowpath {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed + kGolden) ^ (stream * 0xD1342543DE82EF95ULL + 1))) {}

std::uint64_t CounterRng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double CounterRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double CounterRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // Box-Muller; u1 strictly positive so log is finite.
    double u1 = uniform_pos();
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

double CounterRng::gamma(double a) {
    if (a < 1.0) throw std::invalid_argument("CounterRng::gamma: shape must be >= 1");
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform_pos();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
}

void CounterRng::fill_gaussian(std::span<double> out) {
    for (double& x : out) x = normal();
}

Vec CounterRng::unit_vector(std::size_t d) {
    if (d == 0) throw std::invalid_argument("unit_vector: dimension must be >= 1");
    std::vector<double> g(d);
    for (;;) {
        double norm_sq = 0.0;
        for (double& x : g) {
            x = normal();
            norm_sq += x * x;
        }
        double n = std::sqrt(norm_sq);
        if (n > 1e-12) {
            for (double& x : g) x /= n;
            return Vec(g);
        }
    }
}

Vec CounterRng::ball_point(std::size_t d, double radius) {
    Vec u = unit_vector(d);
    double scale = radius * std::pow(uniform01(), 1.0 / static_cast<double>(d));
    return u * scale;
}

double CounterRng::sphere_axis_cos(std::size_t d) {
    if (d < 2) throw std::invalid_argument("sphere_axis_cos: requires d >= 2");
    double g = normal();
    double s;
    if (d == 2) {
        double h = normal();
        s = h * h;
    } else {
        s = 2.0 * gamma(0.5 * static_cast<double>(d - 1));
    }
    return g / std::sqrt(g * g + s);
}

} // namespace cowpath
