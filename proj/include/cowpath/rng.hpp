#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cowpath/vec.hpp"

namespace cowpath {

/// Counter-based deterministic generator. Each (seed, stream) pair names an
/// independent sequence; all sampling loops in this project key the stream
/// by the sample index, so results do not depend on execution order or on
/// how work is split across threads.
///
/// The core is splitmix64: a 64-bit counter walked by a fixed increment and
/// passed through an avalanche mix. Gaussians come from Box-Muller on the
/// uniform output, so the byte-exact sequence is fully specified by this
/// file and does not depend on libstdc++ internals.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform01();   // [0, 1)
    double uniform_pos(); // (0, 1]
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    double normal();
    /// Gamma(shape a >= 1, scale 1), Marsaglia-Tsang squeeze method.
    double gamma(double a);

    void fill_gaussian(std::span<double> out);

    /// Uniform point on S^{d-1} (normalized Gaussian vector).
    Vec unit_vector(std::size_t d);
    /// Uniform point in the closed ball of the given radius.
    Vec ball_point(std::size_t d, double radius);
    /// Cosine between a uniform point on S^{d-1} and a fixed axis, drawn
    /// from the exact marginal g / sqrt(g^2 + S), g standard normal and S
    /// chi-square(d-1). P(result >= eps) equals the cap measure at eps.
    double sphere_axis_cos(std::size_t d);

private:
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

} // namespace cowpath
