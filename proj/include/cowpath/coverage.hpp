#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cowpath/geometry.hpp"
#include "cowpath/polyline.hpp"
#include "cowpath/vec.hpp"

namespace cowpath {

/// Spherical cap {u in S^{d-1} : <u, v> >= epsilon}, v any unit vector.
struct CapQuery {
    std::size_t d;  // dimension >= 2
    double epsilon; // in [0, 1]
};

enum class CoverageMode { sampled, exact_low_d };

/// Verdict on whether a path views the whole unit sphere, with margins and
/// (when it does not) a bounded list of uncovered witness directions.
struct CoverageReport {
    CoverageMode mode = CoverageMode::sampled;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    double fraction_visible = 0.0;
    /// min over tested directions q of (max over vertices v of <v,q>) - 1.
    double min_support_margin = 0.0;
    std::vector<Direction> uncovered_witnesses; // at most 16, empty iff verdict
    bool verdict = false;
};

struct RatioOptions {
    std::size_t n_directions = 64;
    std::size_t offsets_per_direction = 256;
    std::uint64_t seed = 0;
    /// Offset ceiling; defaults to the largest vertex norm. Offsets for a
    /// sampled direction q are additionally capped at the path's support in
    /// that direction, so every evaluated hyperplane is one the path reaches.
    std::optional<double> r_max;
    int refine_rounds = 10;
    unsigned workers = 1;
};

/// Worst sampled competitive ratio sup s/r over hyperplanes (q, r).
/// `unbounded` is set instead when some sampled direction is not viewed at
/// all (the dual hyperplane at distance 1 is never hit).
struct RatioReport {
    bool unbounded = false;
    double sup_ratio = 0.0;
    std::optional<Hyperplane> argmax_hyperplane;
    std::string grid;
    std::uint64_t seed = 0;
};

/// n uniform points on S^{d-1}. Sample i is generated from the stream keyed
/// by (seed, i); identical (d, n, seed) gives bit-identical output.
std::vector<Direction> sample_directions(std::size_t d, std::size_t n,
                                         std::uint64_t seed);

/// Concentration bound e^{-d eps^2 / 2} on the cap fraction.
double cap_bound(std::size_t d, double epsilon);

/// Exact normalized surface measure of the cap, (1/2) I_{1-eps^2}((d-1)/2, 1/2)
/// with I the regularized incomplete beta. Requires d >= 2.
double cap_fraction_exact(std::size_t d, double epsilon);

/// Fraction of the unit sphere visible from p: 0 when |p| <= 1 (a point on
/// the sphere views a measure-zero cap), else the exact cap measure at
/// epsilon = 1/|p|.
double visible_fraction_from_point(const Vec& p);

/// (max over vertices v of <v, q>) - 1; nonnegative iff the path views q.
/// Segment maxima are attained at vertices, so vertices decide visibility.
double support_margin(const Polyline& path, const Direction& q);

/// Coverage decision. Sampled mode draws n_samples directions; exact mode
/// supports d <= 3 (d=2 by circular-arc union, d=3 by supporting-plane
/// enumeration over vertex triples, d=1 by endpoint signs).
CoverageReport covers(const Polyline& path, CoverageMode mode,
                      std::size_t n_samples, std::uint64_t seed,
                      unsigned workers = 1);

/// first_hit(path, h) / h.offset, when the path reaches h.
std::optional<double> hyperplane_ratio(const Polyline& path, const Hyperplane& h);

RatioReport worst_case_ratio(const Polyline& path, const RatioOptions& opt);

} // namespace cowpath
