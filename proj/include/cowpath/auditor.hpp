#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cowpath/coverage.hpp"
#include "cowpath/polyline.hpp"
#include "cowpath/vec.hpp"

namespace cowpath {

struct Milestone {
    std::size_t index;   // 1-based stage number
    double arc_time;     // arc length along the original path
    Direction direction; // unit vector at the crossing, in ambient coords
    double attained_norm;
};

/// Projection-cascade certificate. Repeatedly finds the first arc time at
/// which the current projected path reaches norm tau, then projects the path
/// onto the orthocomplement of that direction. m milestones certify that the
/// original path has length at least m * tau.
struct AuditReport {
    std::size_t d = 0;
    double tau = 0.0;
    std::vector<Milestone> milestones;
    std::size_t m = 0;
    double certified_lower_bound = 0.0;
    double measured_length = 0.0;
    bool monotone_ok = true; // milestone arc times nondecreasing
};

/// tau(d) = sqrt((d/2) / (16 ln(d/2))), natural log. Requires d >= 4.
double tau(std::size_t d);

/// Runs the cascade with tau(path.dim()), or with tau_override when given
/// (required for d < 4). Stages are capped at d; every milestone found is
/// reported, since the certificate m*tau is sound for any m.
AuditReport audit(const Polyline& path,
                  std::optional<double> tau_override = std::nullopt);

enum class CorollaryBranch { reached_radius, long_path, non_covering_certificate };

/// Dichotomy check: a covering path must reach radius sqrt(d/(16 ln d)) or
/// have length >= d^2 - 1; a path that does neither cannot cover, and the
/// verdict carries a sampled non-coverage witness as evidence.
struct CorollaryVerdict {
    CorollaryBranch branch = CorollaryBranch::non_covering_certificate;
    double threshold_radius = 0.0;
    double length_threshold = 0.0;
    double max_norm = 0.0;
    double measured_length = 0.0;
    std::string details;
    std::optional<CoverageReport> coverage_evidence; // non-covering branch only
};

CorollaryVerdict corollary_check(const Polyline& path,
                                 std::size_t witness_samples = 20000,
                                 std::uint64_t seed = 0, unsigned workers = 1);

/// floor(d/2) * tau(d): the explicit constant-bearing lower bound certified
/// by the cascade for covering paths in the theorem's short-path case.
double theorem_bound(std::size_t d);

} // namespace cowpath
