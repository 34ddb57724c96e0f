#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cowpath/polyline.hpp"
#include "cowpath/vec.hpp"

namespace cowpath {

/// Outcome of one executable lemma check. worst_margin is the most negative
/// slack seen (nonnegative everywhere iff violations == 0, up to the stated
/// statistical band for sampled checks).
struct LemmaVerdict {
    std::string lemma_id; // cap | point-visibility | ball-containment | confined-path
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    std::int64_t skipped = 0; // trials that produced nothing to test
    double worst_margin = 0.0;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
};

/// Unit-length split of a path: pieces cut at arc lengths 1, 2, ...; all
/// pieces have length 1 except possibly the last. Each piece lies inside the
/// radius-1/2 ball around its arc-length midpoint.
struct Decomposition {
    std::size_t piece_count = 0;
    std::vector<Vec> midpoints;
    std::vector<double> piece_lengths;
};

/// Cap concentration: exact cap measure <= e^{-d eps^2/2} on the full grid.
LemmaVerdict check_cap_bound(const std::vector<std::size_t>& d_grid,
                             const std::vector<double>& eps_grid);

/// Point visibility: exact and empirical visible fractions from points of
/// norm |p| stay under e^{-d/(2|p|^2)}; the empirical count must also sit
/// within a 3-sigma binomial band of the exact value.
LemmaVerdict check_point_visibility(std::size_t d,
                                    const std::vector<double>& p_norms,
                                    std::size_t n_samples, std::uint64_t seed,
                                    unsigned workers = 1);

/// Ball visibility containment: whatever is visible from a point r in the
/// radius-1/2 ball around p is visible from 2p. Constructive sampling: draw
/// p with |p| uniform in [1,4], r = p + w with w uniform in the half ball,
/// then a sphere point q visible from r (up to 10^4 acceptance attempts,
/// trials where r sees nothing are skipped and logged), and assert
/// sees(2p, q) exactly.
LemmaVerdict check_ball_containment(std::size_t d, std::size_t trials,
                                    std::uint64_t seed, unsigned workers = 1);

/// Confined-path soundness on generated paths: every seeded random path
/// confined to `radius` with length < e^{d/(8 radius^2)} - 1 must have
/// coverage_upper_bound < 1 and a sampled visible fraction within band of it.
LemmaVerdict check_confined_path(std::size_t d, double radius,
                                 double target_length, std::size_t n_paths,
                                 std::size_t n_samples, std::uint64_t seed,
                                 unsigned workers = 1);

/// Merge per-dimension verdicts of the same lemma into one document.
LemmaVerdict merge_verdicts(const std::string& lemma_id,
                            const std::vector<LemmaVerdict>& parts);

Decomposition decompose_unit(const Polyline& path);

/// Certified upper bound on the fraction of the sphere the path views: sum
/// over unit pieces of the fraction visible from twice the piece midpoint,
/// clamped to [0,1]. A value < 1 certifies the path does not cover.
double coverage_upper_bound(const Polyline& path);

/// Minimum length e^{d/(8 r^2)} - 1 of any covering path confined to radius r.
double confined_bound(std::size_t d, double r);

} // namespace cowpath
