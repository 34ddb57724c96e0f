#include "cowpath/auditor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cowpath/geometry.hpp"

namespace cowpath {

double tau(std::size_t d) {
    if (d < 4) {
        throw std::domain_error(
            "tau: defined as sqrt((d/2)/(16 ln(d/2))) and needs d >= 4; "
            "use a tau override for lower dimensions");
    }
    const double half = 0.5 * static_cast<double>(d);
    return std::sqrt(half / (16.0 * std::log(half)));
}

double theorem_bound(std::size_t d) {
    return static_cast<double>(d / 2) * tau(d);
}

AuditReport audit(const Polyline& path, std::optional<double> tau_override) {
    const std::size_t d = path.dim();
    double tau_val;
    if (tau_override) {
        if (std::isnan(*tau_override) || !(*tau_override > 0.0)) {
            throw std::domain_error("audit: tau override must be positive");
        }
        tau_val = *tau_override;
    } else {
        tau_val = tau(d); // throws below d = 4
    }

    AuditReport rep;
    rep.d = d;
    rep.tau = tau_val;
    rep.measured_length = path.length();

    // Nodes of the current projected path, parameterized by arc time along
    // the ORIGINAL path. Projection is linear, so interpolating projected
    // nodes with original-path fractions is exactly the projected point.
    std::vector<double> times = path.cum_length();
    std::vector<Vec> pts = path.vertices();
    std::vector<Vec> axes; // milestone directions found so far

    const double tau_sq = tau_val * tau_val;
    for (std::size_t stage = 1; stage <= d; ++stage) {
        // First node index whose norm reaches tau; the crossing lies in the
        // segment just before it (norm is convex along a segment, so no
        // interior crossing can precede both endpoints).
        std::size_t hit = 0;
        for (std::size_t j = 1; j < pts.size(); ++j) {
            if (pts[j].norm_squared() >= tau_sq) {
                hit = j;
                break;
            }
        }
        if (hit == 0) break; // projected path never reaches tau

        const Vec& a = pts[hit - 1];
        Vec ab = pts[hit] - a;
        double qa = ab.norm_squared();
        double qb = 2.0 * dot(a, ab);
        double qc = a.norm_squared() - tau_sq;
        double lambda = 1.0;
        if (qa > 0.0) {
            double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
            lambda = (-qb + std::sqrt(disc)) / (2.0 * qa);
            lambda = std::clamp(lambda, 0.0, 1.0);
        }
        double t_i = times[hit - 1] + lambda * (times[hit] - times[hit - 1]);
        Vec x = a + ab * lambda;
        double attained = x.norm();

        // Milestone direction, re-orthogonalized against earlier axes (the
        // projected points already live in their orthocomplement up to
        // rounding).
        Vec u = x;
        for (const Vec& prev : axes) u -= prev * dot(u, prev);
        double un = u.norm();
        if (un <= 1e-12 * std::max(1.0, tau_val)) break;
        u *= 1.0 / un;

        rep.milestones.push_back(
            Milestone{stage, t_i, Direction::from_unit(u), attained});
        axes.push_back(u);

        // Insert the crossing point as a node, then project everything onto
        // the orthocomplement of u; the crossing node itself maps to ~0.
        times.insert(times.begin() + static_cast<std::ptrdiff_t>(hit), t_i);
        pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(hit), x);
        for (Vec& v : pts) v -= u * dot(v, u);
    }

    rep.m = rep.milestones.size();
    rep.certified_lower_bound =
        rep.m == 0 ? 0.0 : static_cast<double>(rep.m) * tau_val;
    const double slack = 1e-9 * std::max(1.0, rep.measured_length);
    for (std::size_t i = 1; i < rep.milestones.size(); ++i) {
        if (rep.milestones[i].arc_time < rep.milestones[i - 1].arc_time - slack) {
            rep.monotone_ok = false;
        }
    }
    return rep;
}

CorollaryVerdict corollary_check(const Polyline& path, std::size_t witness_samples,
                                 std::uint64_t seed, unsigned workers) {
    const std::size_t d = path.dim();
    if (d < 3) {
        throw std::domain_error("corollary_check: requires dimension >= 3");
    }
    CorollaryVerdict v;
    v.threshold_radius =
        std::sqrt(static_cast<double>(d) / (16.0 * std::log(static_cast<double>(d))));
    v.length_threshold = static_cast<double>(d) * static_cast<double>(d) - 1.0;
    v.max_norm = path.max_vertex_norm(); // segment norms peak at vertices
    v.measured_length = path.length();

    std::ostringstream details;
    if (v.max_norm >= v.threshold_radius) {
        v.branch = CorollaryBranch::reached_radius;
        details << "path reaches radius " << v.max_norm << " >= threshold "
                << v.threshold_radius;
    } else if (v.measured_length >= v.length_threshold) {
        v.branch = CorollaryBranch::long_path;
        details << "path length " << v.measured_length << " >= d^2 - 1 = "
                << v.length_threshold;
    } else {
        v.branch = CorollaryBranch::non_covering_certificate;
        v.coverage_evidence =
            covers(path, CoverageMode::sampled, witness_samples, seed, workers);
        details << "path stays below radius " << v.threshold_radius
                << " with length " << v.measured_length << " < "
                << v.length_threshold << ": it cannot view the whole sphere"
                << " (sampled fraction "
                << v.coverage_evidence->fraction_visible << ")";
    }
    v.details = details.str();
    return v;
}

} // namespace cowpath
