#include "cowpath/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cowpath/coverage.hpp"
#include "cowpath/geometry.hpp"
#include "cowpath/parallel.hpp"
#include "cowpath/rng.hpp"
#include "cowpath/strategies.hpp"

namespace cowpath {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// Uniform direction in the orthocomplement of the unit vector `axis`.
// Near-parallel draws are rejected before normalizing, which would amplify
// the orthogonalization residual; the direction law is unchanged since the
// orthogonal part is isotropic given its length.
Vec orthogonal_unit(CounterRng& rng, const Vec& axis) {
    const std::size_t d = axis.dim();
    for (;;) {
        Vec w = rng.unit_vector(d);
        w -= axis * dot(w, axis);
        if (w.norm() < 1e-3) continue;
        w -= axis * dot(w, axis);
        return w * (1.0 / w.norm());
    }
}

struct Accum {
    std::int64_t violations = 0;
    std::int64_t skipped = 0;
    double worst = std::numeric_limits<double>::infinity();

    void absorb(const Accum& o) {
        violations += o.violations;
        skipped += o.skipped;
        worst = std::min(worst, o.worst);
    }
};

} // namespace

LemmaVerdict check_cap_bound(const std::vector<std::size_t>& d_grid,
                             const std::vector<double>& eps_grid) {
    if (d_grid.empty() || eps_grid.empty()) {
        throw std::invalid_argument("check_cap_bound: empty grid");
    }
    LemmaVerdict v;
    v.lemma_id = "cap";
    v.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t d : d_grid) {
        for (double eps : eps_grid) {
            double margin = cap_bound(d, eps) - cap_fraction_exact(d, eps);
            v.worst_margin = std::min(v.worst_margin, margin);
            if (margin < 0.0) ++v.violations;
            ++v.trials;
        }
    }
    v.params["d_grid"] = fmt(static_cast<double>(d_grid.front())) + ".." +
                         fmt(static_cast<double>(d_grid.back()));
    v.params["eps_grid_size"] = std::to_string(eps_grid.size());
    return v;
}

LemmaVerdict check_point_visibility(std::size_t d,
                                    const std::vector<double>& p_norms,
                                    std::size_t n_samples, std::uint64_t seed,
                                    unsigned workers) {
    if (n_samples < 1) throw std::invalid_argument("check_point_visibility: n_samples >= 1");
    LemmaVerdict v;
    v.lemma_id = "point-visibility";
    v.seed = seed;
    v.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t gi = 0; gi < p_norms.size(); ++gi) {
        double norm = p_norms[gi];
        if (norm < 1.0) throw std::invalid_argument("check_point_visibility: |p| must be >= 1");
        const Vec p = Vec::axis(d, 0, norm);
        const double bound = std::exp(-static_cast<double>(d) / (2.0 * norm * norm));
        const double exact = visible_fraction_from_point(p);

        std::mutex m;
        std::int64_t visible = 0;
        parallel_for(n_samples, workers, [&](std::size_t begin, std::size_t end) {
            std::int64_t local = 0;
            for (std::size_t i = begin; i < end; ++i) {
                CounterRng rng(seed, gi * n_samples + i);
                Vec q = rng.unit_vector(d);
                if (sees(p, Direction::from_unit(q))) ++local;
            }
            std::lock_guard<std::mutex> lock(m);
            visible += local;
        });
        double emp = static_cast<double>(visible) / static_cast<double>(n_samples);
        double sigma = std::sqrt(std::max(exact * (1.0 - exact), emp * (1.0 - emp)) /
                                 static_cast<double>(n_samples));
        double band = 3.0 * sigma + 1.0 / static_cast<double>(n_samples);

        double margin_exact = bound - exact;      // Lemma 2, exact inequality
        double margin_emp = bound + band - emp;   // empirical, 3-sigma band
        v.worst_margin = std::min({v.worst_margin, margin_exact, margin_emp});
        if (margin_exact < 0.0) ++v.violations;
        if (margin_emp < 0.0) ++v.violations;
        v.trials += 2;
        v.params["emp[" + fmt(norm) + "]"] = fmt(emp);
        v.params["exact[" + fmt(norm) + "]"] = fmt(exact);
    }
    v.params["d"] = std::to_string(d);
    v.params["n_samples"] = std::to_string(n_samples);
    return v;
}

LemmaVerdict check_ball_containment(std::size_t d, std::size_t trials,
                                    std::uint64_t seed, unsigned workers) {
    if (d < 2) throw std::invalid_argument("check_ball_containment: d >= 2");
    constexpr std::size_t kMaxAttempts = 10000;

    std::mutex m;
    Accum total;
    parallel_for(trials, workers, [&](std::size_t begin, std::size_t end) {
        Accum acc;
        for (std::size_t t = begin; t < end; ++t) {
            CounterRng rng(seed, t);
            Vec p = rng.unit_vector(d) * rng.uniform(1.0, 4.0);
            Vec w = rng.ball_point(d, 0.5);
            Vec r = p + w;
            double rn = r.norm();
            if (rn < 1.0) { // r views nothing at all
                ++acc.skipped;
                continue;
            }
            Vec r_hat = r * (1.0 / rn);
            const double eps = 1.0 / rn;
            // Rejection sampling of a sphere point visible from r: the accept
            // test only needs the cosine along r_hat, whose exact marginal
            // CounterRng provides; the orthogonal part is completed once a
            // cosine is accepted. The (r, q) distribution is identical to
            // drawing a full uniform direction per attempt.
            bool found = false;
            for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
                double t_cos = rng.sphere_axis_cos(d);
                if (t_cos < eps) continue;
                Vec perp = orthogonal_unit(rng, r_hat);
                Vec q = r_hat * t_cos + perp * std::sqrt(std::max(0.0, 1.0 - t_cos * t_cos));
                Direction qd = Direction::from_unit(q);
                if (!sees(r, qd)) continue; // boundary rounding: not visible after all
                double margin = dot(p * 2.0, q) - 1.0;
                acc.worst = std::min(acc.worst, margin);
                if (!sees(p * 2.0, qd)) ++acc.violations;
                found = true;
                break;
            }
            if (!found) ++acc.skipped;
        }
        std::lock_guard<std::mutex> lock(m);
        total.absorb(acc);
    });

    LemmaVerdict v;
    v.lemma_id = "ball-containment";
    v.seed = seed;
    v.trials = static_cast<std::int64_t>(trials);
    v.violations = total.violations;
    v.skipped = total.skipped;
    v.worst_margin = total.worst;
    v.params["d"] = std::to_string(d);
    v.params["p_norm_range"] = "[1,4]";
    return v;
}

LemmaVerdict check_confined_path(std::size_t d, double radius,
                                 double target_length, std::size_t n_paths,
                                 std::size_t n_samples, std::uint64_t seed,
                                 unsigned workers) {
    if (n_paths < 1) throw std::invalid_argument("check_confined_path: n_paths >= 1");
    LemmaVerdict v;
    v.lemma_id = "confined-path";
    v.seed = seed;
    v.worst_margin = std::numeric_limits<double>::infinity();
    const double min_covering_length = confined_bound(d, radius);
    if (target_length >= min_covering_length) {
        throw std::invalid_argument(
            "check_confined_path: target length must sit below the confined bound "
            "for the contrapositive to apply");
    }
    const std::size_t steps = std::max<std::size_t>(4, static_cast<std::size_t>(
                                                           std::ceil(target_length)));
    for (std::size_t k = 0; k < n_paths; ++k) {
        Polyline path = confined_random_path(d, radius, target_length, steps,
                                             seed + 0x1000 * (k + 1));
        double ub = coverage_upper_bound(path);
        CoverageReport rep = covers(path, CoverageMode::sampled, n_samples,
                                    seed + k, workers);
        // Max-variance binomial band; the true fraction is somewhere in
        // [0, ub], so this is conservative for the soundness comparison.
        double sigma = std::sqrt(0.25 / static_cast<double>(n_samples));
        double margin_ub = 1.0 - ub;                       // certificate says: cannot cover
        double margin_frac = 1.0 - rep.fraction_visible;   // and sampling agrees
        double margin_sound = ub + 3.0 * sigma +
                              1.0 / static_cast<double>(n_samples) -
                              rep.fraction_visible;        // sampled <= certified bound
        v.worst_margin =
            std::min({v.worst_margin, margin_ub, margin_frac, margin_sound});
        if (margin_ub <= 0.0) ++v.violations;
        if (margin_frac <= 0.0) ++v.violations;
        if (margin_sound < 0.0) ++v.violations;
        if (rep.verdict) ++v.violations; // sampled mode must not claim coverage
        ++v.trials;
    }
    v.params["d"] = std::to_string(d);
    v.params["radius"] = fmt(radius);
    v.params["target_length"] = fmt(target_length);
    v.params["confined_bound"] = fmt(min_covering_length);
    v.params["n_samples"] = std::to_string(n_samples);
    return v;
}

LemmaVerdict merge_verdicts(const std::string& lemma_id,
                            const std::vector<LemmaVerdict>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge_verdicts: no parts");
    LemmaVerdict out;
    out.lemma_id = lemma_id;
    out.seed = parts.front().seed;
    out.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.trials += parts[i].trials;
        out.violations += parts[i].violations;
        out.skipped += parts[i].skipped;
        out.worst_margin = std::min(out.worst_margin, parts[i].worst_margin);
        for (const auto& [key, value] : parts[i].params) {
            out.params["part" + std::to_string(i) + "." + key] = value;
        }
    }
    return out;
}

Decomposition decompose_unit(const Polyline& path) {
    const double total = path.length();
    if (!(total > 0.0)) throw std::domain_error("decompose_unit: path has zero length");
    Decomposition dec;
    dec.piece_count = static_cast<std::size_t>(std::ceil(total));
    dec.midpoints.reserve(dec.piece_count);
    dec.piece_lengths.reserve(dec.piece_count);
    for (std::size_t i = 0; i < dec.piece_count; ++i) {
        double start = static_cast<double>(i);
        double end = std::min(total, start + 1.0);
        dec.midpoints.push_back(path.point_at(0.5 * (start + end)));
        dec.piece_lengths.push_back(end - start);
    }
    return dec;
}

double coverage_upper_bound(const Polyline& path) {
    Decomposition dec = decompose_unit(path);
    double sum = 0.0;
    for (const Vec& mid : dec.midpoints) {
        sum += visible_fraction_from_point(mid * 2.0);
    }
    return std::clamp(sum, 0.0, 1.0);
}

double confined_bound(std::size_t d, double r) {
    // The lemma's hypothesis has r >= 1, but the corollary evaluates the
    // formula at sqrt(d/(16 ln d)), which dips below 1 for d < ~72; the
    // expression itself is fine for any positive radius.
    if (!(r > 0.0)) throw std::domain_error("confined_bound: requires r > 0");
    return std::expm1(static_cast<double>(d) / (8.0 * r * r));
}

} // namespace cowpath
