#include "cowpath/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "cowpath/parallel.hpp"
#include "cowpath/rng.hpp"

namespace cowpath {

namespace {

constexpr double kMarginTol = 1e-9; // predicate-boundary tolerance

double support_of(const std::vector<Vec>& verts, const Vec& q) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& v : verts) best = std::max(best, dot(v, q));
    return best;
}

// First time the running maximum of <P(s), q> reaches a level: a monotone
// piecewise-linear record list built in one pass over the segments.
class HitProfile {
public:
    HitProfile(const Polyline& path, const Vec& q) {
        const auto& verts = path.vertices();
        const auto& cum = path.cum_length();
        s_.push_back(0.0);
        g_.push_back(dot(verts[0], q)); // 0 at the origin
        double cur = g_.back();
        for (std::size_t i = 1; i < verts.size(); ++i) {
            double ga = dot(verts[i - 1], q);
            double gb = dot(verts[i], q);
            if (gb > cur) {
                double sa = cum[i - 1], sb = cum[i];
                double start = sa;
                if (ga < cur && gb > ga) start = sa + (cur - ga) / (gb - ga) * (sb - sa);
                s_.push_back(start);
                g_.push_back(cur);
                s_.push_back(sb);
                g_.push_back(gb);
                cur = gb;
            }
        }
    }

    double support() const { return g_.back(); }

    // Smallest s with <P(s), q> = level; level must be <= support().
    double first_hit(double level) const {
        if (level <= g_.front()) return 0.0;
        auto it = std::lower_bound(g_.begin(), g_.end(), level);
        std::size_t k = static_cast<std::size_t>(it - g_.begin());
        if (k >= g_.size()) return s_.back();
        if (g_[k] == g_[k - 1]) return s_[k];
        double t = (level - g_[k - 1]) / (g_[k] - g_[k - 1]);
        return s_[k - 1] + t * (s_[k] - s_[k - 1]);
    }

private:
    std::vector<double> s_;
    std::vector<double> g_;
};

CoverageReport covers_sampled(const Polyline& path, std::size_t n_samples,
                              std::uint64_t seed, unsigned workers) {
    if (n_samples < 1) throw std::invalid_argument("covers: n_samples must be >= 1");
    const std::size_t d = path.dim();
    const auto& verts = path.vertices();

    struct Chunk {
        std::size_t begin;
        std::int64_t covered = 0;
        double min_margin = std::numeric_limits<double>::infinity();
        std::vector<std::pair<std::size_t, Vec>> uncovered; // (index, direction)
    };
    std::vector<Chunk> chunks;
    std::mutex chunks_mutex;

    parallel_for(n_samples, workers, [&](std::size_t begin, std::size_t end) {
        Chunk c;
        c.begin = begin;
        for (std::size_t i = begin; i < end; ++i) {
            CounterRng rng(seed, i);
            Vec q = rng.unit_vector(d);
            double margin = support_of(verts, q) - 1.0;
            c.min_margin = std::min(c.min_margin, margin);
            if (margin >= -kMarginTol) {
                ++c.covered;
            } else if (c.uncovered.size() < 16) {
                c.uncovered.emplace_back(i, q);
            }
        }
        std::lock_guard<std::mutex> lock(chunks_mutex);
        chunks.push_back(std::move(c));
    });
    std::sort(chunks.begin(), chunks.end(),
              [](const Chunk& a, const Chunk& b) { return a.begin < b.begin; });

    CoverageReport rep;
    rep.mode = CoverageMode::sampled;
    rep.n_samples = static_cast<std::int64_t>(n_samples);
    rep.seed = seed;
    std::int64_t covered = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const Chunk& c : chunks) {
        covered += c.covered;
        min_margin = std::min(min_margin, c.min_margin);
        for (const auto& [idx, q] : c.uncovered) {
            if (rep.uncovered_witnesses.size() < 16) {
                rep.uncovered_witnesses.push_back(Direction::from_unit(q));
            }
        }
    }
    rep.fraction_visible = static_cast<double>(covered) / static_cast<double>(n_samples);
    rep.min_support_margin = min_margin;
    rep.verdict = covered == rep.n_samples;
    if (rep.verdict) rep.uncovered_witnesses.clear();
    return rep;
}

CoverageReport covers_exact_1d(const Polyline& path) {
    CoverageReport rep;
    rep.mode = CoverageMode::exact_low_d;
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const Vec& v : path.vertices()) {
        hi = std::max(hi, v[0]);
        lo = std::min(lo, v[0]);
    }
    double margin_pos = hi - 1.0;
    double margin_neg = -lo - 1.0;
    rep.min_support_margin = std::min(margin_pos, margin_neg);
    int covered = 0;
    if (margin_pos >= -kMarginTol) ++covered;
    else rep.uncovered_witnesses.push_back(Direction::axis(1, 0, +1.0));
    if (margin_neg >= -kMarginTol) ++covered;
    else rep.uncovered_witnesses.push_back(Direction::axis(1, 0, -1.0));
    rep.fraction_visible = covered / 2.0;
    rep.verdict = covered == 2;
    return rep;
}

// d=2: each vertex v with |v| >= 1 views the closed circular arc of
// half-width arccos(1/|v|) centered on its own angle. The path covers the
// circle iff the union of these arcs does.
CoverageReport covers_exact_2d(const Polyline& path) {
    constexpr double kAngleTol = 1e-9;
    const double two_pi = 2.0 * std::numbers::pi;
    struct Arc {
        double start, end;
    };
    std::vector<Arc> arcs;
    for (const Vec& v : path.vertices()) {
        double n = v.norm();
        if (n < 1.0) continue;
        double w = std::acos(std::min(1.0, 1.0 / n));
        double theta = std::atan2(v[1], v[0]);
        if (theta < 0) theta += two_pi;
        arcs.push_back({theta - w, theta + w});
    }

    CoverageReport rep;
    rep.mode = CoverageMode::exact_low_d;
    std::vector<std::pair<double, double>> gaps;
    if (arcs.empty()) {
        gaps.emplace_back(0.0, two_pi);
    } else {
        std::sort(arcs.begin(), arcs.end(),
                  [](const Arc& a, const Arc& b) { return a.start < b.start; });
        double anchor = arcs[0].start;
        double reach = arcs[0].end;
        for (std::size_t i = 1; i < arcs.size(); ++i) {
            if (arcs[i].start > reach + kAngleTol) {
                gaps.emplace_back(reach, arcs[i].start);
            }
            reach = std::max(reach, arcs[i].end);
        }
        // Wrap-around: the chain must come back to the anchor one full turn on.
        if (reach < anchor + two_pi - kAngleTol) {
            gaps.emplace_back(reach, anchor + two_pi);
        }
    }

    double gap_measure = 0.0;
    for (const auto& [a, b] : gaps) gap_measure += b - a;
    gap_measure = std::min(gap_measure, two_pi);
    rep.fraction_visible = 1.0 - gap_measure / two_pi;
    rep.verdict = gaps.empty();

    const auto& verts = path.vertices();
    auto margin_at = [&](double theta) {
        Vec q{std::cos(theta), std::sin(theta)};
        return support_of(verts, q) - 1.0;
    };
    double min_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4096; ++k) {
        min_margin = std::min(min_margin, margin_at(two_pi * k / 4096.0));
    }
    for (const auto& [a, b] : gaps) {
        double mid = 0.5 * (a + b);
        min_margin = std::min(min_margin, margin_at(mid));
        if (rep.uncovered_witnesses.size() < 16) {
            rep.uncovered_witnesses.push_back(
                Direction::from_unit(Vec{std::cos(mid), std::sin(mid)}));
        }
    }
    rep.min_support_margin = min_margin;
    return rep;
}

// d=3: the hull of the vertices contains the unit ball iff every supporting
// plane has distance >= 1 from the origin, and the minimum over supporting
// planes spanned by vertex triples equals the minimum facet distance.
CoverageReport covers_exact_3d(const Polyline& path, std::size_t n_samples,
                               std::uint64_t seed, unsigned workers) {
    const auto& verts = path.vertices();
    const std::size_t n = verts.size();
    const double scale = std::max(1.0, path.max_vertex_norm());
    const double tol = 1e-9 * scale;

    CoverageReport rep;
    rep.mode = CoverageMode::exact_low_d;
    double min_margin = std::numeric_limits<double>::infinity();
    bool any_plane = false;

    auto consider = [&](const Vec& normal_unit) {
        double hi = -std::numeric_limits<double>::infinity();
        for (const Vec& v : verts) hi = std::max(hi, dot(v, normal_unit));
        double margin = hi - 1.0;
        if (margin < min_margin) min_margin = margin;
        if (margin < -kMarginTol && rep.uncovered_witnesses.size() < 16) {
            bool dup = false;
            for (const Direction& w : rep.uncovered_witnesses) {
                if (dot(w.vec(), normal_unit) > 1.0 - 1e-6) dup = true;
            }
            if (!dup) rep.uncovered_witnesses.push_back(Direction::from_unit(normal_unit));
        }
    };

    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            Vec e1 = verts[j] - verts[i];
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec e2 = verts[k] - verts[i];
                Vec cr{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                       e1[0] * e2[1] - e1[1] * e2[0]};
                double cn = cr.norm();
                if (cn <= 1e-12 * scale * scale) continue; // collinear triple
                Vec nu = cr * (1.0 / cn);
                double h = dot(nu, verts[i]);
                double hi = -std::numeric_limits<double>::infinity();
                double lo = std::numeric_limits<double>::infinity();
                for (const Vec& v : verts) {
                    double g = dot(v, nu);
                    hi = std::max(hi, g);
                    lo = std::min(lo, g);
                }
                if (hi <= h + tol) {
                    any_plane = true;
                    consider(nu);
                }
                if (lo >= h - tol) {
                    any_plane = true;
                    consider(nu * -1.0);
                }
            }
        }
    }

    if (!any_plane) {
        // Fewer than three affinely independent vertices: the hull is flat
        // and cannot contain the ball. Witness any unit normal of the span.
        Vec base(3);
        for (const Vec& v : verts) {
            if (v.norm() > tol) { base = v; break; }
        }
        Vec w{ -base[1], base[0], 0.0 };
        if (w.norm() <= tol) w = Vec{0.0, 1.0, 0.0};
        Direction q = base.norm() > tol ? Direction(w) : Direction(Vec{1.0, 0.0, 0.0});
        min_margin = support_of(verts, q.vec()) - 1.0;
        rep.uncovered_witnesses.push_back(q);
    }

    rep.min_support_margin = min_margin;
    rep.verdict = min_margin >= -kMarginTol;
    if (rep.verdict) rep.uncovered_witnesses.clear();

    // Verdict and margin are exact; the visible fraction is still estimated
    // by sampling, since the exact union-of-caps measure is not needed.
    if (n_samples >= 1) {
        CoverageReport s = covers_sampled(path, n_samples, seed, workers);
        rep.fraction_visible = s.fraction_visible;
        rep.n_samples = s.n_samples;
        rep.seed = seed;
    } else {
        rep.fraction_visible = rep.verdict ? 1.0 : 0.0;
    }
    return rep;
}

} // namespace

std::vector<Direction> sample_directions(std::size_t d, std::size_t n,
                                         std::uint64_t seed) {
    if (d < 1 || n < 1) throw std::invalid_argument("sample_directions: d and n must be >= 1");
    std::vector<Direction> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, i);
        out.push_back(Direction::from_unit(rng.unit_vector(d)));
    }
    return out;
}

double cap_bound(std::size_t d, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("cap_bound: epsilon must be in [0,1]");
    }
    return std::exp(-0.5 * static_cast<double>(d) * epsilon * epsilon);
}

double cap_fraction_exact(std::size_t d, double epsilon) {
    if (d < 2) throw std::domain_error("cap_fraction_exact: requires d >= 2");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("cap_fraction_exact: epsilon must be in [0,1]");
    }
    if (epsilon == 0.0) return 0.5;
    if (epsilon == 1.0) return 0.0;
    const double a = 0.5 * (static_cast<double>(d) - 1.0);
    const double x = 1.0 - epsilon * epsilon;
    return 0.5 * boost::math::ibeta(a, 0.5, x);
}

double visible_fraction_from_point(const Vec& p) {
    double n = p.norm();
    if (n <= 1.0) return 0.0;
    return cap_fraction_exact(p.dim(), 1.0 / n);
}

double support_margin(const Polyline& path, const Direction& q) {
    if (path.dim() != q.dim()) throw std::invalid_argument("support_margin: dimension mismatch");
    return support_of(path.vertices(), q.vec()) - 1.0;
}

CoverageReport covers(const Polyline& path, CoverageMode mode,
                      std::size_t n_samples, std::uint64_t seed, unsigned workers) {
    if (mode == CoverageMode::sampled) {
        return covers_sampled(path, n_samples, seed, workers);
    }
    switch (path.dim()) {
        case 1: return covers_exact_1d(path);
        case 2: return covers_exact_2d(path);
        case 3: return covers_exact_3d(path, n_samples, seed, workers);
        default:
            throw std::invalid_argument("covers: exact mode supports dimension <= 3 only");
    }
}

std::optional<double> hyperplane_ratio(const Polyline& path, const Hyperplane& h) {
    auto s = first_hit(path, h);
    if (!s) return std::nullopt;
    return *s / h.offset;
}

RatioReport worst_case_ratio(const Polyline& path, const RatioOptions& opt) {
    if (opt.n_directions < 1 || opt.offsets_per_direction < 1) {
        throw std::invalid_argument("worst_case_ratio: grid must be nonempty");
    }
    const std::size_t d = path.dim();
    const double r_ceiling = std::max(1.0, opt.r_max.value_or(path.max_vertex_norm()));

    struct DirResult {
        bool unseen = false;     // direction not viewed: dual hyperplane unreached
        double best_ratio = -1.0;
        double best_r = 1.0;
        Vec q;
    };
    std::vector<DirResult> results(opt.n_directions);

    parallel_for(opt.n_directions, opt.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            CounterRng rng(opt.seed, i);
            DirResult& res = results[i];
            res.q = rng.unit_vector(d);
            HitProfile profile(path, res.q);
            double support = profile.support();
            if (support < 1.0 - kMarginTol) {
                res.unseen = true;
                continue;
            }
            double cap = std::max(1.0, std::min(r_ceiling, support));
            double log_cap = std::log(cap);
            auto eval = [&](double r) {
                r = std::clamp(r, 1.0, cap);
                double ratio = profile.first_hit(r) / r;
                if (ratio > res.best_ratio) {
                    res.best_ratio = ratio;
                    res.best_r = r;
                }
            };
            eval(1.0);
            eval(cap);
            for (std::size_t k = 0; k < opt.offsets_per_direction; ++k) {
                eval(std::exp(rng.uniform01() * log_cap));
            }
            // Local refinement: shrink a log-space bracket around the best
            // offset seen so far.
            double delta = log_cap / static_cast<double>(opt.offsets_per_direction + 1);
            for (int round = 0; round < opt.refine_rounds; ++round) {
                double center = std::log(res.best_r);
                for (int k = -8; k <= 8; ++k) {
                    eval(std::exp(center + delta * k / 8.0));
                }
                delta /= 8.0;
            }
        }
    });

    RatioReport rep;
    rep.seed = opt.seed;
    {
        std::ostringstream os;
        os << opt.n_directions << " directions x (" << opt.offsets_per_direction
           << " log-uniform offsets in [1, min(r_max, support)] + endpoints), "
           << opt.refine_rounds << " refine rounds, r_max=" << r_ceiling;
        rep.grid = os.str();
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].unseen) {
            rep.unbounded = true;
            rep.sup_ratio = std::numeric_limits<double>::infinity();
            rep.argmax_hyperplane = Hyperplane(Direction::from_unit(results[i].q), 1.0);
            return rep;
        }
    }
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].best_ratio > results[best_i].best_ratio) best_i = i;
    }
    rep.sup_ratio = results[best_i].best_ratio;
    rep.argmax_hyperplane =
        Hyperplane(Direction::from_unit(results[best_i].q), results[best_i].best_r);
    return rep;
}

} // namespace cowpath
