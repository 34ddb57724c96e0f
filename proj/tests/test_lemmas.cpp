#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "cowpath/coverage.hpp"
#include "cowpath/geometry.hpp"
#include "cowpath/lemmas.hpp"
#include "cowpath/report_json.hpp"
#include "cowpath/rng.hpp"
#include "cowpath/strategies.hpp"

using namespace cowpath;

namespace {

std::vector<double> eps_grid_21() {
    std::vector<double> g;
    for (int k = 0; k <= 20; ++k) g.push_back(k / 20.0);
    return g;
}

} // namespace

TEST_CASE("sphere_axis_cos matches the exact cap measure") {
    // The marginal sampler feeds the ball-containment rejection loop; its
    // acceptance probability must be the cap fraction itself.
    struct Case { std::size_t d; double eps; };
    for (Case c : {Case{2, 0.3}, Case{3, 0.5}, Case{8, 0.5}, Case{32, 0.2}}) {
        const std::size_t n = 200000;
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            CounterRng rng(17, i);
            if (rng.sphere_axis_cos(c.d) >= c.eps) ++hits;
        }
        double emp = static_cast<double>(hits) / n;
        double exact = cap_fraction_exact(c.d, c.eps);
        double sigma = std::sqrt(exact * (1.0 - exact) / n);
        CHECK(std::abs(emp - exact) <= 3.0 * sigma + 1e-6);
    }
}

TEST_CASE("cap lemma holds with zero violations on the full grid") {
    std::vector<std::size_t> dims;
    for (std::size_t d = 2; d <= 64; ++d) dims.push_back(d);
    LemmaVerdict v = check_cap_bound(dims, eps_grid_21());
    CHECK(v.violations == 0);
    CHECK(v.worst_margin >= 0.0);
    CHECK(v.trials == static_cast<std::int64_t>(dims.size() * 21));
    // Hemisphere case: bound 1 vs exact 1/2.
    CHECK(cap_bound(2, 0.0) - cap_fraction_exact(2, 0.0) == doctest::Approx(0.5));
    // Far tail: the bound is tiny but still above the exact measure.
    CHECK(cap_bound(64, 0.5) == doctest::Approx(std::exp(-8.0)));
    CHECK(cap_fraction_exact(64, 0.5) < cap_bound(64, 0.5));
}

TEST_CASE("point visibility lemma: exact and sampled stay under the bound") {
    LemmaVerdict v = check_point_visibility(3, {1.0, 2.0}, 20000, 4);
    CHECK(v.violations == 0);
    CHECK(v.worst_margin >= 0.0);
    CHECK(visible_fraction_from_point(Vec{2.0, 0.0, 0.0}) <= std::exp(-3.0 / 8.0));
    for (std::size_t d : {2, 5, 13}) {
        CHECK(visible_fraction_from_point(Vec::axis(d, 0, 1.0)) == 0.0);
    }
    LemmaVerdict v32 = check_point_visibility(32, {1.0, 2.0, 4.0, 8.0}, 20000, 4);
    CHECK(v32.violations == 0);
    CHECK_THROWS_AS(check_point_visibility(3, {0.5}, 100, 0), std::invalid_argument);
}

TEST_CASE("ball containment: collinear and boundary-equality probes") {
    Vec p{1.0, 0.0};
    Vec r = p * 1.5; // w = 0.5 e1
    Direction q = Direction::axis(2, 0);
    CHECK(sees(r, q));
    CHECK(sees(p * 2.0, q));

    // <q, p> = 1/2 exactly: the chain gives <2p, q> = 1, visible by the
    // non-strict convention.
    Vec q_boundary{0.5, std::sqrt(3.0) / 2.0};
    CHECK(dot(p * 2.0, q_boundary) == 1.0);
    CHECK(sees(p * 2.0, Direction::from_unit(q_boundary)));
}

TEST_CASE("ball containment: sampled trials find zero violations") {
    for (std::size_t d : {2, 3, 8}) {
        LemmaVerdict v = check_ball_containment(d, 20000, 21);
        CHECK(v.violations == 0);
        CHECK(v.worst_margin >= 0.0);
        CHECK(v.skipped < v.trials);
    }
    LemmaVerdict v32 = check_ball_containment(32, 2000, 21);
    CHECK(v32.violations == 0);
}

TEST_CASE("ball containment verdict is identical across worker counts") {
    nlohmann::json a = check_ball_containment(8, 5000, 3, 1);
    nlohmann::json b = check_ball_containment(8, 5000, 3, 4);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("decompose_unit splits at integer arc lengths") {
    Polyline straight({Vec{0.0, 0.0}, Vec{3.0, 0.0}});
    Decomposition dec = decompose_unit(straight);
    CHECK(dec.piece_count == 3);
    REQUIRE(dec.midpoints.size() == 3);
    CHECK(dec.midpoints[0][0] == doctest::Approx(0.5));
    CHECK(dec.midpoints[1][0] == doctest::Approx(1.5));
    CHECK(dec.midpoints[2][0] == doctest::Approx(2.5));

    Polyline odd({Vec{0.0}, Vec{2.5}});
    Decomposition dec2 = decompose_unit(odd);
    CHECK(dec2.piece_count == 3);
    CHECK(dec2.piece_lengths == std::vector<double>{1.0, 1.0, 0.5});
    double sum = 0.0;
    for (double len : dec2.piece_lengths) sum += len;
    CHECK(sum == doctest::Approx(odd.length()).epsilon(1e-9));

    CHECK_THROWS_AS(decompose_unit(Polyline({Vec{0.0}})), std::domain_error);
}

TEST_CASE("every decomposition piece sits in the half ball around its midpoint") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Polyline path = confined_random_path(8, 3.0, 5.5, 7, 400 + trial);
        Decomposition dec = decompose_unit(path);
        double worst = 0.0;
        for (std::size_t i = 0; i < dec.piece_count; ++i) {
            double start = static_cast<double>(i);
            double end = std::min(path.length(), start + 1.0);
            for (int k = 0; k <= 100; ++k) {
                Vec pt = path.point_at(start + (end - start) * k / 100.0);
                worst = std::max(worst, distance(pt, dec.midpoints[i]));
            }
        }
        CHECK(worst <= 0.5 + 1e-9);
    }
}

TEST_CASE("coverage_upper_bound certifies non-coverage for confined paths") {
    // Single unit piece with midpoint at 0.5 e1: |2p| = 1, degenerate cap.
    Polyline unit_ray({Vec::zero(32), Vec::axis(32, 0, 1.0)});
    CHECK(coverage_upper_bound(unit_ray) == 0.0);

    Polyline confined = confined_random_path(64, 2.0, 6.0, 6, 99);
    double ub = coverage_upper_bound(confined);
    CHECK(ub < 0.95); // at most 7 e^{-2}
    CoverageReport rep = covers(confined, CoverageMode::sampled, 20000, 1);
    CHECK(rep.fraction_visible < 1.0);
    CHECK_FALSE(rep.verdict); // soundness: bound < 1 forces a non-cover verdict
}

TEST_CASE("confined_bound values and corollary identity") {
    CHECK(confined_bound(64, 2.0) == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));
    CHECK(confined_bound(8, 1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    for (std::size_t d = 4; d <= 128; ++d) {
        double r = std::sqrt(static_cast<double>(d) /
                             (16.0 * std::log(static_cast<double>(d))));
        double expect = static_cast<double>(d) * static_cast<double>(d) - 1.0;
        CHECK(confined_bound(d, r) == doctest::Approx(expect).epsilon(1e-12));
    }
    // The formula extends below r = 1 (the corollary needs it there).
    CHECK(confined_bound(8, 0.5) == doctest::Approx(std::exp(4.0) - 1.0));
    CHECK_THROWS_AS(confined_bound(8, 0.0), std::domain_error);
    CHECK_THROWS_AS(confined_bound(8, -1.0), std::domain_error);
}

TEST_CASE("confined-path suite passes on the lemma-4 regime") {
    LemmaVerdict v = check_confined_path(64, 2.0, 6.0, 5, 20000, 31);
    CHECK(v.violations == 0);
    CHECK(v.worst_margin > 0.0);
    CHECK(v.trials == 5);
    // Asking for a length at or past the confined bound is a usage error:
    // the contrapositive no longer applies there.
    CHECK_THROWS_AS(check_confined_path(64, 2.0, 7.0, 1, 100, 0), std::invalid_argument);
}

TEST_CASE("merge_verdicts accumulates counts and keeps the worst margin") {
    LemmaVerdict a = check_ball_containment(2, 500, 1);
    LemmaVerdict b = check_ball_containment(3, 500, 1);
    LemmaVerdict m = merge_verdicts("ball-containment", {a, b});
    CHECK(m.trials == 1000);
    CHECK(m.violations == a.violations + b.violations);
    CHECK(m.worst_margin == std::min(a.worst_margin, b.worst_margin));
}
