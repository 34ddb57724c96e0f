#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cowpath/coverage.hpp"
#include "cowpath/lemmas.hpp"
#include "cowpath/strategies.hpp"

using namespace cowpath;

TEST_CASE("doubling_1d vertices and length") {
    Polyline p = doubling_1d(2);
    REQUIRE(p.vertices().size() == 4);
    CHECK(p.vertices()[0][0] == 0.0);
    CHECK(p.vertices()[1][0] == 1.0);
    CHECK(p.vertices()[2][0] == -2.0);
    CHECK(p.vertices()[3][0] == 4.0);
    CHECK(p.length() == doctest::Approx(10.0)); // 1 + 3 + 6
    CHECK_THROWS_AS(doubling_1d(0), std::invalid_argument);
}

TEST_CASE("doubling_1d prefixes cover the 1-d sphere once -2 is passed") {
    Polyline two({Vec{0.0}, Vec{1.0}});
    CHECK_FALSE(covers(two, CoverageMode::exact_low_d, 0, 0).verdict);
    Polyline three({Vec{0.0}, Vec{1.0}, Vec{-2.0}});
    CHECK(covers(three, CoverageMode::exact_low_d, 0, 0).verdict);
}

TEST_CASE("log spiral length matches the closed form") {
    const double b = 0.3;
    const double theta_max = std::log(50.0) / b; // end radius 50
    Polyline sp = log_spiral_2d(b, theta_max, 512);
    const double r_start = 0.01, r_end = 50.0;
    double expect = r_start + std::sqrt(1.0 + 1.0 / (b * b)) * (r_end - r_start);
    CHECK(sp.length() == doctest::Approx(expect).epsilon(1e-3));
    CHECK(sp.vertices()[0].norm() == 0.0);
}

TEST_CASE("log spiral covers the circle once wound past radius e^{2 pi b}") {
    const double b = 0.3;
    Polyline sp = log_spiral_2d(b, std::log(10.0) / b, 128);
    CoverageReport rep = covers(sp, CoverageMode::exact_low_d, 0, 0);
    CHECK(rep.verdict);
}

TEST_CASE("log spiral rejects bad parameters") {
    CHECK_THROWS_AS(log_spiral_2d(0.0, 10.0, 128), std::domain_error);
    CHECK_THROWS_AS(log_spiral_2d(0.3, 10.0, 32), std::domain_error);
    CHECK_THROWS_AS(log_spiral_2d(0.3, 0.5, 128), std::domain_error); // end radius < 2
}

TEST_CASE("cross polytope tour geometry") {
    Polyline t3 = cross_polytope_tour(3, std::sqrt(3.0));
    CHECK(t3.vertices().size() == 7);
    CHECK(t3.length() ==
          doctest::Approx(std::sqrt(3.0) + 5.0 * std::sqrt(6.0)).epsilon(1e-12));
    CHECK(t3.length() == doctest::Approx(13.9795).epsilon(1e-4));
    CHECK(covers(t3, CoverageMode::exact_low_d, 64, 0).verdict);

    Polyline t64 = cross_polytope_tour(64, 8.0);
    CHECK(t64.length() ==
          doctest::Approx(8.0 + 127.0 * 8.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(t64.length() <= 3.0 * std::pow(64.0, 1.5));

    // length / d^{3/2} tends to 2 sqrt 2 at the default scale sqrt(d).
    Polyline big = cross_polytope_tour(512);
    double ratio = big.length() / std::pow(512.0, 1.5);
    CHECK(std::abs(ratio - 2.0 * std::sqrt(2.0)) < 0.01);

    CHECK_THROWS_AS(cross_polytope_tour(1), std::invalid_argument);
}

TEST_CASE("cross polytope covers at sqrt(d), fails at 0.9 sqrt(d)") {
    for (std::size_t d : {2, 3, 8, 32}) {
        Polyline full = cross_polytope_tour(d);
        CHECK(covers(full, CoverageMode::sampled, 20000, 13).verdict);
        Polyline small = cross_polytope_tour(d, 0.9 * std::sqrt(static_cast<double>(d)));
        // The all-ones direction is the witness at any dimension.
        Direction ones(Vec(std::vector<double>(d, 1.0)));
        CHECK(support_margin(small, ones) == doctest::Approx(-0.1).epsilon(1e-9));
        if (d <= 3) {
            CHECK_FALSE(covers(small, CoverageMode::exact_low_d, 0, 0).verdict);
        }
    }
}

TEST_CASE("confined random paths stay inside and hit the target length") {
    Polyline p = confined_random_path(64, 2.0, 6.0, 6, 42);
    CHECK(p.length() == doctest::Approx(6.0).epsilon(1e-9));
    for (int k = 0; k <= 500; ++k) {
        Vec pt = p.point_at(p.length() * k / 500.0);
        CHECK(pt.norm() <= 2.0 + 1e-9);
    }
    // Reflection forces the walk against the boundary: radius below the
    // step size means bounces must occur and still preserve length.
    Polyline tight = confined_random_path(3, 0.5, 4.0, 4, 7);
    CHECK(tight.length() == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(tight.max_vertex_norm() <= 0.5 + 1e-9);
}

TEST_CASE("confined random paths are deterministic in their parameters") {
    Polyline a = confined_random_path(8, 2.0, 5.0, 10, 1001);
    Polyline b = confined_random_path(8, 2.0, 5.0, 10, 1001);
    REQUIRE(a.vertices().size() == b.vertices().size());
    for (std::size_t i = 0; i < a.vertices().size(); ++i) {
        CHECK(a.vertices()[i] == b.vertices()[i]);
    }
    Polyline c = confined_random_path(8, 2.0, 5.0, 10, 1002);
    CHECK_FALSE(a.vertices()[1] == c.vertices()[1]);
}

TEST_CASE("confined random path in the lemma-4 regime cannot cover") {
    Polyline p = confined_random_path(64, 2.0, 6.0, 6, 123);
    CHECK(coverage_upper_bound(p) < 1.0);
    CoverageReport rep = covers(p, CoverageMode::sampled, 10000, 3);
    CHECK(rep.fraction_visible < 1.0);
    CHECK(confined_bound(64, 2.0) > 6.0); // e^2 - 1 ~ 6.389
}

TEST_CASE("infeasible confined geometry is rejected") {
    CHECK_THROWS_AS(confined_random_path(4, 0.0, 1.0, 4, 0), std::domain_error);
    CHECK_THROWS_AS(confined_random_path(4, 1.0, 1.0, 0, 0), std::invalid_argument);
}
