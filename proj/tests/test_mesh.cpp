#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wplap/io.hpp"
#include "wplap/mesh.hpp"
#include "wplap/weights.hpp"

using namespace wplap;

TEST_CASE("build_mesh node placement") {
    const auto uniform = build_mesh(0.0, 1.0, 4, 1.0, Metric::Interval);
    CHECK(uniform.nodes() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

    const auto graded = build_mesh(0.0, 1.0, 4, 2.0, Metric::Interval);
    CHECK(graded.nodes() == std::vector<double>{0.0, 0.0625, 0.25, 0.5625, 1.0});

    const auto radial = build_mesh(0.0, 1.0, 512, 3.0, Metric::Radial, 4);
    CHECK(radial.h(0) == doctest::Approx(std::pow(1.0 / 512.0, 3.0)).epsilon(1e-14));

    CHECK_THROWS_AS(build_mesh(0.0, 1.0, 1, 1.0, Metric::Interval), std::invalid_argument);
    CHECK_THROWS_AS(build_mesh(1.0, 0.0, 8, 1.0, Metric::Interval), std::invalid_argument);
    CHECK_THROWS_AS(build_mesh(0.0, 1.0, 8, 0.5, Metric::Interval), std::invalid_argument);
    CHECK_THROWS_AS(build_mesh(-1.0, 1.0, 8, 1.0, Metric::Radial, 3), std::invalid_argument);
}

TEST_CASE("Dirichlet flags follow the metric") {
    const auto interval = build_mesh(0.0, 1.0, 8, 1.0, Metric::Interval);
    CHECK(interval.dirichlet(0));
    CHECK(interval.dirichlet(8));
    CHECK(!interval.dirichlet(4));

    // ball: natural symmetry condition at the origin
    const auto ball = build_mesh(0.0, 1.0, 8, 1.0, Metric::Radial, 4);
    CHECK(!ball.dirichlet(0));
    CHECK(ball.dirichlet(8));

    // annulus: both boundaries are real
    const auto annulus = build_mesh(0.5, 1.0, 8, 1.0, Metric::Radial, 4);
    CHECK(annulus.dirichlet(0));
}

TEST_CASE("gradient of piecewise-linear fields") {
    const auto mesh = build_mesh(0.0, 1.0, 4, 1.0, Metric::Interval);

    Field constant;
    constant.values.assign(5, 7.0);  // no pinning on purpose
    for (double g : gradient(constant, mesh)) CHECK(g == 0.0);

    Field identity;
    identity.values = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (double g : gradient(identity, mesh)) CHECK(g == doctest::Approx(1.0));

    Field squares;
    squares.values = {0.0, 0.0625, 0.25, 0.5625, 1.0};
    const auto g = gradient(squares, mesh);
    CHECK(g[0] == doctest::Approx(0.25));
    CHECK(g[1] == doctest::Approx(0.75));
    CHECK(g[2] == doctest::Approx(1.25));
    CHECK(g[3] == doctest::Approx(1.75));

    Field wrong;
    wrong.values.assign(3, 0.0);
    CHECK_THROWS_AS(gradient(wrong, mesh), std::invalid_argument);
}

namespace {
Field affine_field(const Mesh1D& mesh, double slope, double offset) {
    Field u;
    u.values.resize(mesh.node_count());
    for (std::size_t i = 0; i < mesh.node_count(); ++i)
        u.values[i] = slope * mesh.node(i) + offset;
    return u;
}
}  // namespace

TEST_CASE("gradient of affine functions is exactly constant") {
    const auto mesh = build_mesh(-0.3, 1.7, 37, 2.5, Metric::Interval);
    const auto u = affine_field(mesh, -2.5, 0.7);
    for (double g : gradient(u, mesh)) CHECK(g == doctest::Approx(-2.5).epsilon(1e-13));
}

TEST_CASE("midpoint quadrature against closed forms") {
    const auto one = WeightSpec::constant(1.0);

    SUBCASE("partition of unity is exact on the interval") {
        const auto mesh = build_mesh(0.0, 1.0, 64, 1.0, Metric::Interval);
        std::vector<double> g(mesh.element_count(), 1.0);
        CHECK(integrate(g, one, mesh) == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("radial volume of the unit 4-ball section") {
        const auto mesh = build_mesh(0.0, 1.0, 512, 1.0, Metric::Radial, 4);
        std::vector<double> g(mesh.element_count(), 1.0);
        CHECK(integrate(g, one, mesh) == doctest::Approx(0.25).epsilon(1e-5));
    }

    SUBCASE("truncated singular weight against the metric") {
        // integrand min(r^-3, 1e6) r^3; the truncation bites below r = 1e-2,
        // so the exact value is 1e6 * (1e-2)^4/4 + (1 - 1e-2) = 0.9925.
        const auto mesh = build_mesh(0.0, 1.0, 512, 2.0, Metric::Radial, 4);
        const auto w = truncate_weight(WeightSpec::power_radial(-3.0), 1e6);
        std::vector<double> g(mesh.element_count(), 1.0);
        const double exact_truncated = 1e6 * std::pow(1e-2, 4.0) / 4.0 + (1.0 - 1e-2);
        const double quad = integrate(g, w, mesh);
        CHECK(quad == doctest::Approx(exact_truncated).epsilon(1e-3));
        // the truncation perturbs the untruncated value 1 by under 1%
        CHECK(quad == doctest::Approx(1.0).epsilon(1e-2));
    }
}

TEST_CASE("nodal quadrature of interpolated integrands") {
    const auto one = WeightSpec::constant(1.0);

    SUBCASE("unit data on the interval") {
        const auto mesh = build_mesh(0.0, 1.0, 64, 1.0, Metric::Interval);
        std::vector<double> g(mesh.node_count(), 1.0);
        CHECK(nodal_integrate(g, one, mesh) == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("unit data against the 4-ball metric") {
        const auto mesh = build_mesh(0.0, 1.0, 512, 1.0, Metric::Radial, 4);
        std::vector<double> g(mesh.node_count(), 1.0);
        CHECK(nodal_integrate(g, one, mesh) == doctest::Approx(0.25).epsilon(1e-5));
    }

    SUBCASE("cubic nodal data, uniform interval mesh") {
        const auto mesh = build_mesh(0.0, 1.0, 512, 1.0, Metric::Interval);
        std::vector<double> g(mesh.node_count());
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::pow(mesh.node(i), 3.0);
        CHECK(nodal_integrate(g, one, mesh) == doctest::Approx(0.25).epsilon(1e-4));
    }

    SUBCASE("length mismatch is an error") {
        const auto mesh = build_mesh(0.0, 1.0, 8, 1.0, Metric::Interval);
        std::vector<double> g(3, 1.0);
        CHECK_THROWS_AS(nodal_integrate(g, one, mesh), std::invalid_argument);
        CHECK_THROWS_AS(integrate(g, one, mesh), std::invalid_argument);
    }
}

TEST_CASE("integrate is linear in the integrand and monotone in the weight") {
    const auto mesh = build_mesh(0.0, 1.0, 128, 2.0, Metric::Radial, 4);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> g1(mesh.element_count()), g2(mesh.element_count());
    for (auto& v : g1) v = dist(rng);
    for (auto& v : g2) v = dist(rng);

    const auto w = WeightSpec::power_radial(-1.0);
    std::vector<double> combo(mesh.element_count());
    for (std::size_t e = 0; e < combo.size(); ++e) combo[e] = 2.0 * g1[e] + 3.0 * g2[e];
    CHECK(integrate(combo, w, mesh) ==
          doctest::Approx(2.0 * integrate(g1, w, mesh) + 3.0 * integrate(g2, w, mesh)));

    const auto w_small = truncate_weight(w, 10.0);
    const auto w_large = truncate_weight(w, 100.0);
    CHECK(integrate(g1, w_small, mesh) <= integrate(g1, w_large, mesh));
    CHECK(integrate(g1, w_large, mesh) <= integrate(g1, w, mesh));
}

TEST_CASE("midpoint rule converges at second order on three closed-form integrals") {
    struct Case {
        WeightSpec w;
        Metric metric;
        int dim;
        double exact;
    };
    const Case cases[] = {
        {WeightSpec::power_radial(2.0), Metric::Interval, 1, 1.0 / 3.0},
        {WeightSpec::distance_boundary(3.0, 0.0, 1.0), Metric::Interval, 1, 1.0 / 32.0},
        {WeightSpec::power_radial(1.5), Metric::Radial, 3, 2.0 / 9.0},
    };
    for (const auto& c : cases) {
        double err_coarse = 0.0, err_fine = 0.0;
        for (std::size_t n : {64, 128}) {
            const auto mesh = build_mesh(0.0, 1.0, n, 1.0, c.metric, c.dim);
            std::vector<double> g(mesh.element_count(), 1.0);
            const double err = std::abs(integrate(g, c.w, mesh) - c.exact);
            (n == 64 ? err_coarse : err_fine) = err;
        }
        // doubling n divides the midpoint error by about 4
        CHECK(err_coarse / err_fine == doctest::Approx(4.0).epsilon(0.3));
    }
}

TEST_CASE("field construction, pinning, and validation") {
    const auto mesh = build_mesh(0.0, 1.0, 8, 1.0, Metric::Interval);
    auto u = make_field(mesh, [](double x) { return x * (1.0 - x) + 1.0; });
    CHECK(u.values.front() == 0.0);  // pinned in spite of f(0) = 1
    CHECK(u.values.back() == 0.0);
    CHECK_NOTHROW(validate_field(u, mesh));

    u.values[0] = 0.5;
    CHECK_THROWS_AS(validate_field(u, mesh), std::invalid_argument);
    pin_dirichlet(u, mesh);
    CHECK_NOTHROW(validate_field(u, mesh));

    u.values[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_field(u, mesh), std::invalid_argument);

    const auto bump = bump_field(mesh, 2.0);
    CHECK(bump.values[4] == doctest::Approx(2.0));
    CHECK(bump.values.front() == 0.0);

    const auto ball = build_mesh(0.0, 1.0, 8, 1.0, Metric::Radial, 4);
    const auto radial_bump = bump_field(ball);
    CHECK(radial_bump.values.front() == doctest::Approx(1.0));  // free at the origin
    CHECK(radial_bump.values.back() == 0.0);
}

TEST_CASE("mesh serializes to JSON with its construction parameters") {
    const auto mesh = build_mesh(0.0, 2.0, 16, 2.0, Metric::Radial, 4);
    const auto j = mesh_to_json(mesh);
    CHECK(j.at("a").get<double>() == 0.0);
    CHECK(j.at("b").get<double>() == 2.0);
    CHECK(j.at("n").get<std::size_t>() == 16);
    CHECK(j.at("grading").get<double>() == 2.0);
    CHECK(j.at("metric").get<std::string>() == "radial");
    CHECK(j.at("N").get<int>() == 4);
}
