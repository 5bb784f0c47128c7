#include "doctest.h"

#include "trisect/geom.hpp"

#include <cmath>
#include <random>

using namespace trisect;
using geom::GeomErrc;
using geom::IntersectionKind;
using scalar::BigFloat;

namespace {

using K = geom::Kernel<double>;
using P = geom::Point<double>;
using L = geom::Line<double>;
using C = geom::Circle<double>;

const K k(1e-9);

GeomErrc code_of(auto&& fn) {
    try {
        fn();
    } catch (const geom::GeomError& e) {
        return e.code();
    }
    FAIL("no GeomError thrown");
    return GeomErrc::coincident_points;
}

bool near(const P& p, double x, double y, double tol = 1e-12) {
    return std::fabs(p.x - x) <= tol && std::fabs(p.y - y) <= tol;
}

struct Rng {
    std::mt19937_64 gen{20261014};
    double operator()(double lo = -10, double hi = 10) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    P point() {
        const double x = (*this)();
        const double y = (*this)();
        return {x, y};
    }
};

}  // namespace

TEST_SUITE("geom") {

TEST_CASE("line_through") {
    const L x_axis = k.line_through({0, 0}, {1, 0});
    CHECK(x_axis.a == doctest::Approx(0));
    CHECK(x_axis.b == doctest::Approx(1));
    CHECK(x_axis.c == doctest::Approx(0));
    const L y_axis = k.line_through({0, 0}, {0, 1});
    CHECK(y_axis.a == doctest::Approx(1));
    CHECK(y_axis.b == doctest::Approx(0));
    const L diag = k.line_through({0, 0}, {1, 1});
    CHECK(std::fabs(k.residual(diag, {0, 0})) < 1e-9);
    CHECK(std::fabs(k.residual(diag, {1, 1})) < 1e-9);
    CHECK(code_of([] { k.line_through({1, 1}, {1, 1 + 1e-10}); }) == GeomErrc::coincident_points);
}

TEST_CASE("line normalization is deterministic") {
    const L l1 = k.line_through({0, 0}, {2, 1});
    const L l2 = k.line_through({2, 1}, {0, 0});
    const L l3 = k.line_through({-2, -1}, {4, 2});
    CHECK(l1.a == doctest::Approx(l2.a));
    CHECK(l1.b == doctest::Approx(l2.b));
    CHECK(l1.a == doctest::Approx(l3.a));
    CHECK(l1.a * l1.a + l1.b * l1.b == doctest::Approx(1));
    CHECK((l1.a > 0 || (l1.a == 0 && l1.b > 0)));
}

TEST_CASE("midpoint") {
    CHECK(near(k.midpoint({0, 0}, {1, 0}), 0.5, 0));
    CHECK(near(k.midpoint({3, -4}, {3, -4}), 3, -4));
    CHECK(near(k.midpoint({-2, 0}, {0, 0}), -1, 0));
}

TEST_CASE("perpendicular_bisector") {
    const L l = k.perpendicular_bisector({0, 0}, {1, 0});
    CHECK(std::fabs(k.residual(l, {0.5, 7})) < 1e-12);
    const L m = k.perpendicular_bisector({-2, 0}, {0, 0});
    CHECK(std::fabs(k.residual(m, {-1, 3})) < 1e-12);
    CHECK(code_of([] { k.perpendicular_bisector({1, 1}, {1, 1}); }) == GeomErrc::coincident_points);

    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const P p = rng.point();
        const P q = rng.point();
        const L b = k.perpendicular_bisector(p, q);
        CHECK(std::fabs(k.residual(b, k.midpoint(p, q))) < 1e-8);
        const L alt = k.perpendicular_at(k.line_through(p, q), k.midpoint(p, q));
        CHECK(std::fabs(b.a - alt.a) < 1e-9);
        CHECK(std::fabs(b.b - alt.b) < 1e-9);
        CHECK(std::fabs(b.c - alt.c) < 1e-8);
    }
}

TEST_CASE("perpendicular_at") {
    const L x1 = k.perpendicular_at(k.line_through({0, 0}, {1, 0}), {1, 0});
    CHECK(std::fabs(k.residual(x1, {1, 5})) < 1e-12);
    const L y5 = k.perpendicular_at(k.line_through({0, 0}, {0, 1}), {0, 5});
    CHECK(std::fabs(k.residual(y5, {-3, 5})) < 1e-12);
    // Off-line point: still through p and normal to l.
    const L l = k.line_through({0, 0}, {1, 2});
    const L p = k.perpendicular_at(l, {4, -1});
    CHECK(std::fabs(k.residual(p, {4, -1})) < 1e-12);
    CHECK(std::fabs(l.a * p.a + l.b * p.b) < 1e-12);
}

TEST_CASE("angle_bisector") {
    const auto r45 = k.angle_bisector({0, 0}, {1, 0}, {0, 1});
    CHECK(std::atan2(r45.dy, r45.dx) * 180 / 3.14159265358979323846 == doctest::Approx(45));
    const auto r0 = k.angle_bisector({0, 0}, {1, 0}, {1, 0});
    CHECK(r0.dx == doctest::Approx(1));
    CHECK(r0.dy == doctest::Approx(0));
    CHECK(code_of([] { k.angle_bisector({0, 0}, {0, 0}, {1, 0}); }) == GeomErrc::degenerate_angle);
    CHECK(code_of([] { k.angle_bisector({0, 0}, {1, 0}, {-1, 0}); }) == GeomErrc::ambiguous_bisector);

    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const P v = rng.point();
        const P a = rng.point();
        const P b = rng.point();
        if (k.angle_at(v, a, b).value > 179) continue;
        const auto r = k.angle_bisector(v, a, b);
        const P on{v.x + r.dx, v.y + r.dy};
        CHECK(std::fabs(k.angle_at(v, a, on).value - k.angle_at(v, on, b).value) < 1e-8);
        CHECK(std::hypot(r.dx, r.dy) == doctest::Approx(1));
    }
}

TEST_CASE("intersect_line_line") {
    const L x0 = k.line_through({0, 0}, {0, 1});
    const L y0 = k.line_through({0, 0}, {1, 0});
    const L y1 = k.line_through({0, 1}, {1, 1});
    CHECK(near(k.intersect_line_line(x0, y0), 0, 0));
    CHECK(code_of([&] { k.intersect_line_line(y0, y1); }) == GeomErrc::parallel_lines);
    CHECK(code_of([&] { k.intersect_line_line(y0, y0); }) == GeomErrc::coincident_lines);
}

TEST_CASE("intersect_line_circle") {
    const C unit{{0, 0}, 1};
    const auto t = k.intersect_line_circle(k.line_through({0, 1}, {1, 1}), unit);
    REQUIRE(t.kind == IntersectionKind::tangent);
    REQUIRE(t.points.size() == 1);
    CHECK(near(t.points[0], 0, 1));
    const auto two = k.intersect_line_circle(k.line_through({0, 0}, {1, 0}), unit);
    REQUIRE(two.kind == IntersectionKind::two);
    CHECK(near(two.points[0], -1, 0));
    CHECK(near(two.points[1], 1, 0));
    const auto none = k.intersect_line_circle(k.line_through({0, 2}, {1, 2}), unit);
    CHECK(none.kind == IntersectionKind::none);
    CHECK(none.points.empty());

    // T of the similar-triangles figure at 45 degrees.
    const double r = std::sqrt(1 + 1.0 / 9);
    const auto tt = k.intersect_line_circle(k.line_through({1, 0}, {1, 1}), C{{0, 0}, r});
    REQUIRE(tt.kind == IntersectionKind::two);
    CHECK(near(tt.points[1], 1, 1.0 / 3));
}

TEST_CASE("intersect_circle_circle") {
    const auto two = k.intersect_circle_circle({{0, 0}, 1}, {{1, 0}, 1});
    REQUIRE(two.kind == IntersectionKind::two);
    CHECK(near(two.points[0], 0.5, -std::sqrt(3.0) / 2));
    CHECK(near(two.points[1], 0.5, std::sqrt(3.0) / 2));
    const auto t = k.intersect_circle_circle({{0, 0}, 1}, {{2, 0}, 1});
    REQUIRE(t.kind == IntersectionKind::tangent);
    CHECK(near(t.points[0], 1, 0));
    const auto inner = k.intersect_circle_circle({{0, 0}, 2}, {{1, 0}, 1});
    CHECK(inner.kind == IntersectionKind::tangent);
    CHECK(k.intersect_circle_circle({{0, 0}, 1}, {{5, 0}, 1}).kind == IntersectionKind::none);
    CHECK(code_of([] { k.intersect_circle_circle({{0, 0}, 1}, {{0, 0}, 2}); }) == GeomErrc::concentric_circles);
}

TEST_CASE("angle_at") {
    CHECK(k.angle_at({0, 0}, {1, 0}, {0, 1}).value == doctest::Approx(90));
    CHECK(k.angle_at({0, 0}, {1, 0}, {1, 0}).value == doctest::Approx(0));
    CHECK(k.angle_at({0, 0}, {1, 0}, {-1, 0}).value == doctest::Approx(180));
    // HBA of an equilateral triangle on AB.
    CHECK(k.angle_at({1, 0}, {0.5, std::sqrt(3.0) / 2}, {0, 0}).value == doctest::Approx(60));
    CHECK(code_of([] { k.angle_at({0, 0}, {0, 0}, {1, 0}); }) == GeomErrc::degenerate_angle);
}

TEST_CASE("ray_from_angle") {
    const auto up = k.ray_from_angle({0, 0}, {1, 0}, {90}, geom::Side::ccw);
    CHECK(up.dx == doctest::Approx(0));
    CHECK(up.dy == doctest::Approx(1));
    const auto flat = k.ray_from_angle({0, 0}, {1, 0}, {0}, geom::Side::ccw);
    CHECK(flat.dx == doctest::Approx(1));
    const auto down = k.ray_from_angle({0, 0}, {1, 0}, {30}, geom::Side::cw);
    CHECK(down.dy == doctest::Approx(-0.5));
    CHECK(code_of([] { k.ray_from_angle({0, 0}, {0, 0}, {30}, geom::Side::ccw); }) == GeomErrc::degenerate_angle);
    for (double deg : {1.0, 17.5, 45.0, 89.0, 135.0, 179.0}) {
        const auto r = k.ray_from_angle({2, 3}, {4, 5}, {deg}, geom::Side::ccw);
        CHECK(k.angle_at({2, 3}, {4, 5}, {2 + 3 * r.dx, 3 + 3 * r.dy}).value == doctest::Approx(deg));
    }
}

TEST_CASE("random intersections satisfy their equations") {
    Rng rng;
    int two = 0;
    for (int i = 0; i < 500; ++i) {
        const P p = rng.point(), q = rng.point(), r = rng.point(), s = rng.point();
        const L l1 = k.line_through(p, q);
        const L l2 = k.line_through(r, s);
        if (std::fabs(l1.a * l2.b - l1.b * l2.a) > 1e-3) {
            const P x = k.intersect_line_line(l1, l2);
            CHECK(std::fabs(k.residual(l1, x)) < 10 * k.eps() * std::max(1.0, std::hypot(x.x, x.y)));
            CHECK(std::fabs(k.residual(l2, x)) < 10 * k.eps() * std::max(1.0, std::hypot(x.x, x.y)));
        }
        const C c1{rng.point(), rng(0.5, 8)};
        const C c2{rng.point(), rng(0.5, 8)};
        const auto lc = k.intersect_line_circle(l1, c1);
        for (const P& x : lc.points) {
            CHECK(std::fabs(k.residual(l1, x)) < 10 * k.eps());
            CHECK(k.residual(c1, x) < 10 * k.eps());
        }
        const auto cc = k.intersect_circle_circle(c1, c2);
        const auto swapped = k.intersect_circle_circle(c2, c1);
        REQUIRE(cc.kind == swapped.kind);
        for (std::size_t j = 0; j < cc.points.size(); ++j) {
            CHECK(k.residual(c1, cc.points[j]) < 10 * k.eps());
            CHECK(k.residual(c2, cc.points[j]) < 10 * k.eps());
            CHECK(near(cc.points[j], swapped.points[j].x, swapped.points[j].y, 1e-9));
        }
        if (cc.kind == IntersectionKind::two) {
            ++two;
            CHECK((cc.points[0].x < cc.points[1].x ||
                   (cc.points[0].x == cc.points[1].x && cc.points[0].y <= cc.points[1].y)));
        }
    }
    CHECK(two > 50);
}

TEST_CASE("angle_at is invariant under rigid motion and scaling") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        const P v = rng.point(), p = rng.point(), q = rng.point();
        const double base = k.angle_at(v, p, q).value;
        const double phi = rng(0, 6.283185307179586);
        const double s = rng(0.1, 10);
        const double tx = rng(), ty = rng();
        auto move = [&](P a) {
            return P{s * (std::cos(phi) * a.x - std::sin(phi) * a.y) + tx, s * (std::sin(phi) * a.x + std::cos(phi) * a.y) + ty};
        };
        CHECK(std::fabs(k.angle_at(move(v), move(p), move(q)).value - base) < 1e-9);
        CHECK(k.angle_at(v, q, p).value == base);
        CHECK((base >= 0 && base <= 180));
    }
}

TEST_CASE("bigfloat kernel residuals") {
    scalar::PrecisionScope scope(256);
    const geom::Kernel<BigFloat> kb(BigFloat(std::exp2(-124.0)));
    using PB = geom::Point<BigFloat>;
    const PB a{BigFloat(0), BigFloat(0)};
    const PB b{BigFloat(1), BigFloat(0)};
    const auto hits = kb.intersect_circle_circle({a, BigFloat(1)}, {b, BigFloat(1)});
    REQUIRE(hits.kind == IntersectionKind::two);
    CHECK(abs(hits.points[1].y - sqrt(BigFloat(3)) / BigFloat(2)) < BigFloat(1e-70));
    CHECK(abs(kb.angle_at(b, hits.points[1], a).value - BigFloat(60)) < BigFloat(1e-70));
}

}
