#include "doctest.h"

#include "oracle.hpp"
#include "trisect/engine.hpp"
#include "trisect/methods.hpp"

#include <cmath>

using namespace trisect;
using engine::ExecErrc;
using scalar::BigFloat;

namespace {

const scalar::Backend kMachine = scalar::make_backend(scalar::BackendKind::machine);
const scalar::Backend kBig = scalar::make_backend(scalar::BackendKind::bigfloat, 256);

engine::Execution<double> run(const std::string& text, engine::Bindings<double> b = {}) {
    return engine::execute(script::parse({text, "t.gcs"}), b, kMachine);
}

engine::ExecutionError error_of(const std::string& text, engine::Bindings<double> b = {}) {
    try {
        run(text, std::move(b));
    } catch (const engine::ExecutionError& e) {
        return e;
    }
    FAIL("execution succeeded");
    return {ExecErrc::unknown_name, {}, ""};
}

engine::Execution<double> method(methods::MethodId id, double theta) {
    return engine::execute(methods::builtin(id), engine::Bindings<double>{{"theta", theta}}, kMachine);
}

const char* kTwoCircles =
    "point A = (0, 0)\n"
    "point B = (1, 0)\n"
    "circle a = circle(A, dist(A, B))\n"
    "circle b = circle(B, dist(A, B))\n";

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("empty program") {
    const auto e = run("");
    CHECK(e.env.empty());
    CHECK(e.trace.empty());
}

TEST_CASE("method1 at 30 degrees") {
    const auto e = method(methods::MethodId::method1_equilateral, 30);
    for (const char* name : {"A", "B", "C", "D", "E", "F", "G", "H"}) CHECK(e.env.find(name) != nullptr);
    CHECK(std::fabs(engine::measure_angle(e.env, "E", "G", "B", kMachine).value - 45) < 1e-9);
    CHECK(std::fabs(engine::measure_angle(e.env, "E", "A", "G", kMachine).value - 90) < 1e-9);
    CHECK(e.trace.size() == methods::builtin(methods::MethodId::method1_equilateral).steps.size());
}

TEST_CASE("method1 at the fixed point") {
    const auto e = method(methods::MethodId::method1_equilateral, 36);
    CHECK(std::fabs(engine::measure_angle(e.env, "E", "G", "B", kMachine).value - 36) < 1e-9);
}

TEST_CASE("method2 at 30 degrees degenerates") {
    try {
        method(methods::MethodId::method2_central, 30);
        FAIL("expected a degenerate construction");
    } catch (const engine::ExecutionError& e) {
        CHECK(e.code() == ExecErrc::degenerate_construction);
        REQUIRE(e.step().has_value());
        CHECK(methods::builtin(methods::MethodId::method2_central).steps[*e.step()].name == "ag");
        CHECK(e.cause() == geom::GeomErrc::coincident_points);
    }
}

TEST_CASE("measure_angle errors") {
    const auto e = run("point A = (0, 0)\npoint B = (1, 0)\nline l = line_through(A, B)\n");
    CHECK_THROWS_AS(engine::measure_angle(e.env, "A", "A", "B", kMachine), geom::GeomError);
    try {
        engine::measure_angle(e.env, "Z", "A", "B", kMachine);
        FAIL("expected unknown name");
    } catch (const engine::ExecutionError& err) {
        CHECK(err.code() == ExecErrc::unknown_name);
    }
    try {
        engine::measure_angle(e.env, "l", "A", "B", kMachine);
        FAIL("expected not a point");
    } catch (const engine::ExecutionError& err) {
        CHECK(err.code() == ExecErrc::not_a_point);
    }
}

TEST_CASE("pick hints") {
    auto e = run(std::string(kTwoCircles) + "point U = intersect(a, b) pick upper\npoint L = intersect(a, b) pick lower\n");
    CHECK(e.env.point("U").y > 0);
    CHECK(e.env.point("L").y < 0);
    e = run(std::string(kTwoCircles) + "point R = (0.5, 5)\npoint X = intersect(a, b) pick closest_to(R)\n"
                                       "point Y = intersect(a, b) pick farthest_from(R)\n");
    CHECK(e.env.point("X").y > 0);
    CHECK(e.env.point("Y").y < 0);
    e = run(std::string(kTwoCircles) + "point U = intersect(a, b) pick upper\n"
                                       "point V = intersect(a, b) pick distinct_from(U)\n");
    CHECK(e.env.point("V").y < 0);
}

TEST_CASE("ambiguous picks fail") {
    auto err = error_of(std::string(kTwoCircles) + "point R = (3, 0)\npoint X = intersect(a, b) pick closest_to(R)\n");
    CHECK(err.code() == ExecErrc::ambiguous_pick);
    CHECK(err.step() == 5u);
    err = error_of(std::string(kTwoCircles) + "point R = (3, 0)\npoint X = intersect(a, b) pick distinct_from(R)\n");
    CHECK(err.code() == ExecErrc::ambiguous_pick);
}

TEST_CASE("tangent or missing intersections are degenerate") {
    auto err = error_of(
        "point A = (0, 0)\npoint B = (1, 0)\npoint C = (2, 0)\n"
        "circle a = circle(A, dist(A, B))\ncircle c = circle(C, dist(A, B))\n"
        "point X = intersect(a, c) pick upper\n");
    CHECK(err.code() == ExecErrc::degenerate_construction);
    err = error_of(
        "point A = (0, 0)\npoint B = (1, 0)\npoint C = (5, 0)\n"
        "circle a = circle(A, dist(A, B))\ncircle c = circle(C, dist(A, B))\n"
        "point X = intersect(a, c) pick upper\n");
    CHECK(err.code() == ExecErrc::degenerate_construction);
    CHECK(err.step() == 5u);
}

TEST_CASE("kernel errors carry step and cause") {
    const auto err = error_of("point A = (0, 0)\npoint B = (0, 0)\nline l = line_through(A, B)\n");
    CHECK(err.code() == ExecErrc::degenerate_construction);
    CHECK(err.step() == 2u);
    CHECK(err.cause() == geom::GeomErrc::coincident_points);
}

TEST_CASE("optional steps") {
    const auto e = run(
        "point A = (0, 0)\npoint B = (1, 0)\npoint C = (0, 1)\npoint D = (1, 1)\n"
        "line ab = line_through(A, B)\nline cd = line_through(C, D)\n"
        "point X = intersect(ab, cd) optional\nexport A, X\n");
    CHECK(e.env.find("X") == nullptr);
    CHECK(e.trace.size() == 7);
    CHECK_FALSE(e.trace[6].produced.has_value());
    CHECK_FALSE(e.trace[6].skipped_reason.empty());
    CHECK(e.env.exports() == std::vector<std::string>{"A"});

    const auto err = error_of(
        "point A = (0, 0)\npoint B = (1, 0)\npoint C = (0, 1)\npoint D = (1, 1)\n"
        "line ab = line_through(A, B)\nline cd = line_through(C, D)\n"
        "point X = intersect(ab, cd) optional\npoint M = midpoint(A, X)\n");
    CHECK(err.code() == ExecErrc::degenerate_construction);
    CHECK(err.step() == 7u);
}

TEST_CASE("method3 skips K at 60 degrees only") {
    const auto at60 = method(methods::MethodId::method3_similar, 60);
    CHECK(at60.env.find("K") == nullptr);
    CHECK(at60.env.find("ck") == nullptr);
    const auto at45 = method(methods::MethodId::method3_similar, 45);
    CHECK(at45.env.find("K") != nullptr);
}

TEST_CASE("missing and malformed bindings") {
    const std::string text = "param theta: angle\npoint A = (0, 0)\n";
    CHECK(error_of(text).code() == ExecErrc::missing_binding);
    CHECK(error_of(text, {{"theta", 1}, {"extra", 2}}).code() == ExecErrc::unknown_name);
    CHECK_THROWS_AS(engine::bind<double>({{"theta", "abc"}}), engine::ExecutionError);
    CHECK(engine::bind<double>({{"theta", "30.5"}}).at("theta") == 30.5);
}

TEST_CASE("defining relations hold within 10 eps") {
    for (auto id : methods::kAllMethods) {
        const auto g = methods::default_grid(id);
        for (double theta = g.start; theta <= g.stop; theta += 7.5) {
            const auto e = method(id, theta);
            const geom::Kernel<double> k(kMachine.eps);
            for (const auto& entry : e.trace) {
                if (!entry.produced) continue;
                const auto* p = std::get_if<geom::Point<double>>(&*entry.produced);
                if (!p || entry.step.op == script::Op::coord) continue;
                // Every intersection point lies on both of its operands.
                if (entry.step.op != script::Op::intersect) continue;
                for (const auto& arg : entry.step.args) {
                    const auto* obj = e.env.find(arg.text);
                    REQUIRE(obj != nullptr);
                    if (const auto* l = std::get_if<geom::Line<double>>(obj)) {
                        CHECK(std::fabs(k.residual(*l, *p)) < 10 * kMachine.eps);
                    } else if (const auto* c = std::get_if<geom::Circle<double>>(obj)) {
                        CHECK(k.residual(*c, *p) < 10 * kMachine.eps);
                    } else if (const auto* r = std::get_if<geom::Ray<double>>(obj)) {
                        CHECK(std::fabs(k.residual(k.line_of(*r), *p)) < 10 * kMachine.eps);
                    }
                }
            }
        }
    }
}

TEST_CASE("replay determinism") {
    for (auto id : methods::kAllMethods) {
        const double theta = methods::default_grid(id).start + 3.25;
        CHECK(method(id, theta).env == method(id, theta).env);
        scalar::PrecisionScope scope(256);
        const engine::Bindings<BigFloat> b{{"theta", BigFloat(theta)}};
        CHECK(engine::execute(methods::builtin(id), b, kBig).env == engine::execute(methods::builtin(id), b, kBig).env);
    }
}

TEST_CASE("machine and 256-bit environments agree") {
    for (auto id : methods::kAllMethods) {
        const auto g = methods::default_grid(id);
        for (double theta = g.start; theta <= g.stop; theta += 2.5) {
            const auto m = method(id, theta);
            scalar::PrecisionScope scope(256);
            const auto big = engine::execute(methods::builtin(id), engine::Bindings<BigFloat>{{"theta", BigFloat(theta)}}, kBig);
            for (const auto& [name, obj] : m.env.entries()) {
                const auto* p = std::get_if<geom::Point<double>>(&obj);
                if (!p) continue;
                const auto& q = big.env.point(name);
                CHECK(std::fabs(p->x - q.x.to_double()) < 1e-9);
                CHECK(std::fabs(p->y - q.y.to_double()) < 1e-9);
            }
        }
    }
}

TEST_CASE("scale equivariance") {
    const std::string base =
        "param theta: angle\n"
        "point A = (0, 0)\npoint B = (S, 0)\n"
        "ray r = ray_from_angle(A, B, theta, ccw)\n"
        "circle c = circle(B, dist(A, B))\n"
        "point E = intersect(r, c) pick distinct_from(A)\n"
        "point M = midpoint(A, E)\n"
        "line pb = perpendicular_bisector(A, B)\n"
        "point X = intersect(pb, r)\n"
        "angle W = angle_at(B, E, X)\n"
        "export A, B, E, M, X, W\n";
    auto with_scale = [&](const std::string& s) {
        std::string text = base;
        text.replace(text.find('S'), 1, s);
        return run(text, {{"theta", 35}});
    };
    const auto one = with_scale("1");
    for (const char* s : {"0.25", "3", "40"}) {
        const double factor = std::stod(s);
        const auto other = with_scale(s);
        for (const char* name : {"E", "M", "X"}) {
            CHECK(std::fabs(other.env.point(name).x - factor * one.env.point(name).x) < 1e-9 * factor);
            CHECK(std::fabs(other.env.point(name).y - factor * one.env.point(name).y) < 1e-9 * factor);
        }
        const auto* w1 = std::get_if<engine::AngleMark<double>>(one.env.find("W"));
        const auto* w2 = std::get_if<engine::AngleMark<double>>(other.env.find("W"));
        REQUIRE(w1);
        REQUIRE(w2);
        CHECK(std::fabs(w1->value.value - w2->value.value) < 1e-9);
    }
}

TEST_CASE("built-in environments match the coordinate oracle") {
    using methods::MethodId;
    auto compare = [](const engine::Execution<double>& e, const oracle::Coords& want) {
        for (const auto& [name, xy] : want) {
            const auto& p = e.env.point(name);
            CHECK_MESSAGE(std::fabs(p.x - xy.first) < 1e-9, name);
            CHECK_MESSAGE(std::fabs(p.y - xy.second) < 1e-9, name);
        }
    };
    for (double t = 1; t < 60; t += 4.5) compare(method(MethodId::method1_equilateral, t), oracle::method1(t));
    for (double t = 61; t < 90; t += 2.5) compare(method(MethodId::method2_central, t), oracle::method2(t));
    for (double t = 1; t < 90; t += 4.5) compare(method(MethodId::method3_similar, t), oracle::method3(t));
}

}
