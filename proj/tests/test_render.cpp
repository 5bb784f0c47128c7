#include "doctest.h"

#include "trisect/methods.hpp"
#include "trisect/render.hpp"

#include <regex>

using namespace trisect;
using methods::MethodId;

namespace {

const scalar::Backend kMachine = scalar::make_backend(scalar::BackendKind::machine);

std::string svg_of(MethodId id, double theta, const render::RenderOptions& opts = {}) {
    const auto run = methods::run_method_full<double>(id, {theta}, kMachine);
    return render::to_svg(run.execution.trace, run.execution.env, opts);
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("method1 figure") {
    const std::string svg = svg_of(MethodId::method1_equilateral, 30);
    CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(count(svg, "<text ") == 8);
    for (const char* label : {">A<", ">B<", ">C<", ">D<", ">E<", ">F<", ">G<", ">H<"}) CHECK(count(svg, label) == 1);
    // Triangle HAB.
    for (const char* side : {"id=\"ab\"", "id=\"ha\"", "id=\"hb\""}) CHECK(count(svg, side) == 1);
    CHECK(svg.find("transform=\"matrix(") != std::string::npos);
    CHECK(count(svg, "class=\"angle-arc\"") == 3);
}

TEST_CASE("method2 shows three construction circles") {
    const std::string svg = svg_of(MethodId::method2_central, 75);
    for (const char* c : {"id=\"circle1\"", "id=\"circle2\"", "id=\"circle3\""}) CHECK(count(svg, c) == 1);
    render::RenderOptions opts;
    opts.show_construction_circles = false;
    CHECK(count(svg_of(MethodId::method2_central, 75, opts), "class=\"construction\"") == 0);
}

TEST_CASE("method3 labels T") {
    const std::string svg = svg_of(MethodId::method3_similar, 45);
    CHECK(count(svg, ">T<") == 1);
    CHECK(count(svg, ">K<") == 1);
    // K is skipped at 60 degrees and so carries no label.
    CHECK(count(svg_of(MethodId::method3_similar, 60), ">K<") == 0);
}

TEST_CASE("flags") {
    render::RenderOptions opts;
    opts.show_labels = false;
    opts.show_angle_arcs = false;
    const std::string svg = svg_of(MethodId::method1_equilateral, 30, opts);
    CHECK(count(svg, "<text ") == 0);
    CHECK(count(svg, "angle-arc") == 0);
}

TEST_CASE("empty trace and bad options") {
    const engine::Trace<double> trace;
    const engine::Environment<double> env;
    try {
        render::to_svg(trace, env);
        FAIL("expected EmptyTrace");
    } catch (const render::RenderError& e) {
        CHECK(e.code() == render::RenderErrc::empty_trace);
    }
    const auto run = methods::run_method_full<double>(MethodId::method1_equilateral, {30}, kMachine);
    render::RenderOptions opts;
    opts.width = 0;
    CHECK_THROWS_AS(render::to_svg(run.execution.trace, run.execution.env, opts), render::RenderError);
}

TEST_CASE("output is byte stable") {
    for (auto id : methods::kAllMethods) {
        const double theta = methods::default_grid(id).start + 12;
        CHECK(svg_of(id, theta) == svg_of(id, theta));
    }
}

TEST_CASE("numbers are short and have no negative zero") {
    CHECK(render::fmt(-0.0) == "0");
    CHECK(render::fmt(0.5) == "0.5");
    CHECK(render::fmt(1.0 / 3) == "0.333333333");
    const std::string svg = svg_of(MethodId::method3_similar, 45);
    CHECK(svg.find("\"-0\"") == std::string::npos);
    const std::regex number("[0-9]+\\.[0-9]+");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), number); it != std::sregex_iterator(); ++it) {
        std::string digits;
        for (char c : it->str()) {
            if (c != '.' && !(digits.empty() && c == '0')) digits += c;
        }
        CHECK(digits.size() <= 9);
    }
}

TEST_CASE("everything fits inside the canvas") {
    const std::string svg = svg_of(MethodId::method2_central, 80);
    const std::regex text_pos("<text x=\"([-0-9.e]+)\" y=\"([-0-9.e]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), text_pos); it != std::sregex_iterator(); ++it) {
        const double x = std::stod((*it)[1]);
        const double y = std::stod((*it)[2]);
        CHECK((x >= 0 && x <= 800));
        CHECK((y >= 0 && y <= 800));
    }
}

}
