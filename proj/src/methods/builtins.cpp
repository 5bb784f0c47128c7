#include "trisect/methods.hpp"

namespace trisect::methods {

namespace {

using geom::Side;
using script::Op;
using script::ParamKind;
using script::PickKind;
using script::ProgramBuilder;
using script::StmtKind;
using script::dist;
using script::id;
using script::pick;
using script::side;

// Isosceles triangle on AB with base angles theta, bisector of the angle at
// A, perpendicular to the bisector at E, equilateral triangle HAB.
script::ConstructionProgram equilateral_triangle() {
    ProgramBuilder b("method1");
    b.param("theta", ParamKind::angle)
        .point("A", "0", "0")
        .point("B", "1", "0")
        .step(StmtKind::line, "ab", Op::line_through, {id("A"), id("B")})
        .step(StmtKind::point, "C", Op::midpoint, {id("A"), id("B")})
        .step(StmtKind::line, "axis", Op::perpendicular_bisector, {id("A"), id("B")})
        .step(StmtKind::ray, "ray_a", Op::ray_from_angle, {id("A"), id("B"), id("theta"), side(Side::ccw)})
        .step(StmtKind::ray, "ray_b", Op::ray_from_angle, {id("B"), id("A"), id("theta"), side(Side::cw)})
        .step(StmtKind::point, "D", Op::intersect, {id("ray_a"), id("ray_b")})
        .step(StmtKind::line, "ad", Op::line_through, {id("A"), id("D")})
        .step(StmtKind::line, "bd", Op::line_through, {id("B"), id("D")})
        .step(StmtKind::ray, "bisector", Op::angle_bisector, {id("A"), id("D"), id("C")})
        .step(StmtKind::point, "E", Op::intersect, {id("bisector"), id("bd")})
        .step(StmtKind::line, "ae", Op::line_through, {id("A"), id("E")})
        .step(StmtKind::line, "fg", Op::perpendicular_at, {id("ae"), id("E")})
        .step(StmtKind::point, "G", Op::intersect, {id("fg"), id("ab")})
        .step(StmtKind::point, "F", Op::intersect, {id("fg"), id("ad")})
        .step(StmtKind::circle, "around_a", Op::circle, {id("A"), dist("A", "B")})
        .step(StmtKind::circle, "around_b", Op::circle, {id("B"), dist("A", "B")})
        .step(StmtKind::point, "H", Op::intersect, {id("around_a"), id("around_b")}, pick(PickKind::upper))
        .step(StmtKind::line, "ha", Op::line_through, {id("H"), id("A")})
        .step(StmtKind::line, "hb", Op::line_through, {id("H"), id("B")})
        .step(StmtKind::angle, "BAD", Op::angle_at, {id("A"), id("B"), id("D")})
        .step(StmtKind::angle, "GEB", Op::angle_at, {id("E"), id("G"), id("B")})
        .step(StmtKind::angle, "HBE", Op::angle_at, {id("B"), id("H"), id("E")})
        .exports({"A", "B", "C", "D", "E", "F", "G", "H", "BAD", "GEB", "HBE"});
    return b.build();
}

// Unit chord AC at theta, circle on diameter AB, two equal chords stepped off
// from E with the compass, bisector of the central angle GDA.
script::ConstructionProgram central_angle() {
    ProgramBuilder b("method2");
    b.param("theta", ParamKind::angle)
        .point("A", "0", "0")
        .point("B", "1", "0")
        .step(StmtKind::line, "ab", Op::line_through, {id("A"), id("B")})
        .step(StmtKind::ray, "ray_a", Op::ray_from_angle, {id("A"), id("B"), id("theta"), side(Side::ccw)})
        .step(StmtKind::circle, "unit", Op::circle, {id("A"), id("B")})
        .step(StmtKind::point, "C", Op::intersect, {id("ray_a"), id("unit")}, pick(PickKind::upper))
        .step(StmtKind::line, "ac", Op::line_through, {id("A"), id("C")})
        .step(StmtKind::point, "D", Op::midpoint, {id("A"), id("B")})
        .step(StmtKind::circle, "circle1", Op::circle, {id("D"), dist("D", "A")})
        .step(StmtKind::point, "E", Op::intersect, {id("ac"), id("circle1")}, pick(PickKind::distinct_from, "A"))
        .step(StmtKind::circle, "circle2", Op::circle, {id("E"), dist("E", "A")})
        .step(StmtKind::point, "F", Op::intersect, {id("circle1"), id("circle2")},
              pick(PickKind::distinct_from, "A"))
        .step(StmtKind::circle, "circle3", Op::circle, {id("F"), dist("E", "F")})
        .step(StmtKind::point, "G", Op::intersect, {id("circle1"), id("circle3")},
              pick(PickKind::distinct_from, "E"))
        .step(StmtKind::line, "ae", Op::line_through, {id("A"), id("E")})
        .step(StmtKind::line, "ef", Op::line_through, {id("E"), id("F")})
        .step(StmtKind::line, "fg", Op::line_through, {id("F"), id("G")})
        .step(StmtKind::line, "ag", Op::line_through, {id("A"), id("G")})
        .step(StmtKind::line, "af", Op::line_through, {id("A"), id("F")})
        .step(StmtKind::line, "de", Op::line_through, {id("D"), id("E")})
        .step(StmtKind::line, "df", Op::line_through, {id("D"), id("F")})
        .step(StmtKind::line, "dg", Op::line_through, {id("D"), id("G")})
        .step(StmtKind::line, "eb", Op::line_through, {id("E"), id("B")})
        .step(StmtKind::ray, "bisector", Op::angle_bisector, {id("D"), id("G"), id("A")})
        .step(StmtKind::point, "H", Op::intersect, {id("bisector"), id("circle1")}, pick(PickKind::upper))
        .step(StmtKind::point, "K", Op::intersect, {id("bisector"), id("circle1")}, pick(PickKind::lower))
        .step(StmtKind::line, "hk", Op::line_through, {id("H"), id("K")})
        .step(StmtKind::line, "ak", Op::line_through, {id("A"), id("K")})
        .step(StmtKind::line, "ek", Op::line_through, {id("E"), id("K")})
        .step(StmtKind::line, "fk", Op::line_through, {id("F"), id("K")})
        .step(StmtKind::line, "gk", Op::line_through, {id("G"), id("K")})
        .step(StmtKind::angle, "EAB", Op::angle_at, {id("A"), id("E"), id("B")})
        .step(StmtKind::angle, "GDA", Op::angle_at, {id("D"), id("G"), id("A")})
        .step(StmtKind::angle, "GKA", Op::angle_at, {id("K"), id("G"), id("A")})
        .step(StmtKind::angle, "EBA", Op::angle_at, {id("B"), id("E"), id("A")})
        .exports({"A", "B", "C", "D", "E", "F", "G", "H", "K", "EAB", "GDA", "GKA", "EBA"});
    return b.build();
}

// OB = 1 with the perpendicular BE, C on BO extended with OC = 2, D where the
// perpendicular bisector of CO meets CE, circle about O through D.
script::ConstructionProgram similar_triangles() {
    ProgramBuilder b("method3");
    b.param("theta", ParamKind::angle)
        .point("O", "0", "0")
        .point("B", "1", "0")
        .step(StmtKind::line, "ob", Op::line_through, {id("O"), id("B")})
        .step(StmtKind::line, "be", Op::perpendicular_at, {id("ob"), id("B")})
        .step(StmtKind::ray, "ray_o", Op::ray_from_angle, {id("O"), id("B"), id("theta"), side(Side::ccw)})
        .step(StmtKind::point, "E", Op::intersect, {id("ray_o"), id("be")})
        .step(StmtKind::line, "oe", Op::line_through, {id("O"), id("E")})
        .step(StmtKind::circle, "unit", Op::circle, {id("O"), id("B")})
        .step(StmtKind::point, "B1", Op::intersect, {id("ob"), id("unit")}, pick(PickKind::distinct_from, "B"))
        .step(StmtKind::circle, "step_c", Op::circle, {id("B1"), dist("O", "B")})
        .step(StmtKind::point, "C", Op::intersect, {id("ob"), id("step_c")}, pick(PickKind::distinct_from, "O"))
        .step(StmtKind::line, "ce", Op::line_through, {id("C"), id("E")})
        .step(StmtKind::line, "axis", Op::perpendicular_bisector, {id("C"), id("O")})
        .step(StmtKind::point, "D", Op::intersect, {id("axis"), id("ce")})
        .step(StmtKind::point, "M", Op::midpoint, {id("C"), id("O")})
        .step(StmtKind::line, "md", Op::line_through, {id("M"), id("D")})
        .step(StmtKind::circle, "around_o", Op::circle, {id("O"), dist("O", "D")})
        .step(StmtKind::point, "A", Op::intersect, {id("ce"), id("around_o")}, pick(PickKind::distinct_from, "D"))
        .step(StmtKind::point, "T", Op::intersect, {id("be"), id("around_o")}, pick(PickKind::upper))
        .step(StmtKind::line, "oa", Op::line_through, {id("O"), id("A")})
        .step(StmtKind::point, "K", Op::intersect, {id("oa"), id("be")}, std::nullopt, true)
        .step(StmtKind::line, "od", Op::line_through, {id("O"), id("D")})
        .step(StmtKind::line, "ck", Op::line_through, {id("C"), id("K")}, std::nullopt, true)
        .step(StmtKind::circle, "around_t", Op::circle, {id("T"), dist("T", "B")})
        .step(StmtKind::point, "F", Op::intersect, {id("be"), id("around_t")}, pick(PickKind::distinct_from, "B"))
        .step(StmtKind::line, "mf", Op::line_through, {id("M"), id("F")})
        .step(StmtKind::line, "foot_o", Op::perpendicular_at, {id("ce"), id("O")})
        .step(StmtKind::point, "L", Op::intersect, {id("foot_o"), id("ce")})
        .step(StmtKind::line, "ol", Op::line_through, {id("O"), id("L")})
        .step(StmtKind::line, "foot_a", Op::perpendicular_at, {id("ob"), id("A")})
        .step(StmtKind::point, "N", Op::intersect, {id("foot_a"), id("ob")})
        .step(StmtKind::line, "an", Op::line_through, {id("A"), id("N")})
        .step(StmtKind::angle, "BOE", Op::angle_at, {id("O"), id("B"), id("E")})
        .step(StmtKind::angle, "BOA", Op::angle_at, {id("O"), id("B"), id("A")})
        .step(StmtKind::angle, "MCD", Op::angle_at, {id("C"), id("M"), id("D")})
        .step(StmtKind::angle, "BOT", Op::angle_at, {id("O"), id("B"), id("T")})
        .step(StmtKind::angle, "ODL", Op::angle_at, {id("D"), id("O"), id("L")})
        .exports({"O", "B", "C", "E", "M", "D", "A", "T", "K", "F", "L", "N", "BOE", "BOA", "MCD", "BOT", "ODL"});
    return b.build();
}

}  // namespace

const script::ConstructionProgram& builtin(MethodId id) {
    static const script::ConstructionProgram m1 = equilateral_triangle();
    static const script::ConstructionProgram m2 = central_angle();
    static const script::ConstructionProgram m3 = similar_triangles();
    switch (id) {
        case MethodId::method1_equilateral: return m1;
        case MethodId::method2_central: return m2;
        case MethodId::method3_similar: return m3;
    }
    return m1;
}

}  // namespace trisect::methods
