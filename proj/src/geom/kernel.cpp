#include "trisect/geom.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace trisect::geom {

using scalar::BigFloat;

const char* to_string(GeomErrc code) {
    switch (code) {
        case GeomErrc::coincident_points: return "CoincidentPoints";
        case GeomErrc::degenerate_angle: return "DegenerateAngle";
        case GeomErrc::ambiguous_bisector: return "AmbiguousBisector";
        case GeomErrc::parallel_lines: return "ParallelLines";
        case GeomErrc::coincident_lines: return "CoincidentLines";
        case GeomErrc::concentric_circles: return "ConcentricCircles";
    }
    return "GeomError";
}

namespace {

using std::abs;
using std::atan2;
using std::cos;
using std::hypot;
using std::sin;
using std::sqrt;

}  // namespace

template <typename Real>
Real Kernel<Real>::dist(const Point<Real>& p, const Point<Real>& q) const {
    return hypot(q.x - p.x, q.y - p.y);
}

template <typename Real>
Line<Real> Kernel<Real>::normalized(Real a, Real b, Real c) const {
    const Real zero(0);
    if (a < zero || (a == zero && b < zero)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {std::move(a), std::move(b), std::move(c)};
}

template <typename Real>
Line<Real> Kernel<Real>::line_through(const Point<Real>& p, const Point<Real>& q) const {
    const Real d = dist(p, q);
    if (d <= eps_) throw GeomError(GeomErrc::coincident_points, "line_through: points coincide");
    Real a = -(q.y - p.y) / d;
    Real b = (q.x - p.x) / d;
    Real c = -(a * p.x + b * p.y);
    return normalized(std::move(a), std::move(b), std::move(c));
}

template <typename Real>
Line<Real> Kernel<Real>::line_of(const Ray<Real>& r) const {
    const Real n = hypot(r.dx, r.dy);
    Real a = -r.dy / n;
    Real b = r.dx / n;
    Real c = -(a * r.origin.x + b * r.origin.y);
    return normalized(std::move(a), std::move(b), std::move(c));
}

template <typename Real>
Point<Real> Kernel<Real>::midpoint(const Point<Real>& p, const Point<Real>& q) const {
    return {(p.x + q.x) / Real(2), (p.y + q.y) / Real(2)};
}

template <typename Real>
Line<Real> Kernel<Real>::perpendicular_bisector(const Point<Real>& p, const Point<Real>& q) const {
    const Real d = dist(p, q);
    if (d <= eps_) throw GeomError(GeomErrc::coincident_points, "perpendicular_bisector: points coincide");
    const Point<Real> m = midpoint(p, q);
    Real a = (q.x - p.x) / d;
    Real b = (q.y - p.y) / d;
    Real c = -(a * m.x + b * m.y);
    return normalized(std::move(a), std::move(b), std::move(c));
}

template <typename Real>
Line<Real> Kernel<Real>::perpendicular_at(const Line<Real>& l, const Point<Real>& p) const {
    Real a = -l.b;
    Real b = l.a;
    Real c = -(a * p.x + b * p.y);
    return normalized(std::move(a), std::move(b), std::move(c));
}

template <typename Real>
Ray<Real> Kernel<Real>::angle_bisector(const Point<Real>& vertex, const Point<Real>& arm1,
                                       const Point<Real>& arm2) const {
    const Real d1 = dist(vertex, arm1);
    const Real d2 = dist(vertex, arm2);
    if (d1 <= eps_ || d2 <= eps_) throw GeomError(GeomErrc::degenerate_angle, "angle_bisector: arm at vertex");
    const Real sx = (arm1.x - vertex.x) / d1 + (arm2.x - vertex.x) / d2;
    const Real sy = (arm1.y - vertex.y) / d1 + (arm2.y - vertex.y) / d2;
    const Real n = hypot(sx, sy);
    if (n <= eps_) throw GeomError(GeomErrc::ambiguous_bisector, "angle_bisector: straight angle");
    return {vertex, sx / n, sy / n};
}

template <typename Real>
Point<Real> Kernel<Real>::intersect_line_line(const Line<Real>& l1, const Line<Real>& l2) const {
    const Real cross = l1.a * l2.b - l2.a * l1.b;
    if (abs(cross) <= eps_) {
        const Point<Real> foot{-l2.a * l2.c, -l2.b * l2.c};
        if (abs(residual(l1, foot)) <= eps_) {
            throw GeomError(GeomErrc::coincident_lines, "intersect_line_line: lines coincide");
        }
        throw GeomError(GeomErrc::parallel_lines, "intersect_line_line: lines are parallel");
    }
    return {(l1.b * l2.c - l2.b * l1.c) / cross, (l2.a * l1.c - l1.a * l2.c) / cross};
}

template <typename Real>
Intersection<Real> Kernel<Real>::ordered(std::vector<Point<Real>> pts, IntersectionKind kind) const {
    if (pts.size() == 2) {
        const bool swap = pts[1].x < pts[0].x || (pts[1].x == pts[0].x && pts[1].y < pts[0].y);
        if (swap) std::swap(pts[0], pts[1]);
    }
    return {kind, std::move(pts)};
}

template <typename Real>
Intersection<Real> Kernel<Real>::intersect_line_circle(const Line<Real>& l, const Circle<Real>& c) const {
    const Real s = residual(l, c.center);
    const Real d = abs(s);
    const Point<Real> foot{c.center.x - l.a * s, c.center.y - l.b * s};
    if (d > c.r + eps_) return {IntersectionKind::none, {}};
    if (abs(d - c.r) <= eps_) return {IntersectionKind::tangent, {foot}};
    const Real h = sqrt((c.r - d) * (c.r + d));
    std::vector<Point<Real>> pts;
    pts.push_back({foot.x - h * l.b, foot.y + h * l.a});
    pts.push_back({foot.x + h * l.b, foot.y - h * l.a});
    return ordered(std::move(pts), IntersectionKind::two);
}

template <typename Real>
Intersection<Real> Kernel<Real>::intersect_circle_circle(const Circle<Real>& c1, const Circle<Real>& c2) const {
    const Real dx = c2.center.x - c1.center.x;
    const Real dy = c2.center.y - c1.center.y;
    const Real d = hypot(dx, dy);
    if (d <= eps_) throw GeomError(GeomErrc::concentric_circles, "intersect_circle_circle: concentric circles");
    const Real sum = c1.r + c2.r;
    const Real diff = abs(c1.r - c2.r);
    if (d > sum + eps_ || d < diff - eps_) return {IntersectionKind::none, {}};
    const Real ux = dx / d;
    const Real uy = dy / d;
    const Real along = (d * d + c1.r * c1.r - c2.r * c2.r) / (Real(2) * d);
    const Point<Real> base{c1.center.x + along * ux, c1.center.y + along * uy};
    if (abs(d - sum) <= eps_ || abs(d - diff) <= eps_) return {IntersectionKind::tangent, {base}};
    const Real h = sqrt(abs((c1.r - along) * (c1.r + along)));
    std::vector<Point<Real>> pts;
    pts.push_back({base.x - h * uy, base.y + h * ux});
    pts.push_back({base.x + h * uy, base.y - h * ux});
    return ordered(std::move(pts), IntersectionKind::two);
}

template <typename Real>
AngleDeg<Real> Kernel<Real>::angle_at(const Point<Real>& vertex, const Point<Real>& p, const Point<Real>& q) const {
    if (dist(vertex, p) <= eps_ || dist(vertex, q) <= eps_) {
        throw GeomError(GeomErrc::degenerate_angle, "angle_at: arm point coincides with vertex");
    }
    const Real ux = p.x - vertex.x;
    const Real uy = p.y - vertex.y;
    const Real wx = q.x - vertex.x;
    const Real wy = q.y - vertex.y;
    const Real cross = abs(ux * wy - uy * wx);
    const Real dot = ux * wx + uy * wy;
    return scalar::rad_to_deg(Real(atan2(cross, dot)));
}

template <typename Real>
Ray<Real> Kernel<Real>::ray_from_angle(const Point<Real>& origin, const Point<Real>& base, const AngleDeg<Real>& deg,
                                       Side side) const {
    const Real d = dist(origin, base);
    if (d <= eps_) throw GeomError(GeomErrc::degenerate_angle, "ray_from_angle: base coincides with origin");
    const Real ux = (base.x - origin.x) / d;
    const Real uy = (base.y - origin.y) / d;
    const Real rad = scalar::deg_to_rad(deg);
    const Real cs = cos(rad);
    const Real sn = side == Side::ccw ? Real(sin(rad)) : Real(-sin(rad));
    return {origin, ux * cs - uy * sn, ux * sn + uy * cs};
}

template <typename Real>
Real Kernel<Real>::residual(const Line<Real>& l, const Point<Real>& p) const {
    return l.a * p.x + l.b * p.y + l.c;
}

template <typename Real>
Real Kernel<Real>::residual(const Circle<Real>& c, const Point<Real>& p) const {
    return abs(dist(c.center, p) - c.r);
}

template class Kernel<double>;
template class Kernel<BigFloat>;

}  // namespace trisect::geom
