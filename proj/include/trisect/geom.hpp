#pragma once

#include "trisect/scalar.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisect::geom {

using scalar::AngleDeg;

enum class GeomErrc {
    coincident_points,
    degenerate_angle,
    ambiguous_bisector,
    parallel_lines,
    coincident_lines,
    concentric_circles,
};

const char* to_string(GeomErrc code);

class GeomError : public std::runtime_error {
public:
    GeomError(GeomErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    GeomErrc code() const { return code_; }

private:
    GeomErrc code_;
};

template <typename Real>
struct Point {
    Real x{};
    Real y{};

    friend bool operator==(const Point&, const Point&) = default;
};

/// a*x + b*y + c = 0 with a^2 + b^2 = 1 and (a, b) lexicographically positive.
template <typename Real>
struct Line {
    Real a{};
    Real b{};
    Real c{};

    friend bool operator==(const Line&, const Line&) = default;
};

template <typename Real>
struct Circle {
    Point<Real> center;
    Real r{};

    friend bool operator==(const Circle&, const Circle&) = default;
};

template <typename Real>
struct Ray {
    Point<Real> origin;
    Real dx{};
    Real dy{};

    friend bool operator==(const Ray&, const Ray&) = default;
};

enum class IntersectionKind { none, tangent, two };

/// Result of a line-circle or circle-circle cut. `points` holds 0, 1 or 2
/// entries; two points are ordered lexicographically by (x, y).
template <typename Real>
struct Intersection {
    IntersectionKind kind = IntersectionKind::none;
    std::vector<Point<Real>> points;
};

enum class Side { ccw, cw };

/// Ruler-and-compass operations at a fixed absolute tolerance.
template <typename Real>
class Kernel {
public:
    explicit Kernel(Real eps) : eps_(std::move(eps)) {}

    const Real& eps() const { return eps_; }

    Real dist(const Point<Real>& p, const Point<Real>& q) const;

    Line<Real> line_through(const Point<Real>& p, const Point<Real>& q) const;
    Line<Real> line_of(const Ray<Real>& r) const;
    Point<Real> midpoint(const Point<Real>& p, const Point<Real>& q) const;
    Line<Real> perpendicular_bisector(const Point<Real>& p, const Point<Real>& q) const;
    /// Perpendicular to `l` through `p`; `p` need not lie on `l`.
    Line<Real> perpendicular_at(const Line<Real>& l, const Point<Real>& p) const;
    /// Interior bisector of the angle arm1-vertex-arm2.
    Ray<Real> angle_bisector(const Point<Real>& vertex, const Point<Real>& arm1, const Point<Real>& arm2) const;

    Point<Real> intersect_line_line(const Line<Real>& l1, const Line<Real>& l2) const;
    Intersection<Real> intersect_line_circle(const Line<Real>& l, const Circle<Real>& c) const;
    Intersection<Real> intersect_circle_circle(const Circle<Real>& c1, const Circle<Real>& c2) const;

    /// Undirected angle p-vertex-q in [0, 180] degrees.
    AngleDeg<Real> angle_at(const Point<Real>& vertex, const Point<Real>& p, const Point<Real>& q) const;

    /// Ray from `origin` turned by `deg` away from the direction of `base`.
    /// This is the only operation that uses trigonometry.
    Ray<Real> ray_from_angle(const Point<Real>& origin, const Point<Real>& base, const AngleDeg<Real>& deg,
                             Side side) const;

    /// Signed residual of `p` against the line equation.
    Real residual(const Line<Real>& l, const Point<Real>& p) const;
    /// |dist(center, p) - r|.
    Real residual(const Circle<Real>& c, const Point<Real>& p) const;

private:
    Line<Real> normalized(Real a, Real b, Real c) const;
    Intersection<Real> ordered(std::vector<Point<Real>> pts, IntersectionKind kind) const;

    Real eps_;
};

extern template class Kernel<double>;
extern template class Kernel<scalar::BigFloat>;

}  // namespace trisect::geom
