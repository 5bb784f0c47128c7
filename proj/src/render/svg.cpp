#include "trisect/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace trisect::render {

using scalar::BigFloat;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct P {
    double x, y;
};

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    bool empty() const { return !(x0 <= x1); }
};

// Segment of the line through o with unit direction d, clipped to the box.
std::optional<std::pair<double, double>> clip(P o, P d, const Box& b) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    const double os[2] = {o.x, o.y};
    const double ds[2] = {d.x, d.y};
    const double mins[2] = {b.x0, b.y0};
    const double maxs[2] = {b.x1, b.y1};
    for (int i = 0; i < 2; ++i) {
        if (std::fabs(ds[i]) < 1e-15) {
            if (os[i] < mins[i] || os[i] > maxs[i]) return std::nullopt;
            continue;
        }
        double t0 = (mins[i] - os[i]) / ds[i];
        double t1 = (maxs[i] - os[i]) / ds[i];
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
    }
    if (!(lo < hi)) return std::nullopt;
    return std::make_pair(lo, hi);
}

class Writer {
public:
    Writer(const RenderOptions& opts, const std::vector<std::pair<std::string, P>>& points) : opts_(opts) {
        for (const auto& [name, p] : points) points_.push_back({name, p});
    }

    void fit(const Box& box) {
        double w = box.x1 - box.x0;
        double h = box.y1 - box.y0;
        if (!(w > 0)) w = 1;
        if (!(h > 0)) h = 1;
        const double cx = (box.x0 + box.x1) / 2;
        const double cy = (box.y0 + box.y1) / 2;
        scale_ = std::min((opts_.width - 2.0 * opts_.margin) / w, (opts_.height - 2.0 * opts_.margin) / h);
        tx_ = opts_.width / 2.0 - scale_ * cx;
        ty_ = opts_.height / 2.0 + scale_ * cy;
        view_ = box;
        const double pad = opts_.margin / scale_;
        view_.x0 -= pad;
        view_.y0 -= pad;
        view_.x1 += pad;
        view_.y1 += pad;
    }

    void line(const std::string& id, P o, P d, bool ray) {
        // Extent of the named points on this line, in units along d.
        const double tol = 1e-7 * std::max(1.0, std::max(view_.x1 - view_.x0, view_.y1 - view_.y0));
        double lo = ray ? 0 : std::numeric_limits<double>::infinity();
        double hi = ray ? 0 : -std::numeric_limits<double>::infinity();
        int hits = 0;
        for (const auto& [name, p] : points_) {
            const double vx = p.x - o.x;
            const double vy = p.y - o.y;
            if (std::fabs(vx * d.y - vy * d.x) > tol) continue;
            const double t = vx * d.x + vy * d.y;
            if (ray && t < -tol) continue;
            lo = std::min(lo, t);
            hi = std::max(hi, t);
            ++hits;
        }
        if (hits < 2 || hi - lo <= tol) {
            const auto span = clip(o, d, view_);
            if (!span) return;
            lo = ray ? std::max(0.0, span->first) : span->first;
            hi = span->second;
            if (!(lo < hi)) return;
        }
        body_ << "    <line id=\"" << id << "\" class=\"" << (ray ? "ray" : "line") << "\" x1=\"" << fmt(o.x + lo * d.x)
              << "\" y1=\"" << fmt(o.y + lo * d.y) << "\" x2=\"" << fmt(o.x + hi * d.x) << "\" y2=\""
              << fmt(o.y + hi * d.y) << "\"/>\n";
    }

    void circle(const std::string& id, P c, double r) {
        body_ << "    <circle id=\"" << id << "\" class=\"construction\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
              << "\" r=\"" << fmt(r) << "\" stroke=\"#7f7f7f\"/>\n";
    }

    void arc(const std::string& id, P v, P a, P b) {
        const double la = std::hypot(a.x - v.x, a.y - v.y);
        const double lb = std::hypot(b.x - v.x, b.y - v.y);
        const double radius = std::min(0.25 * std::min(la, lb), 36.0 / scale_);
        const double a0 = std::atan2(a.y - v.y, a.x - v.x);
        double delta = std::atan2(b.y - v.y, b.x - v.x) - a0;
        while (delta > kPi) delta -= 2 * kPi;
        while (delta <= -kPi) delta += 2 * kPi;
        constexpr int kSegments = 24;
        body_ << "    <polyline id=\"" << id << "\" class=\"angle-arc\" stroke=\"#c0392b\" points=\"";
        for (int i = 0; i <= kSegments; ++i) {
            const double t = a0 + delta * i / kSegments;
            body_ << (i ? " " : "") << fmt(v.x + radius * std::cos(t)) << ',' << fmt(v.y + radius * std::sin(t));
        }
        body_ << "\"/>\n";
    }

    void dot(const std::string& id, P p) {
        dots_ << "    <circle id=\"" << id << "\" class=\"point\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
              << fmt(3.0 / scale_) << "\" fill=\"black\" stroke=\"none\"/>\n";
    }

    void label(const std::string& name, P p) {
        labels_ << "    <text x=\"" << fmt(tx_ + scale_ * p.x + 6) << "\" y=\"" << fmt(ty_ - scale_ * p.y - 6) << "\">"
                << name << "</text>\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts_.width << "\" height=\""
            << opts_.height << "\" viewBox=\"0 0 " << opts_.width << ' ' << opts_.height << "\">\n";
        out << "  <rect width=\"" << opts_.width << "\" height=\"" << opts_.height << "\" fill=\"white\"/>\n";
        out << "  <g id=\"world\" transform=\"matrix(" << fmt(scale_) << " 0 0 " << fmt(-scale_) << ' ' << fmt(tx_) << ' '
            << fmt(ty_) << ")\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(opts_.stroke_width / scale_)
            << "\">\n";
        out << body_.str() << dots_.str();
        out << "  </g>\n";
        const std::string text = labels_.str();
        if (!text.empty()) {
            out << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << fmt(opts_.font_size)
                << "\" fill=\"black\">\n"
                << text << "  </g>\n";
        }
        out << "</svg>\n";
        return out.str();
    }

private:
    const RenderOptions& opts_;
    std::vector<std::pair<std::string, P>> points_;
    double scale_ = 1, tx_ = 0, ty_ = 0;
    Box view_;
    std::ostringstream body_, dots_, labels_;
};

}  // namespace

template <typename Real>
std::string to_svg(const engine::Trace<Real>& trace, const engine::Environment<Real>& env, const RenderOptions& opts) {
    using scalar::to_double;
    if (trace.empty()) throw RenderError(RenderErrc::empty_trace, "nothing to render: the trace is empty");
    if (opts.width <= 0 || opts.height <= 0 || opts.margin < 0 || 2 * opts.margin >= std::min(opts.width, opts.height) ||
        !(opts.stroke_width > 0) || !(opts.font_size > 0)) {
        throw RenderError(RenderErrc::invalid_options, "render options need positive dimensions");
    }

    std::vector<std::pair<std::string, P>> points;
    std::map<std::string, P> by_name;
    Box box;
    for (const auto& entry : trace) {
        if (!entry.produced) continue;
        if (const auto* p = std::get_if<geom::Point<Real>>(&*entry.produced)) {
            const P q{to_double(p->x), to_double(p->y)};
            points.emplace_back(entry.step.name, q);
            by_name[entry.step.name] = q;
            box.add(q.x, q.y);
        } else if (const auto* c = std::get_if<geom::Circle<Real>>(&*entry.produced);
                   c && opts.show_construction_circles) {
            const double cx = to_double(c->center.x);
            const double cy = to_double(c->center.y);
            const double r = to_double(c->r);
            box.add(cx - r, cy - r);
            box.add(cx + r, cy + r);
        }
    }
    if (box.empty()) box.add(0, 0);

    Writer w(opts, points);
    w.fit(box);
    for (const auto& entry : trace) {
        if (!entry.produced) continue;
        const std::string& name = entry.step.name;
        std::visit(
            [&](const auto& obj) {
                using T = std::decay_t<decltype(obj)>;
                if constexpr (std::is_same_v<T, geom::Line<Real>>) {
                    // Foot of the origin on the line, direction along it.
                    const double a = to_double(obj.a);
                    const double b = to_double(obj.b);
                    const double c = to_double(obj.c);
                    w.line(name, {-a * c, -b * c}, {-b, a}, false);
                } else if constexpr (std::is_same_v<T, geom::Ray<Real>>) {
                    const double dx = to_double(obj.dx);
                    const double dy = to_double(obj.dy);
                    const double n = std::hypot(dx, dy);
                    w.line(name, {to_double(obj.origin.x), to_double(obj.origin.y)}, {dx / n, dy / n}, true);
                } else if constexpr (std::is_same_v<T, geom::Circle<Real>>) {
                    if (opts.show_construction_circles) {
                        w.circle(name, {to_double(obj.center.x), to_double(obj.center.y)}, to_double(obj.r));
                    }
                } else if constexpr (std::is_same_v<T, engine::AngleMark<Real>>) {
                    if (opts.show_angle_arcs) {
                        w.arc(name, by_name.at(obj.vertex), by_name.at(obj.arm1), by_name.at(obj.arm2));
                    }
                }
            },
            *entry.produced);
    }
    for (const auto& [name, p] : points) w.dot(name, p);

    if (opts.show_labels) {
        for (const std::string& name : env.exports()) {
            const auto* obj = env.find(name);
            if (obj && std::holds_alternative<geom::Point<Real>>(*obj)) w.label(name, by_name.at(name));
        }
    }
    return w.finish();
}

template std::string to_svg(const engine::Trace<double>&, const engine::Environment<double>&, const RenderOptions&);
template std::string to_svg(const engine::Trace<BigFloat>&, const engine::Environment<BigFloat>&,
                            const RenderOptions&);

}  // namespace trisect::render
