#include "trisect/engine.hpp"

#include <cmath>
#include <optional>
#include <type_traits>

namespace trisect::engine {

using scalar::BigFloat;
using script::Arg;
using script::ArgKind;
using script::Op;
using script::PickKind;
using script::Step;

const char* to_string(ExecErrc code) {
    switch (code) {
        case ExecErrc::degenerate_construction: return "DegenerateConstruction";
        case ExecErrc::ambiguous_pick: return "AmbiguousPick";
        case ExecErrc::unknown_name: return "UnknownName";
        case ExecErrc::not_a_point: return "NotAPoint";
        case ExecErrc::missing_binding: return "MissingBinding";
    }
    return "ExecutionError";
}

template <typename Real>
void Environment<Real>::insert(const std::string& name, Object<Real> obj) {
    index_.emplace(name, entries_.size());
    entries_.emplace_back(name, std::move(obj));
}

template <typename Real>
const Object<Real>* Environment<Real>::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second].second;
}

template <typename Real>
const Point<Real>& Environment<Real>::point(const std::string& name) const {
    const Object<Real>* obj = find(name);
    if (!obj) throw ExecutionError(ExecErrc::unknown_name, std::nullopt, "unknown name '" + name + "'");
    const auto* p = std::get_if<Point<Real>>(obj);
    if (!p) throw ExecutionError(ExecErrc::not_a_point, std::nullopt, "'" + name + "' is not a point");
    return *p;
}

template class Environment<double>;
template class Environment<BigFloat>;

namespace {

using std::abs;

template <typename Real>
class Executor {
public:
    Executor(const script::ConstructionProgram& program, const Bindings<Real>& bindings, const scalar::Backend& backend)
        : program_(program), bindings_(bindings), kernel_(scalar::eps_of<Real>(backend)) {}

    Execution<Real> run() {
        for (const auto& p : program_.params) {
            if (!bindings_.count(p.name)) {
                throw ExecutionError(ExecErrc::missing_binding, std::nullopt, "parameter '" + p.name + "' is unbound");
            }
        }
        for (const auto& [name, value] : bindings_) {
            bool known = false;
            for (const auto& p : program_.params) known = known || p.name == name;
            if (!known) throw ExecutionError(ExecErrc::unknown_name, std::nullopt, "no parameter named '" + name + "'");
        }

        Execution<Real> out;
        for (std::size_t i = 0; i < program_.steps.size(); ++i) {
            const Step& step = program_.steps[i];
            TraceEntry<Real> entry{i, step, std::nullopt, {}};
            try {
                Object<Real> obj = evaluate(step, i, out.env);
                out.env.insert(step.name, obj);
                entry.produced = std::move(obj);
            } catch (const ExecutionError& e) {
                if (!step.optional || e.code() != ExecErrc::degenerate_construction) throw;
                entry.skipped_reason = e.what();
                skipped_.push_back(step.name);
            }
            out.trace.push_back(std::move(entry));
        }
        std::vector<std::string> exports;
        for (const auto& name : program_.exports) {
            if (out.env.find(name)) exports.push_back(name);
        }
        out.env.set_exports(std::move(exports));
        return out;
    }

private:
    [[noreturn]] void degenerate(std::size_t i, const std::string& why,
                                 std::optional<geom::GeomErrc> cause = {}) const {
        const Step& s = program_.steps[i];
        throw ExecutionError(ExecErrc::degenerate_construction, i,
                             "step " + std::to_string(i + 1) + " (" + s.name + " = " + script::op_name(s.op) +
                                 "): " + why,
                             cause);
    }

    const Object<Real>& resolve(const std::string& name, std::size_t i, const Environment<Real>& env) const {
        if (const Object<Real>* obj = env.find(name)) return *obj;
        for (const auto& s : skipped_) {
            if (s == name) degenerate(i, "depends on skipped optional step '" + name + "'");
        }
        throw ExecutionError(ExecErrc::unknown_name, i, "unknown name '" + name + "'");
    }

    const Point<Real>& pt(const Arg& a, std::size_t i, const Environment<Real>& env) const {
        const auto* p = std::get_if<Point<Real>>(&resolve(a.text, i, env));
        if (!p) throw ExecutionError(ExecErrc::not_a_point, i, "'" + a.text + "' is not a point");
        return *p;
    }

    Line<Real> linear(const Arg& a, std::size_t i, const Environment<Real>& env) const {
        const Object<Real>& obj = resolve(a.text, i, env);
        if (const auto* l = std::get_if<Line<Real>>(&obj)) return *l;
        if (const auto* r = std::get_if<Ray<Real>>(&obj)) return kernel_.line_of(*r);
        throw ExecutionError(ExecErrc::unknown_name, i, "'" + a.text + "' is not a line or ray");
    }

    Real number(const Arg& a) const {
        if (a.kind == ArgKind::number) return scalar::from_decimal<Real>(a.text);
        return bindings_.at(a.text);
    }

    Object<Real> evaluate(const Step& s, std::size_t i, const Environment<Real>& env) const {
        const auto& args = s.args;
        try {
            switch (s.op) {
                case Op::coord:
                    return Point<Real>{number(args[0]), number(args[1])};
                case Op::line_through:
                    return kernel_.line_through(pt(args[0], i, env), pt(args[1], i, env));
                case Op::midpoint:
                    return kernel_.midpoint(pt(args[0], i, env), pt(args[1], i, env));
                case Op::perpendicular_bisector:
                    return kernel_.perpendicular_bisector(pt(args[0], i, env), pt(args[1], i, env));
                case Op::perpendicular_at:
                    return kernel_.perpendicular_at(linear(args[0], i, env), pt(args[1], i, env));
                case Op::angle_bisector:
                    return kernel_.angle_bisector(pt(args[0], i, env), pt(args[1], i, env), pt(args[2], i, env));
                case Op::ray_from_angle: {
                    const auto side = args[3].text == "ccw" ? geom::Side::ccw : geom::Side::cw;
                    return kernel_.ray_from_angle(pt(args[0], i, env), pt(args[1], i, env),
                                                  AngleDeg<Real>{number(args[2])}, side);
                }
                case Op::circle: {
                    const Point<Real>& c = pt(args[0], i, env);
                    Real r;
                    const Arg& ra = args[1];
                    if (ra.kind == ArgKind::dist) {
                        r = kernel_.dist(pt({ArgKind::ident, ra.text, {}}, i, env),
                                         pt({ArgKind::ident, ra.text2, {}}, i, env));
                    } else if (ra.kind == ArgKind::ident && !bindings_.count(ra.text)) {
                        r = kernel_.dist(c, pt(ra, i, env));
                    } else {
                        r = number(ra);
                    }
                    if (r <= kernel_.eps()) degenerate(i, "circle radius vanishes");
                    return Circle<Real>{c, r};
                }
                case Op::angle_at: {
                    return AngleMark<Real>{args[0].text, args[1].text, args[2].text,
                                           kernel_.angle_at(pt(args[0], i, env), pt(args[1], i, env),
                                                            pt(args[2], i, env))};
                }
                case Op::intersect:
                case Op::intersect_line_line:
                case Op::intersect_line_circle:
                case Op::intersect_circle_circle:
                    return cut(s, i, env);
            }
        } catch (const geom::GeomError& e) {
            degenerate(i, e.what(), e.code());
        }
        degenerate(i, "unsupported operation");
    }

    Object<Real> cut(const Step& s, std::size_t i, const Environment<Real>& env) const {
        const auto* c0 = std::get_if<Circle<Real>>(&resolve(s.args[0].text, i, env));
        const auto* c1 = std::get_if<Circle<Real>>(&resolve(s.args[1].text, i, env));
        geom::Intersection<Real> hit;
        if (!c0 && !c1) {
            return kernel_.intersect_line_line(linear(s.args[0], i, env), linear(s.args[1], i, env));
        } else if (c0 && c1) {
            hit = kernel_.intersect_circle_circle(*c0, *c1);
        } else if (c1) {
            hit = kernel_.intersect_line_circle(linear(s.args[0], i, env), *c1);
        } else {
            hit = kernel_.intersect_line_circle(linear(s.args[1], i, env), *c0);
        }
        if (hit.kind == geom::IntersectionKind::none) degenerate(i, "curves do not meet");
        if (hit.kind == geom::IntersectionKind::tangent) degenerate(i, "curves are tangent, two points required");
        return choose(hit.points[0], hit.points[1], *s.pick, i, env);
    }

    Point<Real> choose(const Point<Real>& p0, const Point<Real>& p1, const script::PickHint& hint, std::size_t i,
                       const Environment<Real>& env) const {
        const Real& eps = kernel_.eps();
        auto ambiguous = [&](const std::string& why) -> Point<Real> {
            const Step& s = program_.steps[i];
            throw ExecutionError(ExecErrc::ambiguous_pick, i,
                                 "step " + std::to_string(i + 1) + " (" + s.name + "): pick " +
                                     script::pick_name(hint.kind) + " is ambiguous: " + why);
        };
        switch (hint.kind) {
            case PickKind::closest_to:
            case PickKind::farthest_from: {
                const Point<Real>& ref = pt({ArgKind::ident, hint.ref, {}}, i, env);
                const Real d0 = kernel_.dist(p0, ref);
                const Real d1 = kernel_.dist(p1, ref);
                if (abs(d0 - d1) <= eps) return ambiguous("both candidates are equidistant from " + hint.ref);
                const bool first = hint.kind == PickKind::closest_to ? d0 < d1 : d0 > d1;
                return first ? p0 : p1;
            }
            case PickKind::distinct_from: {
                const Point<Real>& ref = pt({ArgKind::ident, hint.ref, {}}, i, env);
                const bool far0 = kernel_.dist(p0, ref) > eps;
                const bool far1 = kernel_.dist(p1, ref) > eps;
                if (far0 == far1) {
                    return ambiguous(far0 ? "neither candidate coincides with " + hint.ref
                                          : "both candidates coincide with " + hint.ref);
                }
                return far0 ? p0 : p1;
            }
            case PickKind::upper:
            case PickKind::lower: {
                const bool up = hint.kind == PickKind::upper;
                if (abs(p0.y - p1.y) > eps) return (p0.y > p1.y) == up ? p0 : p1;
                if (abs(p0.x - p1.x) > eps) return (p0.x > p1.x) == up ? p0 : p1;
                return ambiguous("candidates coincide");
            }
        }
        return ambiguous("unknown hint");
    }

    const script::ConstructionProgram& program_;
    const Bindings<Real>& bindings_;
    geom::Kernel<Real> kernel_;
    std::vector<std::string> skipped_;
};

template <typename Real>
Execution<Real> execute_impl(const script::ConstructionProgram& program, const Bindings<Real>& bindings,
                             const scalar::Backend& backend) {
    return Executor<Real>(program, bindings, backend).run();
}

}  // namespace

template <typename Real>
Execution<Real> execute(const script::ConstructionProgram& program, const Bindings<Real>& bindings,
                        const scalar::Backend& backend) {
    if constexpr (std::is_same_v<Real, BigFloat>) {
        scalar::PrecisionScope scope(backend.precision_bits);
        return execute_impl(program, bindings, backend);
    } else {
        return execute_impl(program, bindings, backend);
    }
}

template <typename Real>
AngleDeg<Real> measure_angle(const Environment<Real>& env, const std::string& vertex, const std::string& p,
                             const std::string& q, const scalar::Backend& backend) {
    const geom::Kernel<Real> kernel(scalar::eps_of<Real>(backend));
    return kernel.angle_at(env.point(vertex), env.point(p), env.point(q));
}

template <typename Real>
Bindings<Real> bind(const std::map<std::string, std::string>& text) {
    Bindings<Real> out;
    for (const auto& [name, value] : text) {
        try {
            out.emplace(name, scalar::from_decimal<Real>(value));
        } catch (const std::exception&) {
            throw ExecutionError(ExecErrc::missing_binding, std::nullopt,
                                 "parameter '" + name + "' has a non-numeric value '" + value + "'");
        }
    }
    return out;
}

template Execution<double> execute(const script::ConstructionProgram&, const Bindings<double>&,
                                   const scalar::Backend&);
template Execution<BigFloat> execute(const script::ConstructionProgram&, const Bindings<BigFloat>&,
                                     const scalar::Backend&);
template AngleDeg<double> measure_angle(const Environment<double>&, const std::string&, const std::string&,
                                        const std::string&, const scalar::Backend&);
template AngleDeg<BigFloat> measure_angle(const Environment<BigFloat>&, const std::string&, const std::string&,
                                          const std::string&, const scalar::Backend&);
template Bindings<double> bind(const std::map<std::string, std::string>&);
template Bindings<BigFloat> bind(const std::map<std::string, std::string>&);

}  // namespace trisect::engine
