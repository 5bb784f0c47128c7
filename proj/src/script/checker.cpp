#include "checker.hpp"

#include <algorithm>
#include <iterator>
#include <string_view>

namespace trisect::script {

const char* to_string(ScriptErrc code) {
    switch (code) {
        case ScriptErrc::syntax_error: return "SyntaxError";
        case ScriptErrc::undefined_identifier: return "UndefinedIdentifier";
        case ScriptErrc::arity_error: return "ArityError";
        case ScriptErrc::missing_pick: return "MissingPick";
        case ScriptErrc::duplicate_name: return "DuplicateName";
        case ScriptErrc::type_error: return "TypeError";
        case ScriptErrc::unexpected_pick: return "UnexpectedPick";
    }
    return "ScriptError";
}

ScriptError::ScriptError(ScriptErrc code, SourcePos pos, std::string token, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + " at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + " near '" + token + "': " + message),
      code_(code),
      pos_(pos),
      token_(std::move(token)) {}

const char* op_name(Op op) {
    switch (op) {
        case Op::coord: return "coord";
        case Op::line_through: return "line_through";
        case Op::midpoint: return "midpoint";
        case Op::perpendicular_bisector: return "perpendicular_bisector";
        case Op::perpendicular_at: return "perpendicular_at";
        case Op::angle_bisector: return "angle_bisector";
        case Op::intersect: return "intersect";
        case Op::intersect_line_line: return "intersect_line_line";
        case Op::intersect_line_circle: return "intersect_line_circle";
        case Op::intersect_circle_circle: return "intersect_circle_circle";
        case Op::ray_from_angle: return "ray_from_angle";
        case Op::circle: return "circle";
        case Op::angle_at: return "angle_at";
    }
    return "?";
}

const char* stmt_keyword(StmtKind kind) {
    switch (kind) {
        case StmtKind::point: return "point";
        case StmtKind::line: return "line";
        case StmtKind::ray: return "ray";
        case StmtKind::circle: return "circle";
        case StmtKind::angle: return "angle";
    }
    return "?";
}

const char* pick_name(PickKind kind) {
    switch (kind) {
        case PickKind::closest_to: return "closest_to";
        case PickKind::farthest_from: return "farthest_from";
        case PickKind::distinct_from: return "distinct_from";
        case PickKind::upper: return "upper";
        case PickKind::lower: return "lower";
    }
    return "?";
}

namespace detail {

namespace {

constexpr std::string_view kReserved[] = {
    "param", "point", "line", "ray", "circle", "angle", "length", "export", "pick", "optional", "upper",
    "lower", "closest_to", "farthest_from", "distinct_from", "ccw", "cw", "dist", "line_through", "midpoint",
    "perpendicular_bisector", "perpendicular_at", "angle_bisector", "intersect", "intersect_line_line",
    "intersect_line_circle", "intersect_circle_circle", "ray_from_angle", "angle_at",
};

const char* sym_name(Sym s) {
    switch (s) {
        case Sym::angle_param: return "angle parameter";
        case Sym::length_param: return "length parameter";
        case Sym::point: return "point";
        case Sym::line: return "line";
        case Sym::ray: return "ray";
        case Sym::circle: return "circle";
        case Sym::angle: return "angle";
    }
    return "?";
}

StmtKind result_kind(Op op) {
    switch (op) {
        case Op::coord:
        case Op::midpoint:
        case Op::intersect:
        case Op::intersect_line_line:
        case Op::intersect_line_circle:
        case Op::intersect_circle_circle: return StmtKind::point;
        case Op::line_through:
        case Op::perpendicular_bisector:
        case Op::perpendicular_at: return StmtKind::line;
        case Op::angle_bisector:
        case Op::ray_from_angle: return StmtKind::ray;
        case Op::circle: return StmtKind::circle;
        case Op::angle_at: return StmtKind::angle;
    }
    return StmtKind::point;
}

std::size_t arity(Op op) {
    switch (op) {
        case Op::angle_bisector:
        case Op::angle_at: return 3;
        case Op::ray_from_angle: return 4;
        default: return 2;
    }
}

Sym sym_of(StmtKind kind) {
    switch (kind) {
        case StmtKind::point: return Sym::point;
        case StmtKind::line: return Sym::line;
        case StmtKind::ray: return Sym::ray;
        case StmtKind::circle: return Sym::circle;
        case StmtKind::angle: return Sym::angle;
    }
    return Sym::point;
}

bool is_linear(Sym s) { return s == Sym::line || s == Sym::ray; }

}  // namespace

bool is_reserved(std::string_view word) {
    return std::find(std::begin(kReserved), std::end(kReserved), word) != std::end(kReserved);
}

Sym Checker::lookup(const std::string& name, SourcePos pos) const {
    auto it = symbols_.find(name);
    if (it == symbols_.end()) {
        throw ScriptError(ScriptErrc::undefined_identifier, pos, name, "'" + name + "' is not defined");
    }
    return it->second;
}

void Checker::define(const std::string& name, Sym sym, SourcePos pos) {
    if (is_reserved(name)) throw ScriptError(ScriptErrc::syntax_error, pos, name, "reserved word used as a name");
    if (!symbols_.emplace(name, sym).second) {
        throw ScriptError(ScriptErrc::duplicate_name, pos, name, "'" + name + "' is already defined");
    }
}

void Checker::add_param(const Param& p, SourcePos pos) {
    define(p.name, p.kind == ParamKind::angle ? Sym::angle_param : Sym::length_param, pos);
}

void Checker::add_step(const Step& s, SourcePos pos, std::span<const SourcePos> arg_pos, SourcePos pick_pos) {
    auto at = [&](std::size_t i) { return i < arg_pos.size() ? arg_pos[i] : pos; };
    const std::string op = op_name(s.op);

    if (s.args.size() != arity(s.op)) {
        throw ScriptError(ScriptErrc::arity_error, pos, op,
                          op + " takes " + std::to_string(arity(s.op)) + " arguments, got " +
                              std::to_string(s.args.size()));
    }

    auto type_error = [&](std::size_t i, const std::string& want) {
        const Arg& a = s.args[i];
        return ScriptError(ScriptErrc::type_error, at(i), a.text,
                           op + " argument " + std::to_string(i + 1) + " must be " + want);
    };
    // Resolves an identifier argument, rejecting literals.
    auto ident = [&](std::size_t i, const std::string& want) {
        const Arg& a = s.args[i];
        if (a.kind != ArgKind::ident) throw type_error(i, want);
        return lookup(a.text, at(i));
    };
    auto expect_point = [&](std::size_t i) {
        if (ident(i, "a point") != Sym::point) throw type_error(i, "a point");
    };

    bool two_valued = false;
    switch (s.op) {
        case Op::coord:
            for (std::size_t i = 0; i < 2; ++i) {
                if (s.args[i].kind != ArgKind::number) throw type_error(i, "a number");
            }
            break;
        case Op::line_through:
        case Op::midpoint:
        case Op::perpendicular_bisector:
            expect_point(0);
            expect_point(1);
            break;
        case Op::perpendicular_at:
            if (!is_linear(ident(0, "a line or ray"))) throw type_error(0, "a line or ray");
            expect_point(1);
            break;
        case Op::angle_bisector:
        case Op::angle_at:
            expect_point(0);
            expect_point(1);
            expect_point(2);
            break;
        case Op::intersect: {
            const Sym a = ident(0, "a line, ray or circle");
            const Sym b = ident(1, "a line, ray or circle");
            if (!is_linear(a) && a != Sym::circle) throw type_error(0, "a line, ray or circle");
            if (!is_linear(b) && b != Sym::circle) throw type_error(1, "a line, ray or circle");
            two_valued = a == Sym::circle || b == Sym::circle;
            break;
        }
        case Op::intersect_line_line:
            if (!is_linear(ident(0, "a line or ray"))) throw type_error(0, "a line or ray");
            if (!is_linear(ident(1, "a line or ray"))) throw type_error(1, "a line or ray");
            break;
        case Op::intersect_line_circle:
            if (!is_linear(ident(0, "a line or ray"))) throw type_error(0, "a line or ray");
            if (ident(1, "a circle") != Sym::circle) throw type_error(1, "a circle");
            two_valued = true;
            break;
        case Op::intersect_circle_circle:
            if (ident(0, "a circle") != Sym::circle) throw type_error(0, "a circle");
            if (ident(1, "a circle") != Sym::circle) throw type_error(1, "a circle");
            two_valued = true;
            break;
        case Op::ray_from_angle: {
            expect_point(0);
            expect_point(1);
            const Arg& deg = s.args[2];
            if (deg.kind == ArgKind::ident) {
                if (lookup(deg.text, at(2)) != Sym::angle_param) throw type_error(2, "an angle parameter or number");
            } else if (deg.kind != ArgKind::number) {
                throw type_error(2, "an angle parameter or number");
            }
            if (s.args[3].kind != ArgKind::side) throw type_error(3, "ccw or cw");
            break;
        }
        case Op::circle: {
            expect_point(0);
            const Arg& r = s.args[1];
            if (r.kind == ArgKind::dist) {
                if (lookup(r.text, at(1)) != Sym::point) throw type_error(1, "dist of two points");
                if (lookup(r.text2, at(1)) != Sym::point) throw type_error(1, "dist of two points");
            } else if (r.kind == ArgKind::ident) {
                const Sym rs = lookup(r.text, at(1));
                if (rs != Sym::point && rs != Sym::length_param) {
                    throw type_error(1, "a radius (dist, point, length parameter or number)");
                }
            } else if (r.kind != ArgKind::number) {
                throw type_error(1, "a radius (dist, point, length parameter or number)");
            }
            break;
        }
    }

    for (std::size_t i = 0; i < s.args.size(); ++i) {
        const Arg& a = s.args[i];
        const bool side_ok = s.op == Op::ray_from_angle && i == 3;
        const bool dist_ok = s.op == Op::circle && i == 1;
        if ((a.kind == ArgKind::side && !side_ok) || (a.kind == ArgKind::dist && !dist_ok)) {
            throw type_error(i, "an identifier");
        }
    }

    if (result_kind(s.op) != s.kind) {
        throw ScriptError(ScriptErrc::type_error, pos, s.name,
                          op + " produces a " + stmt_keyword(result_kind(s.op)) + ", declared as " +
                              stmt_keyword(s.kind));
    }
    if (two_valued && !s.pick) {
        throw ScriptError(ScriptErrc::missing_pick, pos, s.name, "two-valued " + op + " needs a pick hint");
    }
    if (!two_valued && s.pick) {
        throw ScriptError(ScriptErrc::unexpected_pick, pick_pos.line ? pick_pos : pos, "pick",
                          op + " has a single result");
    }
    if (s.pick) {
        const PickKind k = s.pick->kind;
        const bool needs_ref = k == PickKind::closest_to || k == PickKind::farthest_from || k == PickKind::distinct_from;
        if (needs_ref) {
            if (lookup(s.pick->ref, pick_pos.line ? pick_pos : pos) != Sym::point) {
                throw ScriptError(ScriptErrc::type_error, pick_pos.line ? pick_pos : pos, s.pick->ref,
                                  "pick reference must be a point");
            }
        } else if (!s.pick->ref.empty()) {
            throw ScriptError(ScriptErrc::syntax_error, pick_pos.line ? pick_pos : pos, s.pick->ref,
                              std::string(pick_name(k)) + " takes no reference");
        }
    }
    define(s.name, sym_of(s.kind), pos);
}

void Checker::add_export(const std::string& name, SourcePos pos) {
    const Sym s = lookup(name, pos);
    if (s != Sym::point && s != Sym::angle) {
        throw ScriptError(ScriptErrc::type_error, pos, name, "only points and angles can be exported, '" + name +
                                                                 "' is a " + sym_name(s));
    }
    if (!exported_.insert(name).second) throw ScriptError(ScriptErrc::duplicate_name, pos, name, "exported twice");
}

}  // namespace detail

void validate(const ConstructionProgram& p) {
    detail::Checker checker;
    for (const Param& param : p.params) checker.add_param(param, {});
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const SourcePos pos = i < p.step_pos.size() ? p.step_pos[i] : SourcePos{static_cast<int>(i + 1), 0};
        checker.add_step(p.steps[i], pos);
    }
    for (const std::string& e : p.exports) checker.add_export(e, {});
}

ProgramBuilder& ProgramBuilder::param(std::string name, ParamKind kind) {
    program_.params.push_back({std::move(name), kind});
    return *this;
}

ProgramBuilder& ProgramBuilder::point(std::string name, std::string x, std::string y) {
    return step(StmtKind::point, std::move(name), Op::coord, {num(std::move(x)), num(std::move(y))});
}

ProgramBuilder& ProgramBuilder::step(StmtKind kind, std::string name, Op op, std::vector<Arg> args,
                                     std::optional<PickHint> pick, bool optional) {
    program_.steps.push_back({kind, std::move(name), op, std::move(args), std::move(pick), optional});
    return *this;
}

ProgramBuilder& ProgramBuilder::exports(std::vector<std::string> names) {
    for (auto& n : names) program_.exports.push_back(std::move(n));
    return *this;
}

ConstructionProgram ProgramBuilder::build() const {
    validate(program_);
    return program_;
}

}  // namespace trisect::script
