#pragma once

#include "trisect/geom.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisect::script {

// Construction scripts (.gcs) are straight-line programs, one statement per
// line:
//
//   param theta: angle
//   point A = (0, 0)
//   line ab = line_through(A, B)
//   ray r = ray_from_angle(A, B, theta, ccw)
//   circle c1 = circle(D, dist(D, A))
//   point E = intersect(r, c1) pick distinct_from(A)
//   point K = intersect(oa, be) optional
//   angle GEB = angle_at(E, G, B)
//   export A, B, E
//
// '#' starts a comment. Identifiers are single-assignment and must be defined
// before use. Two-valued intersections (any operand is a circle) require a
// pick hint. `optional` marks a step whose geometric failure leaves the name
// unbound instead of aborting the run.

struct ScriptSource {
    std::string text;
    std::string name;
};

enum class ParamKind { angle, length };

struct Param {
    std::string name;
    ParamKind kind = ParamKind::angle;

    friend bool operator==(const Param&, const Param&) = default;
};

enum class StmtKind { point, line, ray, circle, angle };

enum class Op {
    coord,
    line_through,
    midpoint,
    perpendicular_bisector,
    perpendicular_at,
    angle_bisector,
    intersect,
    intersect_line_line,
    intersect_line_circle,
    intersect_circle_circle,
    ray_from_angle,
    circle,
    angle_at,
};

enum class ArgKind { ident, number, side, dist };

/// One call argument. `text` holds the identifier, the literal as written,
/// or "ccw"/"cw"; `dist` arguments keep their two point names in `text` and
/// `text2`.
struct Arg {
    ArgKind kind = ArgKind::ident;
    std::string text;
    std::string text2;

    friend bool operator==(const Arg&, const Arg&) = default;
};

enum class PickKind { closest_to, farthest_from, distinct_from, upper, lower };

struct PickHint {
    PickKind kind = PickKind::upper;
    std::string ref;

    friend bool operator==(const PickHint&, const PickHint&) = default;
};

struct Step {
    StmtKind kind = StmtKind::point;
    std::string name;
    Op op = Op::coord;
    std::vector<Arg> args;
    std::optional<PickHint> pick;
    bool optional = false;

    friend bool operator==(const Step&, const Step&) = default;
};

struct SourcePos {
    int line = 0;
    int column = 0;
};

struct ConstructionProgram {
    std::string name;
    std::vector<Param> params;
    std::vector<Step> steps;
    std::vector<std::string> exports;
    /// Source position of each step (parallel to `steps`); not part of equality.
    std::vector<SourcePos> step_pos;

    /// Structural equality: params, steps and exports.
    friend bool operator==(const ConstructionProgram& a, const ConstructionProgram& b) {
        return a.params == b.params && a.steps == b.steps && a.exports == b.exports;
    }
};

enum class ScriptErrc {
    syntax_error,
    undefined_identifier,
    arity_error,
    missing_pick,
    duplicate_name,
    type_error,
    unexpected_pick,
};

const char* to_string(ScriptErrc code);

class ScriptError : public std::runtime_error {
public:
    ScriptError(ScriptErrc code, SourcePos pos, std::string token, const std::string& message);

    ScriptErrc code() const { return code_; }
    SourcePos pos() const { return pos_; }
    const std::string& token() const { return token_; }

private:
    ScriptErrc code_;
    SourcePos pos_;
    std::string token_;
};

/// Parses a whole script. Either returns a complete, checked program or
/// throws exactly one ScriptError.
ConstructionProgram parse(const ScriptSource& src);

/// Canonical text form; comments and layout are not preserved.
ScriptSource format(const ConstructionProgram& p);

/// Static checks shared by the parser and programmatic builders.
void validate(const ConstructionProgram& p);

const char* op_name(Op op);
const char* stmt_keyword(StmtKind kind);
const char* pick_name(PickKind kind);

/// Convenience for building programs in code.
class ProgramBuilder {
public:
    explicit ProgramBuilder(std::string name) { program_.name = std::move(name); }

    ProgramBuilder& param(std::string name, ParamKind kind);
    ProgramBuilder& point(std::string name, std::string x, std::string y);
    ProgramBuilder& step(StmtKind kind, std::string name, Op op, std::vector<Arg> args,
                         std::optional<PickHint> pick = {}, bool optional = false);
    ProgramBuilder& exports(std::vector<std::string> names);

    /// Validates and returns the program; throws ScriptError on misuse.
    ConstructionProgram build() const;

private:
    ConstructionProgram program_;
};

inline Arg id(std::string name) { return {ArgKind::ident, std::move(name), {}}; }
inline Arg num(std::string literal) { return {ArgKind::number, std::move(literal), {}}; }
inline Arg side(geom::Side s) { return {ArgKind::side, s == geom::Side::ccw ? "ccw" : "cw", {}}; }
inline Arg dist(std::string p, std::string q) { return {ArgKind::dist, std::move(p), std::move(q)}; }
inline PickHint pick(PickKind kind, std::string ref = {}) { return {kind, std::move(ref)}; }

}  // namespace trisect::script
