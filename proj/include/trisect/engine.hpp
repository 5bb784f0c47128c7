#pragma once

#include "trisect/geom.hpp"
#include "trisect/scalar.hpp"
#include "trisect/script.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace trisect::engine {

using geom::Circle;
using geom::Line;
using geom::Point;
using geom::Ray;
using scalar::AngleDeg;

/// A measured angle kept in the environment by `angle` statements.
template <typename Real>
struct AngleMark {
    std::string vertex;
    std::string arm1;
    std::string arm2;
    AngleDeg<Real> value;

    friend bool operator==(const AngleMark&, const AngleMark&) = default;
};

template <typename Real>
using Object = std::variant<Point<Real>, Line<Real>, Circle<Real>, Ray<Real>, AngleMark<Real>>;

template <typename Real>
using Bindings = std::map<std::string, Real>;

/// Named results of an execution, in insertion order.
template <typename Real>
class Environment {
public:
    void insert(const std::string& name, Object<Real> obj);

    const Object<Real>* find(const std::string& name) const;
    /// Throws ExecutionError(unknown_name / not_a_point).
    const Point<Real>& point(const std::string& name) const;

    const std::vector<std::pair<std::string, Object<Real>>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Exported names whose step produced a value.
    const std::vector<std::string>& exports() const { return exports_; }
    void set_exports(std::vector<std::string> names) { exports_ = std::move(names); }

    friend bool operator==(const Environment& a, const Environment& b) {
        return a.entries_ == b.entries_ && a.exports_ == b.exports_;
    }

private:
    std::vector<std::pair<std::string, Object<Real>>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::string> exports_;
};

template <typename Real>
struct TraceEntry {
    std::size_t index = 0;
    script::Step step;
    /// Empty when an optional step was skipped.
    std::optional<Object<Real>> produced;
    std::string skipped_reason;
};

template <typename Real>
using Trace = std::vector<TraceEntry<Real>>;

enum class ExecErrc {
    degenerate_construction,
    ambiguous_pick,
    unknown_name,
    not_a_point,
    missing_binding,
};

const char* to_string(ExecErrc code);

class ExecutionError : public std::runtime_error {
public:
    ExecutionError(ExecErrc code, std::optional<std::size_t> step, const std::string& what,
                   std::optional<geom::GeomErrc> cause = {})
        : std::runtime_error(what), code_(code), step_(step), cause_(cause) {}

    ExecErrc code() const { return code_; }
    /// Index of the failing step, if the failure happened inside one.
    std::optional<std::size_t> step() const { return step_; }
    /// Kernel error behind a degenerate construction, if any.
    std::optional<geom::GeomErrc> cause() const { return cause_; }

private:
    ExecErrc code_;
    std::optional<std::size_t> step_;
    std::optional<geom::GeomErrc> cause_;
};

template <typename Real>
struct Execution {
    Environment<Real> env;
    Trace<Real> trace;
};

/// Runs every step in order. Kernel failures inside a step surface as
/// degenerate_construction carrying the step index and the kernel cause;
/// optional steps absorb them instead.
template <typename Real>
Execution<Real> execute(const script::ConstructionProgram& program, const Bindings<Real>& bindings,
                        const scalar::Backend& backend);

template <typename Real>
AngleDeg<Real> measure_angle(const Environment<Real>& env, const std::string& vertex, const std::string& p,
                             const std::string& q, const scalar::Backend& backend);

/// Converts decimal text bindings at the current working precision.
template <typename Real>
Bindings<Real> bind(const std::map<std::string, std::string>& text);

extern template class Environment<double>;
extern template class Environment<scalar::BigFloat>;

}  // namespace trisect::engine
