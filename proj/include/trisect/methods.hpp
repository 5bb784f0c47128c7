#pragma once

#include "trisect/engine.hpp"
#include "trisect/scalar.hpp"
#include "trisect/script.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace trisect::methods {

using scalar::AngleDeg;

enum class MethodId { method1_equilateral, method2_central, method3_similar };

inline constexpr MethodId kAllMethods[] = {MethodId::method1_equilateral, MethodId::method2_central,
                                           MethodId::method3_similar};

/// "method1", "method2", "method3".
const char* short_name(MethodId id);
/// Accepts the short name or the full enum name.
std::optional<MethodId> parse_method(std::string_view text);

/// Open interval of admissible given angles, in degrees.
struct Interval {
    double lo = 0;
    double hi = 0;

    bool contains(double v) const { return v > lo && v < hi; }
};

struct RunOptions {
    /// Method I only: also admit given angles in (60, 90), where E falls
    /// outside the equilateral triangle.
    bool exterior = false;
};

/// Valid given-angle interval. With `exterior` set, Method I spans (0, 90)
/// and excludes 60 itself.
Interval theta_range(MethodId id, const RunOptions& opts = {});
bool theta_admissible(MethodId id, double theta_deg, const RunOptions& opts = {});
/// Admissible targets for inverse_seed.
Interval target_range(MethodId id);
/// Sweep grid used when the caller gives none.
struct DefaultGrid {
    double start, stop, step;
};
DefaultGrid default_grid(MethodId id, const RunOptions& opts = {});

enum class MethodErrc { theta_out_of_range, target_out_of_range };

class MethodError : public std::runtime_error {
public:
    MethodError(MethodErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    MethodErrc code() const { return code_; }

private:
    MethodErrc code_;
};

/// Built-in construction program; parsed from nothing, assembled in code.
const script::ConstructionProgram& builtin(MethodId id);

template <typename Real>
using Field = std::pair<std::string_view, Real>;

/// Equilateral triangle construction. `beta` and `hbe` are signed: they are
/// negative when E lies outside triangle HAB.
template <typename Real>
struct Method1Report {
    AngleDeg<Real> theta;
    AngleDeg<Real> beta;  // GEB
    AngleDeg<Real> hbe;
    AngleDeg<Real> dba;
    AngleDeg<Real> aeg;
    AngleDeg<Real> hba;
    AngleDeg<Real> fga;
    AngleDeg<Real> afg;
    bool e_outside_hab = false;

    std::vector<Field<Real>> fields() const;
};

/// Central angle construction.
template <typename Real>
struct Method2Report {
    AngleDeg<Real> theta;
    AngleDeg<Real> eab;
    AngleDeg<Real> beta;   // GDA
    AngleDeg<Real> alpha;  // GKA
    AngleDeg<Real> eta;    // EBA
    AngleDeg<Real> phi;    // theta - alpha
    AngleDeg<Real> eda, fde, gdf;
    AngleDeg<Real> eka, fke, gkf;
    AngleDeg<Real> aed;
    AngleDeg<Real> eaf, gaf;
    AngleDeg<Real> bag;
    Real ae{}, ef{}, fg{}, da{}, de{};

    std::vector<Field<Real>> fields() const;
};

/// Similar triangles construction with OB = 1, OC = 2.
template <typename Real>
struct Method3Report {
    AngleDeg<Real> theta;
    AngleDeg<Real> boe;
    AngleDeg<Real> beta;  // BOA
    AngleDeg<Real> mcd;
    AngleDeg<Real> bot;
    AngleDeg<Real> odl;
    AngleDeg<Real> lao;
    AngleDeg<Real> mod;
    /// Reported without a name of its own; the relation it takes part in is
    /// not pinned down for this construction.
    AngleDeg<Real> theta_minus_beta;
    Real cd{}, od{}, oa{};

    std::vector<Field<Real>> fields() const;
};

template <typename Real>
using MethodReport = std::variant<Method1Report<Real>, Method2Report<Real>, Method3Report<Real>>;

template <typename Real>
struct MethodRun {
    MethodReport<Real> report;
    engine::Execution<Real> execution;
};

/// Executes the built-in program at `theta` and measures the report from the
/// resulting environment. Throws MethodError(theta_out_of_range) or
/// propagates engine::ExecutionError.
template <typename Real>
MethodRun<Real> run_method_full(MethodId id, const AngleDeg<Real>& theta, const scalar::Backend& backend,
                                const RunOptions& opts = {});

template <typename Real>
MethodReport<Real> run_method(MethodId id, const AngleDeg<Real>& theta, const scalar::Backend& backend,
                              const RunOptions& opts = {}) {
    return run_method_full(id, theta, backend, opts).report;
}

template <typename Real>
std::vector<Field<Real>> report_fields(const MethodReport<Real>& r) {
    return std::visit([](const auto& x) { return x.fields(); }, r);
}

/// The angle compared against theta for fixed points: beta (I, III) or alpha (II).
template <typename Real>
Real derived_angle(const MethodReport<Real>& r) {
    if (const auto* m2 = std::get_if<Method2Report<Real>>(&r)) return m2->alpha.value;
    return std::visit([](const auto& x) { return x.beta.value; }, r);
}

template <typename Real>
Real beta_of(const MethodReport<Real>& r) {
    return std::visit([](const auto& x) { return x.beta.value; }, r);
}

/// Given angle whose construction yields `target_beta` as its derived beta.
template <typename Real>
AngleDeg<Real> inverse_seed(MethodId id, const AngleDeg<Real>& target_beta);

/// Sign-change bisection of derived(theta) - theta across the valid interval,
/// refined to `tol_deg`. Empty when no sign change is found.
std::vector<double> fixed_points(MethodId id, const scalar::Backend& backend, const RunOptions& opts = {},
                                 double tol_deg = 1e-12);
std::optional<double> fixed_point(MethodId id, const scalar::Backend& backend, const RunOptions& opts = {});

}  // namespace trisect::methods
