#pragma once

#include "trisect/methods.hpp"
#include "trisect/scalar.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisect::verifier {

using methods::MethodId;

struct Rational {
    int num = 0;
    int den = 1;
};

struct Term {
    std::string field;
    Rational coef{1, 1};
};

/// Sum of coefficient-weighted report fields plus a constant.
struct Expr {
    std::vector<Term> terms;
    Rational constant{0, 1};
};

enum class ClaimForm {
    /// lhs - rhs, in degrees.
    linear,
    /// lhs - deg(atan(tan(theta) / 3)), in degrees; rhs is unused.
    tan_third,
    /// (lhs - rhs) / rhs, dimensionless; used for lengths.
    relative,
};

struct Claim {
    std::string id;
    MethodId method;
    ClaimForm form = ClaimForm::linear;
    Expr lhs;
    Expr rhs;
    double tolerance = 1e-9;
    std::string description;
};

inline constexpr double kAngleTolerance = 1e-9;
inline constexpr double kLengthTolerance = 1e-12;

/// Every claim registered for a method, in report order.
const std::vector<Claim>& claims(MethodId id);
const Claim* find_claim(std::string_view id);

/// Signed residual of `c` evaluated on `r`.
template <typename Real>
Real residual(const Claim& c, const methods::MethodReport<Real>& r);

struct ClaimResult {
    std::string claim_id;
    double theta = 0;
    double residual = 0;
    bool pass = false;
};

struct Grid {
    double start = 0;
    double stop = 0;
    double step = 0;

    /// start + i*step for every i with the value not beyond stop.
    std::vector<double> points() const;
};

struct ClaimSummary {
    std::string claim_id;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t excluded = 0;
    double max_residual = 0;
    double worst_theta = 0;
};

struct Exclusion {
    double theta = 0;
    std::string reason;
};

struct SweepReport {
    MethodId method{};
    Grid grid;
    std::string backend;
    /// One row per (theta, claim), sorted by theta then registry order.
    std::vector<ClaimResult> results;
    std::vector<ClaimSummary> summary;
    std::vector<Exclusion> excluded;
    std::vector<double> fixed_points;
    double max_residual = 0;

    bool all_pass() const;
    const ClaimSummary* claim(std::string_view id) const;
};

struct SweepOptions {
    scalar::Backend backend;
    methods::RunOptions run;
    /// Replaces every claim tolerance when set.
    std::optional<double> tolerance;
    bool find_fixed_points = true;
};

enum class VerifyErrc { grid_out_of_range, bad_step };

class VerifyError : public std::runtime_error {
public:
    VerifyError(VerifyErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    VerifyErrc code() const { return code_; }

private:
    VerifyErrc code_;
};

/// Evaluates every claim at every grid point; grid points run in parallel.
SweepReport sweep(MethodId id, const Grid& grid, const SweepOptions& opts);
/// Single-threaded version of `sweep`; identical output.
SweepReport sweep_reference(MethodId id, const Grid& grid, const SweepOptions& opts);

/// Headline trisection check at one angle. The residual is the largest
/// over the equalities involved.
ClaimResult check_trisection(MethodId id, double theta_deg, const scalar::Backend& backend,
                             const methods::RunOptions& run = {});

std::vector<double> find_fixed_points(MethodId id, const scalar::Backend& backend, const methods::RunOptions& run = {});

enum class ReportFormat { text, json_lines, csv };

std::optional<ReportFormat> parse_format(std::string_view text);

void write_report(std::ostream& out, const SweepReport& report, ReportFormat format);

/// Shortest decimal that round-trips to `v`.
std::string shortest(double v);
/// `digits` significant digits, trailing zeros dropped, no negative zero.
std::string sig_digits(double v, int digits = 12);

namespace detail {

struct PointOutcome {
    double theta = 0;
    std::vector<ClaimResult> results;
    std::optional<std::string> excluded;
};

void check_grid(MethodId id, const Grid& grid, const methods::RunOptions& run);
PointOutcome evaluate_point(MethodId id, double theta, const SweepOptions& opts);
SweepReport assemble(MethodId id, const Grid& grid, const SweepOptions& opts, std::vector<PointOutcome> points);

}  // namespace detail

}  // namespace trisect::verifier
