#include "trisect/verifier.hpp"

#include <algorithm>
#include <cmath>

namespace trisect::verifier {

namespace {

// Headline trisection equalities per method.
const std::vector<Claim>& trisection_claims(MethodId id) {
    static const std::vector<Claim> m1 = {*find_claim("m1.trisected")};
    static const std::vector<Claim> m2 = {*find_claim("m2.eda"), *find_claim("m2.fde"), *find_claim("m2.gdf"),
                                          *find_claim("m2.eka"), *find_claim("m2.fke"), *find_claim("m2.gkf")};
    static const std::vector<Claim> m3 = {{"m3.bot_third_beta",
                                           MethodId::method3_similar,
                                           ClaimForm::linear,
                                           {{{"bot", {1, 1}}}, {0, 1}},
                                           {{{"beta", {1, 3}}}, {0, 1}},
                                           kAngleTolerance,
                                           "BOT is a third of BOA"}};
    switch (id) {
        case MethodId::method1_equilateral: return m1;
        case MethodId::method2_central: return m2;
        case MethodId::method3_similar: return m3;
    }
    return m1;
}

}  // namespace

std::vector<double> Grid::points() const {
    std::vector<double> out;
    if (!(step > 0) || stop < start) return out;
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

bool SweepReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
}

const ClaimSummary* SweepReport::claim(std::string_view id) const {
    for (const auto& s : summary) {
        if (s.claim_id == id) return &s;
    }
    return nullptr;
}

namespace detail {

void check_grid(MethodId id, const Grid& grid, const methods::RunOptions& run) {
    if (!(grid.step > 0) || !std::isfinite(grid.step)) throw VerifyError(VerifyErrc::bad_step, "grid step must be positive");
    if (!(grid.stop >= grid.start)) throw VerifyError(VerifyErrc::bad_step, "grid stop is below grid start");
    const methods::Interval iv = methods::theta_range(id, run);
    for (double t : grid.points()) {
        if (!iv.contains(t)) {
            throw VerifyError(VerifyErrc::grid_out_of_range,
                              std::string(methods::short_name(id)) + ": grid point " + sig_digits(t) +
                                  " outside (" + sig_digits(iv.lo) + ", " + sig_digits(iv.hi) + ")");
        }
    }
}

PointOutcome evaluate_point(MethodId id, double theta, const SweepOptions& opts) {
    PointOutcome out;
    out.theta = theta;
    scalar::with_backend(opts.backend, [&]<typename Real>() {
        std::optional<methods::MethodReport<Real>> report;
        try {
            report = methods::run_method<Real>(id, {Real(theta)}, opts.backend, opts.run);
        } catch (const engine::ExecutionError& e) {
            out.excluded = e.what();
            return;
        } catch (const methods::MethodError& e) {
            out.excluded = e.what();
            return;
        }
        for (const Claim& c : claims(id)) {
            const double r = scalar::to_double(residual(c, *report));
            const double tol = opts.tolerance.value_or(c.tolerance);
            out.results.push_back({c.id, theta, r, std::fabs(r) <= tol});
        }
    });
    return out;
}

SweepReport assemble(MethodId id, const Grid& grid, const SweepOptions& opts, std::vector<PointOutcome> points) {
    std::stable_sort(points.begin(), points.end(),
                     [](const PointOutcome& a, const PointOutcome& b) { return a.theta < b.theta; });
    SweepReport rep;
    rep.method = id;
    rep.grid = grid;
    rep.backend = opts.backend.name;
    for (const Claim& c : claims(id)) rep.summary.push_back({c.id, 0, 0, 0, 0, 0});

    for (auto& p : points) {
        if (p.excluded) {
            rep.excluded.push_back({p.theta, *p.excluded});
            for (auto& s : rep.summary) ++s.excluded;
            continue;
        }
        for (std::size_t i = 0; i < p.results.size(); ++i) {
            const ClaimResult& r = p.results[i];
            ClaimSummary& s = rep.summary[i];
            (r.pass ? s.passed : s.failed)++;
            const double mag = std::isnan(r.residual) ? HUGE_VAL : std::fabs(r.residual);
            if (mag > s.max_residual || (s.passed + s.failed == 1)) {
                s.max_residual = mag;
                s.worst_theta = r.theta;
            }
            rep.max_residual = std::max(rep.max_residual, mag);
            rep.results.push_back(r);
        }
    }
    if (opts.find_fixed_points) rep.fixed_points = methods::fixed_points(id, opts.backend, opts.run);
    return rep;
}

}  // namespace detail

SweepReport sweep(MethodId id, const Grid& grid, const SweepOptions& opts) {
    detail::check_grid(id, grid, opts.run);
    const std::vector<double> thetas = grid.points();
    std::vector<detail::PointOutcome> points(thetas.size());
    const auto n = static_cast<long>(thetas.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        points[static_cast<std::size_t>(i)] = detail::evaluate_point(id, thetas[static_cast<std::size_t>(i)], opts);
    }
    return detail::assemble(id, grid, opts, std::move(points));
}

ClaimResult check_trisection(MethodId id, double theta_deg, const scalar::Backend& backend,
                             const methods::RunOptions& run) {
    ClaimResult out{std::string(methods::short_name(id)) + ".trisection", theta_deg, 0, true};
    scalar::with_backend(backend, [&]<typename Real>() {
        const auto report = methods::run_method<Real>(id, {Real(theta_deg)}, backend, run);
        for (const Claim& c : trisection_claims(id)) {
            const double r = scalar::to_double(residual(c, report));
            if (!(std::fabs(r) <= std::fabs(out.residual))) out.residual = r;
            if (!(std::fabs(r) <= c.tolerance)) out.pass = false;
        }
    });
    return out;
}

std::vector<double> find_fixed_points(MethodId id, const scalar::Backend& backend, const methods::RunOptions& run) {
    return methods::fixed_points(id, backend, run, 1e-12);
}

}  // namespace trisect::verifier
