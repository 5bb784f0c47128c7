#include "trisect/verifier.hpp"

namespace trisect::verifier {

// Plain loop over the grid, kept as the baseline for the parallel runner.
SweepReport sweep_reference(MethodId id, const Grid& grid, const SweepOptions& opts) {
    detail::check_grid(id, grid, opts.run);
    std::vector<detail::PointOutcome> points;
    for (double theta : grid.points()) points.push_back(detail::evaluate_point(id, theta, opts));
    return detail::assemble(id, grid, opts, std::move(points));
}

}  // namespace trisect::verifier
