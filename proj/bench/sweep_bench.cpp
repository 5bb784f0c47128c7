#include "trisect/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace trisect;

namespace {

verifier::SweepOptions options(scalar::BackendKind kind, int bits) {
    verifier::SweepOptions o;
    o.backend = kind == scalar::BackendKind::machine ? scalar::make_backend(kind) : scalar::make_backend(kind, bits);
    o.find_fixed_points = false;
    return o;
}

verifier::Grid grid(methods::MethodId id) {
    const auto g = methods::default_grid(id);
    return {g.start, g.stop, g.step};
}

// Arguments: method index, bits (0 selects the machine backend).
template <bool Parallel>
void BM_Sweep(benchmark::State& state) {
    const auto id = methods::kAllMethods[state.range(0)];
    const int bits = static_cast<int>(state.range(1));
    const auto opts = options(bits ? scalar::BackendKind::bigfloat : scalar::BackendKind::machine, bits);
    const auto g = grid(id);
    for (auto _ : state) {
        auto r = Parallel ? verifier::sweep(id, g, opts) : verifier::sweep_reference(id, g, opts);
        benchmark::DoNotOptimize(r.max_residual);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.points().size()));
}

void args(benchmark::internal::Benchmark* b) {
    for (int m = 0; m < 3; ++m) {
        b->Args({m, 0});
        b->Args({m, 256});
    }
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Sweep<false>)->Name("sweep_serial")->Apply(args);
BENCHMARK(BM_Sweep<true>)->Name("sweep_openmp")->Apply(args);

BENCHMARK_MAIN();
