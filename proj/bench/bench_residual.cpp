// Residual checks on a dense grid: OpenMP kernel against the serial reference.
#include <benchmark/benchmark.h>

#include "dfee/problem.hpp"
#include "dfee/solver.hpp"
#include "dfee/verify.hpp"
#include "gen.hpp"

using namespace dfee;

namespace {

struct Case {
    ProblemSpec spec;
    FuzzyFunction w;
};

Case example() {
    Case c{load_problem(DFEE_DATA_DIR "/example1.json").spec, {}};
    c.w = solve(c.spec).value;
    return c;
}

Case manufactured() {
    gen::Rng rng(2024);
    gen::Manufactured mf = gen::manufactured(rng);
    return {mf.spec, mf.solution};
}

VerifyOptions dense(int side) {
    VerifyOptions o;
    o.xs.clear();
    o.ys.clear();
    for (int k = 1; k <= side; ++k) {
        o.xs.push_back(double(k) / (side + 1));
        o.ys.push_back(double(k) / (side + 1));
    }
    return o;
}

template <class Fn>
void run(benchmark::State& state, const Case& c, Fn fn) {
    const VerifyOptions o = dense(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fn(c.spec, c.w, o));
    state.SetItemsProcessed(state.iterations() * o.xs.size() * o.ys.size() * o.alphas.size());
}

void BM_ExampleParallel(benchmark::State& s) { static const Case c = example(); run(s, c, residual); }
void BM_ExampleSerial(benchmark::State& s) { static const Case c = example(); run(s, c, residual_serial); }
void BM_RandomParallel(benchmark::State& s) { static const Case c = manufactured(); run(s, c, residual); }
void BM_RandomSerial(benchmark::State& s) { static const Case c = manufactured(); run(s, c, residual_serial); }

void BM_Solve(benchmark::State& state) {
    const ProblemSpec p = load_problem(DFEE_DATA_DIR "/example1.json").spec;
    SolveOptions o;
    o.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve(p, o));
}

}  // namespace

BENCHMARK(BM_ExampleParallel)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExampleSerial)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomParallel)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSerial)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
