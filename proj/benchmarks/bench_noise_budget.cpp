#include <benchmark/benchmark.h>

#include "qn/app/config.hpp"
#include "qn/app/sweep.hpp"
#include "qn/noise_budget.hpp"

namespace {

void BM_BudgetPoint(benchmark::State& state) {
    const auto option = static_cast<qn::LoOption>(state.range(0));
    qn::PlantParams p = qn::presets::glasgow_ssm();
    p.r_bs = 0.501L;
    const qn::Real omega = qn::hz_to_angular(100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qn::noise_budget(option, p, qn::constants::pi / 2, omega));
    }
}
BENCHMARK(BM_BudgetPoint)
    ->Arg(static_cast<int>(qn::LoOption::Direct))
    ->Arg(static_cast<int>(qn::LoOption::Bsar))
    ->Arg(static_cast<int>(qn::LoOption::CoMoving));

void BM_RinPoint(benchmark::State& state) {
    qn::PlantParams p = qn::presets::glasgow_ssm();
    p.r_bs = 0.501L;
    const qn::Real omega = qn::hz_to_angular(100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qn::rin_requirement(qn::LoOption::CoMoving, p, qn::constants::pi / 2, omega));
    }
}
BENCHMARK(BM_RinPoint);

void BM_Sweep(benchmark::State& state) {
    qn::app::RunConfig cfg = qn::app::parse_config(R"(
[plant]
preset = glasgow-ssm
r_bs = 0.501
[scenario]
lo = direct
[scenario]
lo = comoving
[scenario]
lo = bsar
[output]
quantities = budget
)");
    cfg.grid.points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qn::app::run_sweep(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}
BENCHMARK(BM_Sweep)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
