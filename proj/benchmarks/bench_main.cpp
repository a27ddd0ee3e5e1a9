#include <benchmark/benchmark.h>

#include "gevrey/arith.hpp"
#include "gevrey/parser.hpp"
#include "gevrey/solutions.hpp"
#include "gevrey/weyl.hpp"
#include "random_ops.hpp"

using namespace gevrey;

namespace {

void weyl_product(benchmark::State& state) {
  cli::Rng rng(1);
  int deg = static_cast<int>(state.range(0));
  DiffOp a = cli::random_diffop(rng, deg, deg), b = cli::random_diffop(rng, deg, deg);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(weyl_product)->Arg(2)->Arg(4)->Arg(8);

void lclm_orders(benchmark::State& state) {
  DiffOp a = parse_diffop("D^2 - z"), b = parse_diffop("z*D^2 + (1-z)*D - 1");
  for (auto _ : state) benchmark::DoNotOptimize(lclm(a, b));
}
BENCHMARK(lclm_orders);

void frobenius_airy(benchmark::State& state) {
  DiffOp airy = parse_diffop("D^2 - z");
  auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_basis(airy, 0, N));
}
BENCHMARK(frobenius_airy)->Arg(30)->Arg(120);

void infinity_recalibrated_airy(benchmark::State& state) {
  DiffOp e = parse_diffop("9*z*D^2 + 3*D - 4*z");
  auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(infinity_basis(e, N));
}
BENCHMARK(infinity_recalibrated_airy)->Arg(10)->Arg(40);

void p_curvature_g_operator(benchmark::State& state) {
  DiffOp g = parse_diffop("(4 - 9*z^2)*D - 15*z");
  auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_curvature(g, p));
}
BENCHMARK(p_curvature_g_operator)->Arg(13)->Arg(101);

void galochkin_hypergeometric(benchmark::State& state) {
  DiffOp h = parse_diffop("T^2 - z*(T + 1/2)^2");
  auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(galochkin_sequence(h, N));
}
BENCHMARK(galochkin_hypergeometric)->Arg(40)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
