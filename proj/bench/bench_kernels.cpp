// Serial against OpenMP quadrature kernels on one patch of printed_a,
// refined to k = 2^L - 1 interior knots.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "c2iga/assembly.hpp"
#include "c2iga/io.hpp"

using namespace c2iga;

namespace {

struct Setup {
  SplineSpace space;
  TwoPatchGeometry geom;
  QuadratureRule rule;
  std::vector<double> coeffs;
};

Setup make_setup(int level) {
  const auto file = read_geometry(std::string(C2IGA_DATA_DIR) + "/printed_a.json");
  const KnotVector kv = KnotVector::uniform(5, 2, (1 << level) - 1);
  SplineSpace sp(kv);
  TwoPatchGeometry geom = file.geometry.refined(kv, 2);
  QuadratureRule rule = gauss_rule(12, sp.spans());
  std::vector<double> c(sp.dim() * sp.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::sin(0.37 * i);
  return {std::move(sp), std::move(geom), std::move(rule), std::move(c)};
}

const PointFunction kWave = [](Side, double, double, const Eigen::Vector2d& x) {
  return 2 * std::cos(2 * x.x()) * std::sin(2 * x.y());
};

template <auto Gram>
void gram(benchmark::State& state) {
  const Setup s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Gram(s.geom, Side::Left, s.space, s.rule));
}

template <auto Err>
void error(benchmark::State& state) {
  const Setup s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Err(s.geom, Side::Left, s.space, s.coeffs, kWave, s.rule));
}

}  // namespace

BENCHMARK(gram<kernels_serial::tensor_gram>)->Name("tensor_gram/serial")->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(gram<kernels_omp::tensor_gram>)->Name("tensor_gram/omp")->DenseRange(1, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(error<kernels_serial::squared_error>)->Name("squared_error/serial")->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(error<kernels_omp::squared_error>)->Name("squared_error/omp")->DenseRange(1, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
