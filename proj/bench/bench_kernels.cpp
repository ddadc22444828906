// Serial reference kernels against their OpenMP counterparts on the
// pillowcase validation operator (N = 96, N_phi = 8, block of 48 vectors).

#include <benchmark/benchmark.h>

#include <random>

#include "orbihall/numerics/eigensolver.hpp"
#include "orbihall/numerics/kernels.hpp"
#include "orbihall/numerics/lattice.hpp"

namespace {

using namespace orbihall::numerics;

struct Fixture {
  HermitianOperator H;
  Block X;
  Block Y;
  Block out;

  explicit Fixture(int N, int p) : H(build_magnetic_laplacian(make_lattice_model(N, 8))) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    X.resize(H.dimension(), p);
    for (Eigen::Index j = 0; j < X.cols(); ++j)
      for (Eigen::Index i = 0; i < X.rows(); ++i) X(i, j) = {g(rng), g(rng)};
    Y = X;
  }
};

Fixture& fixture() {
  static Fixture f(96, 48);
  return f;
}

template <Execution E>
void BM_apply(benchmark::State& state) {
  Fixture& f = fixture();
  const Kernels k{E};
  for (auto _ : state) {
    k.apply(f.H, f.X, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
}

template <Execution E>
void BM_chebyshev_step(benchmark::State& state) {
  Fixture& f = fixture();
  const Kernels k{E};
  for (auto _ : state) {
    k.chebyshev_step(f.H, f.Y, f.X, 4.0, 0.5, -0.25, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
}

template <Execution E>
void BM_gram(benchmark::State& state) {
  Fixture& f = fixture();
  const Kernels k{E};
  for (auto _ : state) {
    auto G = k.gram(f.X, 0, 48, f.Y, 0, 48);
    benchmark::DoNotOptimize(G.data());
  }
}

template <Execution E>
void BM_combine(benchmark::State& state) {
  Fixture& f = fixture();
  const Kernels k{E};
  const Eigen::MatrixXcd C = Eigen::MatrixXcd::Identity(48, 48);
  for (auto _ : state) {
    Block B = k.combine(f.X, 0, 48, C);
    benchmark::DoNotOptimize(B.data());
  }
}

template <Execution E>
void BM_spectrum_lowest(benchmark::State& state) {
  const HermitianOperator H = build_magnetic_laplacian(make_lattice_model(64, 8));
  EigensolverOptions opts;
  opts.exec = E;
  for (auto _ : state) {
    auto eig = spectrum_lowest(H, 28, 1e-10, opts);
    benchmark::DoNotOptimize(eig.values.data());
  }
}

}  // namespace

BENCHMARK(BM_apply<Execution::serial>);
BENCHMARK(BM_apply<Execution::parallel>);
BENCHMARK(BM_chebyshev_step<Execution::serial>);
BENCHMARK(BM_chebyshev_step<Execution::parallel>);
BENCHMARK(BM_gram<Execution::serial>);
BENCHMARK(BM_gram<Execution::parallel>);
BENCHMARK(BM_combine<Execution::serial>);
BENCHMARK(BM_combine<Execution::parallel>);
BENCHMARK(BM_spectrum_lowest<Execution::serial>)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_spectrum_lowest<Execution::parallel>)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
