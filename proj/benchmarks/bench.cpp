#include <benchmark/benchmark.h>

#include <string>

#include "symkron/bigint.hpp"
#include "symkron/characters.hpp"
#include "symkron/fourier.hpp"
#include "symkron/group_table.hpp"
#include "symkron/gsim.hpp"
#include "symkron/kronecker.hpp"
#include "symkron/partition.hpp"
#include "symkron/qft_recursive.hpp"
#include "symkron/rng.hpp"
#include "symkron/yor.hpp"

namespace {

using namespace symkron;

Partition staircase(int k) {
  std::string text;
  for (int part = k; part >= 1; --part) {
    if (!text.empty()) text += ",";
    text += std::to_string(part);
  }
  return Partition::parse(text);
}

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterTable table(n);
    benchmark::DoNotOptimize(table.value(0, 0));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_HookDimensions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartitionList shapes(n);
  for (auto _ : state) {
    BigInt sum = 0;
    for (int i = 0; i < shapes.size(); ++i) {
      sum += hook_dimension(shapes.at(i));
    }
    benchmark::DoNotOptimize(sum.get_mpz_t());
  }
}
BENCHMARK(BM_HookDimensions)->Arg(20)->Arg(40)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_KronSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CharacterTable table(n);
  const PartitionList& shapes = table.partitions();
  for (auto _ : state) {
    BigInt total = 0;
    for (int a = 0; a < shapes.size(); ++a) {
      for (int b = 0; b < shapes.size(); ++b) {
        for (int c = 0; c < shapes.size(); ++c) {
          total += kron(table, shapes.at(a), shapes.at(b), shapes.at(c)).g;
        }
      }
    }
    benchmark::DoNotOptimize(total.get_mpz_t());
  }
}
BENCHMARK(BM_KronSweep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_QftReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qft_reference(n);
  for (auto _ : state) {
    const QftUnitary q = qft_reference(n);
    benchmark::DoNotOptimize(q.matrix.data());
  }
}
BENCHMARK(BM_QftReference)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_QftRecursive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qft_recursive(n);
  for (auto _ : state) {
    const QftUnitary q = qft_recursive(n);
    benchmark::DoNotOptimize(q.matrix.data());
  }
}
BENCHMARK(BM_QftRecursive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_YorGenerators(benchmark::State& state) {
  const Partition shape = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto generators = yor_generators(shape);
    benchmark::DoNotOptimize(generators.data());
  }
}
BENCHMARK(BM_YorGenerators)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GroupTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GroupTable table(n);
    benchmark::DoNotOptimize(table.compose(1, 2));
  }
}
BENCHMARK(BM_GroupTable)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_WitnessTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition shape = n == 3 ? Partition::parse("2,1")
                                 : Partition::parse("2,1,1");
  for (auto _ : state) {
    const BigRat trace = witness_projector_trace(shape, shape, shape);
    benchmark::DoNotOptimize(trace.get_mpq_t());
  }
}
BENCHMARK(BM_WitnessTrace)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KronSamplerDraw(benchmark::State& state) {
  const Partition mu = Partition::parse("2,1,1");
  KronSampler sampler(mu, mu, 42);
  sampler.mixture_distribution();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.sample());
  }
}
BENCHMARK(BM_KronSamplerDraw);

}  // namespace

BENCHMARK_MAIN();
