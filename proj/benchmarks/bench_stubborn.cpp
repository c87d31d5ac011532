#include <benchmark/benchmark.h>

#include "stubborn/blowup.hpp"
#include "stubborn/fixtures.hpp"
#include "stubborn/newton.hpp"
#include "stubborn/realroots.hpp"
#include "stubborn/sos.hpp"
#include "stubborn/stubborn.hpp"

using namespace stubborn;

namespace {

Polynomial fixture(int which) {
  switch (which) {
    case 0: return fixtures::motzkin();
    case 1: return fixtures::robinson();
    case 2: return fixtures::choi_lam_s();
    case 3: return fixtures::stengle_t();
    default: return fixtures::octic();
  }
}

const char* kNames[] = {"M", "R", "S", "T", "octic"};

}  // namespace

static void BM_LocateRealZeros(benchmark::State& state) {
  Polynomial P = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(locate_real_zeros(P));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_LocateRealZeros)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_CertifyStubborn(benchmark::State& state) {
  Polynomial P = fixture(static_cast<int>(state.range(0)));
  CertifyOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_stubborn(P, std::nullopt, options));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_CertifyStubborn)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_DeltaAtPoint(benchmark::State& state) {
  Polynomial T = fixtures::stengle_t();
  ProjectivePoint X = ProjectivePoint::parse(state.range(0) == 0 ? "[0:0:1]" : "[0:1:0]");
  for (auto _ : state) benchmark::DoNotOptimize(delta_at_point(T, X));
}
BENCHMARK(BM_DeltaAtPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_ExactNonSos(benchmark::State& state) {
  Polynomial M = fixtures::motzkin();
  for (auto _ : state) benchmark::DoNotOptimize(exact_nonsos_test(M));
}
BENCHMARK(BM_ExactNonSos)->Unit(benchmark::kMicrosecond);

static void BM_SdpMotzkinFamilyPower(benchmark::State& state) {
  Polynomial P = power(fixtures::motzkin_a(1), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdp_feasibility(P));
}
BENCHMARK(BM_SdpMotzkinFamilyPower)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SdpSpherePlusMotzkin(benchmark::State& state) {
  // Full-basis solve without parity blocks.
  Polynomial P = fixtures::motzkin() + fixtures::sphere_power(3);
  for (auto _ : state) benchmark::DoNotOptimize(sdp_feasibility(P, {}, state.range(0) != 0));
}
BENCHMARK(BM_SdpSpherePlusMotzkin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_StengleThreshold(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(threshold_bisection("c", stengle_probe(), 0, 4, mpq_class(1, 10000)));
}
BENCHMARK(BM_StengleThreshold)->Unit(benchmark::kMillisecond);

static void BM_ExactRootsTruncatedBinomial(benchmark::State& state) {
  RatPoly f = truncated_binomial(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_roots(f));
}
BENCHMARK(BM_ExactRootsTruncatedBinomial)->DenseRange(5, 13, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
