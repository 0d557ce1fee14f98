#include <benchmark/benchmark.h>

#include "fermatiq/cm_units.hpp"
#include "fermatiq/cokernel.hpp"
#include "fermatiq/frey_curve.hpp"
#include "fermatiq/sieve.hpp"
#include "fermatiq/tables.hpp"

using namespace fermatiq;

namespace {

FreyCurve sample_curve(const Field& f) {
    return build_frey(FreyInput::make(OkElement(f, 2, 1), OkElement(f, 1, 0),
                                      OkElement(f, -1, 0), 17));
}

void BM_cokernel_phi(benchmark::State& state) {
    const Field& f = make_field(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cokernel_phi(f));
    }
}
BENCHMARK(BM_cokernel_phi)->Arg(11)->Arg(163);

void BM_trace_of_frobenius(benchmark::State& state) {
    const Field& f = make_field(19);
    FreyCurve E = sample_curve(f);
    // largest good odd prime of norm <= range
    auto primes = primes_up_to_norm(f, state.range(0));
    PrimeIdeal P = primes.back();
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
        if (it->is_odd() && reduction_type(E, *it).kind == ReductionKind::Good) {
            P = *it;
            break;
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_of_frobenius(E, P));
    }
    state.SetLabel(P.label());
}
BENCHMARK(BM_trace_of_frobenius)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_quotient_unit_group(benchmark::State& state) {
    PrimeIdeal q = inert_prime_above_2(make_field(43));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quotient_unit_group(q, n));
    }
}
BENCHMARK(BM_quotient_unit_group)->Arg(3)->Arg(4);

void BM_sieve_constant(benchmark::State& state) {
    const Field& f = make_field(11);
    SieveConfig config = make_sieve_config(f);
    FreyCurve E = sample_curve(f);
    NewformRecord rec{11, inert_prime_above_2(f), 4, HeckeField({-2, 0, 1}), {}, "bench"};
    for (const auto& P : config.S) {
        if (reduction_type(E, P).kind != ReductionKind::Good) continue;
        rec.eigenvalues.emplace(
            P.label(),
            HeckeElement(rec.hecke_field, {trace_of_frobenius(E, P), 1}));
    }
    SieveConfig usable{{}, config.p_floor};
    for (const auto& P : config.S) {
        if (rec.has_eigenvalue(P)) usable.S.push_back(P);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(constant_C(rec, usable));
    }
}
BENCHMARK(BM_sieve_constant);

void BM_unit_search(benchmark::State& state) {
    const Field& f = make_field(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unit_search(f, state.range(0)));
    }
}
BENCHMARK(BM_unit_search)->Arg(23)->Arg(97);

}  // namespace

BENCHMARK_MAIN();
