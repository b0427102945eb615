// Timings for the hot paths: sparse polynomial products, symbolic word
// evaluation, commutator tables, finite closures and the catalog runner.

#include "chev/decomp.hpp"
#include "chev/prooflab.hpp"
#include "chev/shacheck.hpp"

#include <benchmark/benchmark.h>

using namespace chev;
using chevgroup::Realization;
using exactring::RingSpec;
using rootsys::SystemType;

static void BM_PolyProduct(benchmark::State& st) {
    auto s = RingSpec::poly({"a", "b", "c", "d"});
    auto p = exactring::parse_element(s, "(a+2*b-c+3*d+1)^" + std::to_string(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyProduct)->Arg(3)->Arg(5)->Arg(7);

static void BM_FractionArithmetic(benchmark::State& st) {
    auto s = RingSpec::fraction({"u", "v"});
    auto x = exactring::parse_element(s, "u/(1+u*v)"), y = exactring::parse_element(s, "v/(1+u*v)");
    for (auto _ : st) benchmark::DoNotOptimize(x * y + x - y);
}
BENCHMARK(BM_FractionArithmetic);

static void BM_SymbolicWord(benchmark::State& st) {
    auto t = SystemType(st.range(0));
    auto s = RingSpec::poly({"t", "u"});
    chevgroup::WordContext ctx{t, {}};
    auto roots = rootsys::positive_roots(t);
    std::string w = "[x(" + roots[0].to_string() + ",t), x(" + roots[1 % roots.size()].to_string() + ",u)]";
    if (t == SystemType::A1) w = "x(a,t) x(-a,u) x(a,t)";
    for (auto _ : st) benchmark::DoNotOptimize(chevgroup::evaluate_word(ctx, Realization::Adjoint, s, w));
    st.SetLabel(rootsys::type_name(t));
}
BENCHMARK(BM_SymbolicWord)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_CommutatorTable(benchmark::State& st) {
    for (auto _ : st)
        for (auto& g : rootsys::all_roots(SystemType::G2))
            for (auto& d : rootsys::all_roots(SystemType::G2))
                if (g != d && g != -d) benchmark::DoNotOptimize(chevgroup::commutator_relation(SystemType::G2, g, d));
}
BENCHMARK(BM_CommutatorTable)->Unit(benchmark::kMillisecond);

static void BM_GroupClosureA1(benchmark::State& st) {
    int p = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(shacheck::generate_group(SystemType::A1, p, Realization::A1Std));
}
BENCHMARK(BM_GroupClosureA1)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_ShaA1(benchmark::State& st) {
    int p = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(shacheck::sha_report(SystemType::A1, p));
}
BENCHMARK(BM_ShaA1)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_BruhatA2(benchmark::State& st) {
    decomp::BruhatSearch B(SystemType::A2, Realization::Pgl3, 3);
    auto M = B.group().eval(chevgroup::parse_word({SystemType::A2, {}}, "x(-a1,1) x(a2,2) x(-a2,1) x(a1,2)"));
    for (auto _ : st) benchmark::DoNotOptimize(B.decompose(M));
}
BENCHMARK(BM_BruhatA2)->Unit(benchmark::kMicrosecond);

static void BM_GaussA1(benchmark::State& st) {
    auto s = RingSpec::modular(49);
    auto M = chevgroup::evaluate_word({SystemType::A1, {}}, Realization::A1Std, s, "x(-a,3) x(a,5) x(-a,11) x(a,2)");
    for (auto _ : st) benchmark::DoNotOptimize(decomp::gauss_decompose_a1(M));
}
BENCHMARK(BM_GaussA1)->Unit(benchmark::kMicrosecond);

static void BM_Catalog(benchmark::State& st) {
    auto t = SystemType(st.range(0));
    auto recs = prooflab::builtin_catalog(t);
    for (auto _ : st)
        for (auto& r : recs) benchmark::DoNotOptimize(prooflab::run_record(r));
    st.SetLabel(rootsys::type_name(t));
}
BENCHMARK(BM_Catalog)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_CentralizerBruteForce(benchmark::State& st) {
    auto fams = prooflab::builtin_families();
    auto& f = fams[st.range(0)];
    for (auto _ : st) benchmark::DoNotOptimize(prooflab::centralizer_bruteforce(f, 5, 300000));
    st.SetLabel(f.name);
}
BENCHMARK(BM_CentralizerBruteForce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
