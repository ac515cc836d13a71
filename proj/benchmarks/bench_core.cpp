#include <benchmark/benchmark.h>

#include "gradecone/parse.hpp"
#include "gradecone/resolution.hpp"

using namespace gradecone;
using Ctx = FpContext;

namespace {

RingPtr<Ctx> plane_ring() {
    static FpContext f(32003);
    static auto R = make_ring<Ctx>(f, {"x", "y"}, OrderKind::GrevLex);
    return R;
}

std::vector<Polynomial<Ctx>> parsed(const RingPtr<Ctx>& R,
                                    std::initializer_list<const char*> srcs) {
    std::vector<Polynomial<Ctx>> out;
    for (const char* s : srcs) out.push_back(parse_polynomial<Ctx>(R, s));
    return out;
}

} // namespace

static void BM_groebner_plane_curve(benchmark::State& state) {
    auto R = plane_ring();
    auto gens = parsed(R, {"x^2 - y^3", "x*y"});
    for (auto _ : state) {
        auto gb = groebner_ideal<Ctx>(R, gens);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_groebner_plane_curve);

static void BM_groebner_power_block(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    auto R = plane_ring();
    auto gens = parsed(R, {"x^2 - y^3", "x*y"});
    GBOptions opts;
    opts.degree_cap = cap;
    auto mod = rank_one_module<Ctx>(R);
    for (auto _ : state) {
        auto gb = reduce_basis(buchberger(mod, wrap_ideal<Ctx>(mod, gens), opts));
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_groebner_power_block)->Arg(6)->Arg(10)->Arg(14);

static void BM_minimal_resolution(benchmark::State& state) {
    auto R = plane_ring();
    auto F0 = make_free_module<Ctx>(R, {0});
    std::vector<ModElem<Ctx>> rels;
    for (const auto& g : parsed(R, {"x^2", "x*y", "y^5"}))
        rels.push_back(ModElem<Ctx>::from_poly(F0, g, 0));
    for (auto _ : state) {
        auto res = build_resolution<Ctx>(F0, rels);
        minimalize(res);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_minimal_resolution);

static void BM_residue_field_stages(benchmark::State& state) {
    const int stages = static_cast<int>(state.range(0));
    auto R = plane_ring();
    auto F0 = make_free_module<Ctx>(R, {0});
    auto gbJ = groebner_ideal<Ctx>(R, parsed(R, {"x^2", "y^2"}));
    std::vector<ModElem<Ctx>> rels;
    for (const auto& g : parsed(R, {"x", "y"}))
        rels.push_back(ModElem<Ctx>::from_poly(F0, g, 0));
    for (auto _ : state) {
        auto res = build_resolution<Ctx>(F0, rels, gbJ, stages);
        minimalize(res);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_residue_field_stages)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
