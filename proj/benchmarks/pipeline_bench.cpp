#include <benchmark/benchmark.h>

#include "sketchgen/dedup/dedup.hpp"
#include "sketchgen/solid/mesh.hpp"
#include "sketchgen/solid/profile.hpp"
#include "sketchgen/turtle/encode.hpp"
#include "sketchgen/turtle/execute.hpp"
#include "sketchgen/turtle/text.hpp"

using namespace sketchgen;

namespace {

constexpr const char* kPlate =
    "loopstart((86,43)) line((169,0)) line((0,170)) line((-169,0)) arc((-86,-85),(86,-85)) "
    "loopstart((86,85)) circle((43,43),(-43,43),(-43,-43))";

sketch::SketchHypergraph plate() { return turtle::execute(turtle::parse(kPlate)); }

} // namespace

static void BM_DedupKey(benchmark::State& state) {
    const auto g = plate();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dedup::dedup_key(g));
    }
}
BENCHMARK(BM_DedupKey);

static void BM_TurtleEncode(benchmark::State& state) {
    const auto g = plate();
    for (auto _ : state) {
        benchmark::DoNotOptimize(turtle::encode(g));
    }
}
BENCHMARK(BM_TurtleEncode);

static void BM_Extrude(benchmark::State& state) {
    const auto g = plate();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solid::extrude(solid::build_profiles(g), 5.0));
    }
}
BENCHMARK(BM_Extrude);
