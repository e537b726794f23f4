#include "loggw/cone.hpp"
#include "loggw/hilbert.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace loggw;

namespace {

// Simplicial cone in Z^3 with a large parallelepiped: many Hilbert candidates.
struct Fixture {
    Mat rays, facets;
    std::vector<std::vector<int>> simplices;
    Mat candidates;
    Fixture(long long h) {
        Mat gens{{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(1), Int(h)}, {Int(-1), Int(2), Int(h / 2)}};
        ConeHRep c = cone_hrep(gens, 3);
        rays = c.rays;
        facets = c.facets;
        simplices = triangulate(rays, facets, 3);
        candidates = hilbert_candidates(rays, simplices, 3, Exec::Serial);
    }
};

const Fixture& fixture(long long h) {
    static std::map<long long, Fixture> cache;
    auto it = cache.find(h);
    if (it == cache.end()) it = cache.emplace(h, Fixture(h)).first;
    return it->second;
}

void BM_candidates(benchmark::State& st, Exec exec) {
    const Fixture& f = fixture(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_candidates(f.rays, f.simplices, 3, exec));
}

void BM_reduce_serial(benchmark::State& st) {
    const Fixture& f = fixture(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(reduce_candidates_serial(f.candidates, f.facets));
    st.counters["candidates"] = static_cast<double>(f.candidates.size());
}

void BM_reduce_parallel(benchmark::State& st) {
    const Fixture& f = fixture(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(reduce_candidates_parallel(f.candidates, f.facets));
    st.counters["candidates"] = static_cast<double>(f.candidates.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_candidates, serial, Exec::Serial)->Arg(20)->Arg(60);
BENCHMARK_CAPTURE(BM_candidates, parallel, Exec::Parallel)->Arg(20)->Arg(60);
BENCHMARK(BM_reduce_serial)->Arg(20)->Arg(60);
BENCHMARK(BM_reduce_parallel)->Arg(20)->Arg(60);

BENCHMARK_MAIN();
