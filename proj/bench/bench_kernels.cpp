// Serial reference vs OpenMP kernels on the larger corpus rings.

#include "lnd/fixture.hpp"
#include "lnd/invariant_lab.hpp"
#include "lnd/kernels.hpp"
#include "lnd/parser.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lnd;

FixtureInstance load(const char* stem) {
    return instantiate(load_fixture(std::string(LND_CORPUS_DIR) + "/" + stem + ".toml"));
}

struct ImageCase {
    FixtureInstance fx;
    std::vector<Monomial> frame;
};

const ImageCase& image_case(const char* stem, unsigned degree) {
    static std::map<std::pair<std::string, unsigned>, ImageCase> cache;
    auto key = std::make_pair(std::string(stem), degree);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto fx = load(stem);
        auto frame = standard_monomials(fx.ring, degree, 100000);
        it = cache.emplace(key, ImageCase{std::move(fx), std::move(frame)}).first;
    }
    return it->second;
}

void derivation_images(benchmark::State& state, kernels::Execution exec, const char* stem, const char* name) {
    const ImageCase& c = image_case(stem, static_cast<unsigned>(state.range(0)));
    const Derivation& d = c.fx.derivation(name);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::derivation_images(d, c.frame, exec));
    state.counters["frame"] = static_cast<double>(c.frame.size());
}

void power_products(benchmark::State& state, kernels::Execution exec) {
    static const auto fx = load("threefold_u");
    const std::vector<RingElement> gens{parse_element("x", fx.ring), parse_element("z + t - x*u", fx.ring),
                                        parse_element("y - z*u", fx.ring), parse_element("t - x*u", fx.ring)};
    const auto top = static_cast<unsigned>(state.range(0));
    std::vector<std::vector<unsigned>> exps;
    for (unsigned a = 0; a <= top; ++a)
        for (unsigned b = 0; a + b <= top; ++b)
            for (unsigned c = 0; a + b + c <= top; ++c)
                for (unsigned e = 0; a + b + c + e <= top; ++e) exps.push_back({a, b, c, e});
    for (auto _ : state) benchmark::DoNotOptimize(kernels::power_products(gens, exps, exec));
    state.counters["products"] = static_cast<double>(exps.size());
}

constexpr auto serial = kernels::Execution::serial;
constexpr auto parallel = kernels::Execution::parallel;

}  // namespace

BENCHMARK_CAPTURE(derivation_images, serial_threefold_u_Dt1, serial, "threefold_u", "Dt1")->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(derivation_images, parallel_threefold_u_Dt1, parallel, "threefold_u", "Dt1")->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(derivation_images, serial_ufd_237_delta2, serial, "ufd_237", "delta2")->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(derivation_images, parallel_ufd_237_delta2, parallel, "ufd_237", "delta2")->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(power_products, serial, serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(power_products, parallel, parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
