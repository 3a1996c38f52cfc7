// Compares the serial reference kernels against the OpenMP ones and checks
// that the parallel results are bit-identical.

#include <chrono>
#include <cstdio>
#include <random>

#include "packnu/covering.hpp"
#include "packnu/setalg.hpp"

using namespace packnu;

namespace {

double time_ms(auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);
    for (std::uint64_t p : {100003ull, 1000003ull}) {
        Group g = Group::mult_mod_p(p);
        GroupSet a(g), b(g);
        while (a.size() < 2000) a.add(elem(rng() % g.order()));
        while (b.size() < 2000) b.add(elem(rng() % g.order()));

        GroupSet serial(g), parallel(g);
        double ts = time_ms([&] { serial = product_set_serial(a, b); });
        double tp = time_ms([&] { parallel = product_set(a, b); });
        bool same = serial == parallel;
        std::printf("product_set  p=%-9llu |A|=|B|=2000  serial %8.1f ms  parallel %8.1f ms  %s\n",
                    (unsigned long long)p, ts, tp, same ? "identical" : "MISMATCH");
        if (!same) return 1;
    }

    {
        Group g = Group::mult_mod_p(509);
        GroupSet a = GroupSet(g);
        for (elem x = 0; x < 40; ++x) a.add(elem(rng() % g.order()));
        GroupSet cover(g);
        double t = time_ms([&] { cover = greedy_cover(a); });
        std::printf("greedy_cover p=509       |A|=%llu  -> |B|=%llu  %8.1f ms\n",
                    (unsigned long long)a.size(), (unsigned long long)cover.size(), t);
    }
    return 0;
}
