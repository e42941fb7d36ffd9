// Benchmark: serial reference sweep vs the OpenMP fan-out, on the two
// heaviest kernels (relation lifting and the character convolution oracle).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "dihedralk/kring.hpp"
#include "dihedralk/sweep.hpp"

using namespace dk;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int verify_kernel(long n) {
    return verify_presentation(n).pass ? 0 : 1;
}

int oracle_kernel(long n) {
    DihedralRing ring(n);
    std::mt19937 rng(static_cast<unsigned>(1000 + n));
    std::uniform_int_distribution<int> coef(-3, 3);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        RepVec a = ring.zero(), b = ring.zero();
        for (auto& x : a) x = coef(rng);
        for (auto& x : b) x = coef(rng);
        if (!ring.verify_mul_by_characters(a, b)) ++bad;
    }
    return bad;
}

template <class F>
void bench(const char* name, const std::vector<long>& ns, F kernel) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = sweep_serial<int>(ns, kernel);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = sweep_parallel<int>(ns, kernel, 0);
    double tp = seconds_since(t0);
    if (serial != parallel) {
        std::fprintf(stderr, "%s: serial and parallel sweeps disagree\n", name);
        std::exit(1);
    }
    std::printf("%-16s items=%zu serial=%.3fs parallel=%.3fs speedup=%.2fx\n", name, ns.size(),
                ts, tp, tp > 0 ? ts / tp : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    long nmax = argc > 1 ? std::atol(argv[1]) : 99;
    std::vector<long> odd, all;
    for (long n = 3; n <= nmax; ++n) {
        all.push_back(n);
        if (n % 2 == 1) odd.push_back(n);
    }
    bench("verify/odd", odd, verify_kernel);
    bench("char-oracle", all, oracle_kernel);
    return 0;
}
