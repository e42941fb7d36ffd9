#pragma once
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dk {

/// Apply f to each value of ns and collect results in input order.
template <class R, class F>
std::vector<R> sweep_serial(const std::vector<long>& ns, F&& f) {
    std::vector<R> out;
    out.reserve(ns.size());
    for (long n : ns) out.push_back(f(n));
    return out;
}

/// Same, fanned out across threads. Items are independent; results land
/// in input order regardless of completion order. jobs <= 0 uses the
/// OpenMP default.
template <class R, class F>
std::vector<R> sweep_parallel(const std::vector<long>& ns, F&& f, int jobs = 0) {
#ifdef _OPENMP
    std::vector<R> out(ns.size());
    if (jobs > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long i = 0; i < static_cast<long>(ns.size()); ++i)
            out[static_cast<size_t>(i)] = f(ns[static_cast<size_t>(i)]);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(ns.size()); ++i)
            out[static_cast<size_t>(i)] = f(ns[static_cast<size_t>(i)]);
    }
    return out;
#else
    (void)jobs;
    return sweep_serial<R>(ns, std::forward<F>(f));
#endif
}

}  // namespace dk
