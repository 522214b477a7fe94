#include "torlim/parallel.hpp"

#include <atomic>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torlim::parallel {

namespace {
std::atomic<bool> g_enabled{true};
}

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

void run_indexed(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
#ifdef _OPENMP
    if (enabled() && n > 1 && max_threads() > 1) {
        std::vector<std::exception_ptr> errors(n);
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (failed.load()) {
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace detail

}  // namespace torlim::parallel
