#pragma once

#include <cstddef>
#include <functional>

namespace torlim::parallel {

// Global switch for the OpenMP paths. The serial reference paths compute
// bit-identical results; tests flip this off/on and compare.
bool enabled();
void set_enabled(bool on);

int max_threads();

namespace detail {
void run_indexed(std::size_t n, const std::function<void(std::size_t)>& body);
}

// Runs body(i) for i in [0, n), in parallel when enabled and n > 1.
// Every index writes only its own outputs, so results do not depend on the
// schedule. If tasks throw, the exception of the lowest index is rethrown
// after the loop joins, keeping failures deterministic as well.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    detail::run_indexed(n, std::function<void(std::size_t)>(std::forward<Body>(body)));
}

}  // namespace torlim::parallel
