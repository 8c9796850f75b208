#pragma once

#include <cstddef>
#include <functional>

namespace singext {

/// Worker count used by parallel_for. Defaults to the SINGEXT_THREADS
/// environment variable, or 1.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [0, n). Results must be written to per-index slots
/// so that the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace singext
