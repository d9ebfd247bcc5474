#pragma once

#include <cstdio>
#include <cstdlib>

// Invariant checks that stay on in release builds. The engine's correctness
// arguments lean on a handful of structural bounds; violating one means the
// data structures are silently wrong, so we abort instead of limping on.
namespace twoec::detail {

[[noreturn]] inline void check_fail(const char* expr, const char* file, int line) {
    std::fprintf(stderr, "check failed: %s (%s:%d)\n", expr, file, line);
    std::abort();
}

}  // namespace twoec::detail

#define TWOEC_CHECK(cond) \
    do {                  \
        if (!(cond)) ::twoec::detail::check_fail(#cond, __FILE__, __LINE__); \
    } while (0)
