#pragma once

#include <mutex>

namespace rcbij::detail {

// One lock for every lazily built table. Builders call each other, so
// separate locks could be taken in opposite orders by two threads.
inline std::recursive_mutex& cache_mutex() {
    static std::recursive_mutex mu;
    return mu;
}

}  // namespace rcbij::detail
