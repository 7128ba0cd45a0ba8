#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "integer.hpp"

namespace polyplateau {

// Binomial coefficient C(n, k) with the usual combinatorial convention:
// zero for k < 0 or k > n. A negative top argument is a caller bug here,
// not a boundary case, so it throws.
inline Integer binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative top argument");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (k == 0) return 1;

    if (n < (1LL << 31)) {
        thread_local std::unordered_map<std::uint64_t, Integer> cache;
        const std::uint64_t key =
            (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(k);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        Integer r = 1;
        for (long long i = 1; i <= k; ++i) {
            r *= n - k + i;
            r /= i;  // exact: r is C(n-k+i, i) after each step
        }
        return cache.emplace(key, std::move(r)).first->second;
    }

    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace polyplateau
