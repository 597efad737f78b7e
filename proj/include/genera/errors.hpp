#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace genera {

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A search exceeded a configured cap (CLI exit code 3).  Caps are never
/// silently truncated: a computation either completes exactly or throws.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Global ceiling on exponential subset searches, in bits.  A search over
/// subsets of a k-element set requires k <= max_subset_bits.
/// Initialized once from GENERA_MAX_SUBSET_BITS (default 16, hard max 30).
inline int& max_subset_bits() {
    static int bits = [] {
        int v = 16;
        if (const char* s = std::getenv("GENERA_MAX_SUBSET_BITS")) {
            v = std::atoi(s);
            if (v < 1) v = 1;
            if (v > 30) v = 30;
        }
        return v;
    }();
    return bits;
}

inline void require_search_bits(int bits, const std::string& context) {
    if (bits > max_subset_bits()) {
        throw ResourceError(context + ": subset search over " + std::to_string(bits) +
                            " elements exceeds cap of " + std::to_string(max_subset_bits()) +
                            " (raise GENERA_MAX_SUBSET_BITS or --max-bits)");
    }
}

} // namespace genera
