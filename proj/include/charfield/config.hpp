#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace charfield {

// Everything in this library is exact, so the only thing that can go wrong
// at runtime (besides bad arguments) is asking for a computation that is too
// large for desk scale.  These limits fail loudly instead of thrashing.
struct Bounds {
    long max_level = 1'000'000;  // largest cyclotomic level Q(zeta_n)
    long max_q = 1 << 16;        // largest finite field cardinality
    int max_m = 4;               // largest GL_m rank for class enumeration
};

class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Mutable global bounds; the CLI maps CHARFIELD_MAX_LEVEL / CHARFIELD_MAX_Q /
// CHARFIELD_MAX_M onto this.
inline Bounds& bounds() {
    static Bounds b;
    return b;
}

inline void check_level_bound(long n) {
    if (n < 1 || n > bounds().max_level)
        throw BoundExceeded("cyclotomic level " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bounds().max_level));
}

}  // namespace charfield
