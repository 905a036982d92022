#pragma once

#include <complex>
#include <numbers>

namespace bkit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Integer power of a complex number (binary exponentiation, e may be negative).
inline Complex ipow(Complex z, int e) {
    if (e == 0) return {1.0, 0.0};
    bool inv = e < 0;
    unsigned long long n = inv ? -static_cast<long long>(e) : e;
    Complex acc{1.0, 0.0};
    Complex base = z;
    while (n) {
        if (n & 1ull) acc *= base;
        base *= base;
        n >>= 1;
    }
    return inv ? 1.0 / acc : acc;
}

}  // namespace bkit
