#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace burnkit {

// Ceiling of a/b for non-negative a, positive b.
inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    if (a < 0) throw std::invalid_argument("ceil_div: dividend must be non-negative");
    return (a + b - 1) / b;
}

// Largest s with s*s <= a.
inline long long isqrt_floor(long long a) {
    if (a < 0) throw std::invalid_argument("isqrt_floor: negative input");
    if (a < 2) return a;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(a)));
    while (s > 0 && s * s > a) --s;
    while ((s + 1) * (s + 1) <= a) ++s;
    return s;
}

// ceil(sqrt(a)/d): the least m >= 0 with m*m*d*d >= a. Pure integer arithmetic.
inline int ceil_sqrt_ratio(long long a, long long d) {
    if (a < 0) throw std::invalid_argument("ceil_sqrt_ratio: a must be >= 0");
    if (d < 1) throw std::invalid_argument("ceil_sqrt_ratio: d must be >= 1");
    if (a == 0) return 0;
    long long m = isqrt_floor(a) / d;
    while (m * m * d * d < a) ++m;
    while (m > 0 && (m - 1) * (m - 1) * d * d >= a) --m;
    return static_cast<int>(m);
}

// Exact rational threshold. Kept tiny: the library only ever compares
// against integer side sizes.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n) : num(n), den(1) {}
    Ratio(long long n, long long d) : num(n), den(d) {
        if (d == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
    }

    // value < x, value <= x, etc. for integer x via cross multiplication
    bool lt(long long x) const { return num < x * den; }
    bool le(long long x) const { return num <= x * den; }
    bool gt(long long x) const { return num > x * den; }
    bool ge(long long x) const { return num >= x * den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// side > p  <=>  p.lt(side)
inline bool exceeds(long long side, const Ratio& p) { return p.lt(side); }
inline bool within(long long side, const Ratio& p) { return p.ge(side); }

} // namespace burnkit
