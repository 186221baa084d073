#pragma once

#include <cstdint>

namespace spreadlab::modp {

/// 2^61 - 1 (Mersenne). Default evaluation field for randomized rank.
inline constexpr std::uint64_t kDefaultPrime = 0x1fffffffffffffffULL;

/// Largest prime below 2^63. Used as the independent second field.
inline constexpr std::uint64_t kAltPrime = 9223372036854775783ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b; // a,b < p <= 2^63, no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mul(acc, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return acc;
}

/// Inverse of a != 0 modulo a prime p, via Fermat.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    return pow(a, p - 2, p);
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // this witness set certifies primality for every n < 3.3e24
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace spreadlab::modp
