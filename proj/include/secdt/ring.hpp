#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace secdt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Ring Z_M with a signed view: residues in [0, M/2) are non-negative,
// residues in [M/2, M) represent x - M.
struct RingConfig {
    u64 modulus = (u64(1) << 61) - 1;
    int value_bits = 24;

    void validate(bool require_prime) const;

    u64 reduce(u64 x) const { return x >= modulus ? x % modulus : x; }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        if (s >= modulus || s < a) s -= modulus;
        return s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (modulus - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : modulus - a; }
    u64 mul(u64 a, u64 b) const { return u64((u128(a) * b) % modulus); }

    bool is_negative(u64 x) const { return 2 * u128(x) >= modulus; }
    i64 to_signed(u64 x) const {
        return is_negative(x) ? i64(x - modulus) : i64(x);
    }
    u64 from_signed(i64 v) const {
        if (v >= 0) return reduce(u64(v));
        u64 mag = u64(-(v + 1)) + 1;
        return sub(0, reduce(mag));
    }
};

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n);

} // namespace secdt
