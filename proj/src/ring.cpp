#include "secdt/ring.hpp"

namespace secdt {

namespace {

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    u128 result = 1;
    u128 b = base % mod;
    while (exp) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return u64(result);
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = u64(u128(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void RingConfig::validate(bool require_prime) const {
    if (modulus < 2) throw std::invalid_argument("ring modulus must be >= 2");
    if (modulus > (u64(1) << 62))
        throw std::invalid_argument("ring modulus must fit in 62 bits");
    if (value_bits < 1 || value_bits > 58)
        throw std::invalid_argument("value_bits out of range");
    // Headroom for threshold doubling and signed sentinels.
    if ((u128(1) << (value_bits + 2)) >= modulus)
        throw std::invalid_argument(
            "ring modulus too small: need 2^(value_bits+2) < modulus");
    if (require_prime && !is_prime_u64(modulus))
        throw std::invalid_argument(
            "3-party backend requires a prime modulus, got " +
            std::to_string(modulus));
}

} // namespace secdt
