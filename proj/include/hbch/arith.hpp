#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hbch {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

struct PrimePower {
    u64 p = 0;
    unsigned e = 0;
};

/// Decomposes n = p^e with p prime; nullopt when n is not a prime power.
std::optional<PrimePower> as_prime_power(u64 n);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<u64> invmod(u64 a, u64 m);

/// Sorted list of positive divisors.
std::vector<u64> divisors(u64 n);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1, m >= 1).
u64 multiplicative_order(u64 a, u64 m);

}  // namespace hbch
