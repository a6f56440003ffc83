#include "hbch/arith.hpp"

#include <numeric>

#include "hbch/error.hpp"

namespace hbch {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(u64 n) {
    if (n < 2) return std::nullopt;
    u64 p = 0;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{n, 1};
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, e};
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
        r *= base;
    }
    return r;
}

__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::optional<u64> invmod(u64 a, u64 m) {
    if (m == 1) return 0;
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 quot = r / new_r;
        i64 tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m == 1) return 1;
    if (std::gcd(a % m, m) != 1) fail(Errc::NotCoprime, "multiplicative order needs gcd(a, m) = 1");
    u64 x = a % m;
    u64 ord = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++ord;
    }
    return ord;
}

}  // namespace hbch
