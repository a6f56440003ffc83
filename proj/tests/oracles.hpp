#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond plain integer types.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Poly = std::vector<std::uint32_t>;  // ascending coefficients, length m

/// GF(p^m) by schoolbook polynomial arithmetic modulo a monic polynomial.
struct PolyField {
    std::uint32_t p;
    std::uint32_t m;
    Poly modulus;  // length m + 1, monic

    Poly zero() const {
        return Poly(m, 0);
    }
    Poly one() const {
        Poly r = zero();
        r[0] = 1;
        return r;
    }
    Poly x() const {
        Poly r = zero();
        if (m > 1) {
            r[1] = 1;
        } else {
            r[0] = (p - modulus[0]) % p;  // root of x + c0
        }
        return r;
    }
    Poly add(const Poly &a, const Poly &b) const {
        Poly r(m);
        for (std::uint32_t i = 0; i < m; ++i) r[i] = (a[i] + b[i]) % p;
        return r;
    }
    Poly neg(const Poly &a) const {
        Poly r(m);
        for (std::uint32_t i = 0; i < m; ++i) r[i] = (p - a[i]) % p;
        return r;
    }
    Poly mul(const Poly &a, const Poly &b) const {
        std::vector<u64> t(2 * m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            for (std::uint32_t j = 0; j < m; ++j) t[i + j] = (t[i + j] + u64{a[i]} * b[j]) % p;
        }
        for (std::size_t d = 2 * m - 1; d >= m; --d) {
            const u64 c = t[d];
            if (c == 0) continue;
            t[d] = 0;
            for (std::uint32_t i = 0; i < m; ++i) {
                t[d - m + i] = (t[d - m + i] + (p - modulus[i]) * c) % p;
            }
        }
        return Poly(t.begin(), t.begin() + m);
    }
    Poly pow(Poly a, u64 e) const {
        Poly r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(const Poly &a) const {
        return std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; });
    }
    u64 order() const {
        u64 r = 1;
        for (std::uint32_t i = 0; i < m; ++i) r *= p;
        return r;
    }
};

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> f;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

/// Multiplicative order of a nonzero element: strip prime factors of the group order.
inline u64 element_order(const PolyField &f, const Poly &a) {
    u64 ord = f.order() - 1;
    for (u64 r : prime_factors(ord)) {
        while (ord % r == 0 && f.pow(a, ord / r) == f.one()) ord /= r;
    }
    return ord;
}

/// Smallest positive t with (base^t) = 1 modulo n, by plain iteration.
inline u64 order_mod(u64 base, u64 n) {
    u64 x = base % n, t = 1;
    while (x != 1 % n) {
        x = x * base % n;
        ++t;
    }
    return t;
}

/// Cyclotomic cosets {e, e q^2, ...} of Z/nZ, each sorted, by first element.
inline std::vector<std::vector<u64>> cosets(u64 n, u64 q) {
    std::vector<char> seen(n, 0);
    std::vector<std::vector<u64>> out;
    for (u64 e = 0; e < n; ++e) {
        if (seen[e]) continue;
        std::vector<u64> c;
        u64 x = e;
        while (!seen[x]) {
            seen[x] = 1;
            c.push_back(x);
            x = x * q % n * q % n;
        }
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

/// min max(x, y) - 1 over 1 <= x, y < n1 with q x + q^{2k} y = beta n1, by
/// scanning (x, y) pairs directly.
inline std::optional<long long> sharp_bound(u64 q, unsigned s, u64 n1) {
    for (u64 m = 1; m < n1; ++m) {
        for (unsigned k = 0; k < s; ++k) {
            const u64 c = ipow(q, 2 * k) % n1;
            for (u64 other = 1; other <= m; ++other) {
                // (x, y) = (m, other) or (other, m)
                if ((q % n1 * m + c * other) % n1 == 0) return static_cast<long long>(m) - 1;
                if ((q % n1 * other + c * m) % n1 == 0) return static_cast<long long>(m) - 1;
            }
        }
    }
    return std::nullopt;
}

/// Case labels satisfied by n1 ("1", "2", "3", "3a0", "4", "4x" for the excluded subcase).
inline std::vector<std::string> case_labels(u64 q, unsigned s, u64 n1) {
    std::vector<std::string> out;
    const u64 qs = ipow(q, s);
    for (u64 n2 = 1; n2 <= qs - 1; ++n2) {
        if ((qs - 1) % n2 == 0 && (qs + 1) * n2 == n1) out.push_back(s % 2 == 0 ? "1" : "2");
    }
    for (unsigned a = 0; a < s; ++a) {
        if ((qs - 1) * (ipow(q, a) + 1) != n1) continue;
        if ((s + a) % 2 != 0) continue;
        if (((s + a) / 2) % 2 == 1) {
            out.push_back(a == 0 ? "3a0" : "3");
        } else {
            out.push_back(q == 2 && a + 2 == s ? "4x" : "4");
        }
    }
    return out;
}

/// Deterministic generator shared by property tests.
inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(0x5eed'0bc4ULL);
    return gen;
}

}  // namespace oracle
