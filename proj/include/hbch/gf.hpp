#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbch/arith.hpp"

namespace hbch {

/// Field element encoded as an index into the antilog table: 0 is the zero
/// element, i + 1 stands for gamma^i where gamma is the root of the modulus.
struct Elem {
    std::uint32_t raw = 0;

    constexpr bool is_zero() const {
        return raw == 0;
    }
    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Conway polynomials keyed by (p, m), coefficients in ascending degree order.
class ConwayTable {
   public:
    /// Parses lines "p m c0 c1 ... cm"; '#' starts a comment.
    static ConwayTable parse(std::string_view text);
    static ConwayTable load(const std::string &path);
    static const ConwayTable &bundled();

    std::optional<std::vector<std::uint32_t>> lookup(std::uint32_t p, std::uint32_t m) const;
    std::size_t size() const {
        return entries_.size();
    }

   private:
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> entries_;
};

/// GF(p^m) with log/antilog/Zech tables relative to the (primitive) root of
/// the defining polynomial. Immutable after construction.
class FieldCtx {
   public:
    static constexpr u64 kMaxOrder = u64{1} << 24;

    /// Validates the modulus: p prime, monic of degree m, irreducible and primitive.
    FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const {
        return p_;
    }
    std::uint32_t m() const {
        return m_;
    }
    u64 order() const {
        return order_;
    }
    const std::vector<std::uint32_t> &modulus() const {
        return modulus_;
    }

    bool has_square_order() const {
        return m_ % 2 == 0;
    }
    /// sqrt(order) for square-order fields; throws NonSquareAlphabet otherwise.
    u64 sqrt_order() const;

    Elem zero() const {
        return Elem{0};
    }
    Elem one() const {
        return Elem{1};
    }
    Elem primitive() const {
        return exp(1);
    }
    Elem exp(u64 i) const {
        return Elem{static_cast<std::uint32_t>(i % (order_ - 1) + 1)};
    }
    /// Discrete log w.r.t. primitive(); zero has no logarithm.
    u64 log(Elem x) const;
    bool is_valid(Elem x) const {
        return x.raw < order_;
    }

    Elem add(Elem a, Elem b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const u64 la = a.raw - 1, lb = b.raw - 1;
        const u64 d = lb >= la ? lb - la : lb + (order_ - 1) - la;
        const std::uint32_t z = zech_[d];
        if (z == kNone) return zero();
        return exp(la + z);
    }
    Elem neg(Elem a) const {
        if (a.is_zero() || neg_shift_ == 0) return a;
        return exp(a.raw - 1 + neg_shift_);
    }
    Elem sub(Elem a, Elem b) const {
        return add(a, neg(b));
    }
    Elem mul(Elem a, Elem b) const {
        if (a.is_zero() || b.is_zero()) return zero();
        return exp(u64{a.raw} - 1 + b.raw - 1);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, i64 e) const;
    /// a^sqrt(order): the conjugation used by the Hermitian form.
    Elem conj(Elem a) const;

    /// Image of the integer c in the prime subfield.
    Elem from_int(i64 c) const;
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> to_coeffs(Elem x) const;

   private:
    static constexpr std::uint32_t kNone = UINT32_MAX;

    std::uint32_t p_;
    std::uint32_t m_;
    u64 order_;
    u64 neg_shift_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;      // coefficient code -> log
    std::vector<std::uint32_t> antilog_;  // log -> coefficient code
    std::vector<std::uint32_t> zech_;     // i -> log(1 + gamma^i), kNone when 1 + gamma^i = 0
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds GF(p^m); without a modulus the Conway polynomial from `table` is used.
FieldPtr build_field(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                     const ConwayTable &table = ConwayTable::bundled());

/// Thread-safe cache of Conway-defined fields.
class FieldRegistry {
   public:
    explicit FieldRegistry(ConwayTable table);
    static FieldRegistry &bundled();

    FieldPtr field(std::uint32_t p, std::uint32_t m);
    /// Field of the given order (a prime power).
    FieldPtr field_of_order(u64 order);
    const ConwayTable &table() const {
        return table_;
    }

   private:
    ConwayTable table_;
    std::mutex mu_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache_;
};

/// GF(q^2) inside GF(q^{2s}) with a fixed primitive element gamma of the big field.
class FieldTower {
   public:
    /// gamma = (root of the big modulus)^gamma_exponent; the exponent must be
    /// coprime to q^{2s} - 1.
    static FieldTower build(u64 q, std::uint32_t s, FieldRegistry &registry = FieldRegistry::bundled(),
                            u64 gamma_exponent = 1);

    u64 q() const {
        return q_;
    }
    std::uint32_t s() const {
        return s_;
    }
    std::uint32_t p() const {
        return big_->p();
    }
    const FieldCtx &big() const {
        return *big_;
    }
    const FieldCtx &small() const {
        return *small_;
    }
    const FieldPtr &big_ptr() const {
        return big_;
    }
    const FieldPtr &small_ptr() const {
        return small_;
    }
    /// q^{2s} - 1
    u64 unit_order() const {
        return big_->order() - 1;
    }
    Elem gamma() const {
        return gamma_;
    }

    Elem embed(Elem x) const;
    bool in_small(Elem x) const;
    /// Inverse of embed on its image; nullopt for elements outside GF(q^2).
    std::optional<Elem> restrict_to_small(Elem x) const;

    /// x^{(q^2)^j}, 0 <= j < s.
    Elem frobenius(Elem x, std::uint32_t j) const;
    /// x + x^{q^2} + ... + x^{q^{2(s-1)}}
    Elem trace_to_small(Elem x) const;
    /// gamma^{(q^{2s}-1)/n1}
    Elem root_of_unity(u64 n1) const;

   private:
    u64 q_ = 0;
    std::uint32_t s_ = 0;
    FieldPtr big_;
    FieldPtr small_;
    Elem gamma_;
    u64 subfield_cofactor_ = 0;  // (q^{2s}-1)/(q^2-1)
    u64 embed_twist_ = 1;        // small root maps to big root^(cofactor * twist)
    u64 embed_twist_inv_ = 1;
};

}  // namespace hbch
