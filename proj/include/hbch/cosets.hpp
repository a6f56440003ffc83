#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hbch/arith.hpp"

namespace hbch {

/// Partition of Z/NZ into cyclotomic cosets {e q^{2i}}, ordered by their
/// minimal representatives 0 = a_0 < a_1 < ...
class CosetSystem {
   public:
    /// Requires gcd(N, q) = 1 and N < 2^32.
    static std::shared_ptr<const CosetSystem> build(u64 modulus, u64 q);

    u64 modulus() const {
        return modulus_;
    }
    u64 q() const {
        return q_;
    }
    /// q^2 mod N
    u64 multiplier() const {
        return multiplier_;
    }

    std::size_t count() const {
        return reps_.size();
    }
    /// Sorted elements of coset number `index`.
    std::span<const std::uint32_t> coset(std::size_t index) const;
    std::size_t coset_size(std::size_t index) const {
        return offsets_[index + 1] - offsets_[index];
    }
    const std::vector<u64> &representatives() const {
        return reps_;
    }
    std::size_t coset_of(u64 e) const;
    u64 representative_of(u64 e) const {
        return reps_[coset_of(e)];
    }
    std::optional<std::size_t> index_of_representative(u64 a) const;

   private:
    CosetSystem() = default;

    u64 modulus_ = 0;
    u64 q_ = 0;
    u64 multiplier_ = 0;
    std::vector<u64> reps_;
    std::vector<std::uint32_t> elements_;  // cosets back to back
    std::vector<std::uint32_t> offsets_;   // coset i is elements_[offsets_[i], offsets_[i+1])
    std::vector<std::uint32_t> index_;     // element -> coset number
};

using CosetSystemPtr = std::shared_ptr<const CosetSystem>;

/// A union of cosets of one CosetSystem (the exponent set Delta).
class DefiningSet {
   public:
    const CosetSystem &system() const {
        return *system_;
    }
    const CosetSystemPtr &system_ptr() const {
        return system_;
    }
    /// Selected coset numbers, ascending (coset 0 is {0}).
    const std::vector<std::size_t> &coset_indices() const {
        return indices_;
    }
    /// Representatives of the selected nonzero cosets, ascending.
    std::vector<u64> representatives() const;
    /// Flattened exponents, coset by coset.
    const std::vector<u64> &elements() const {
        return elements_;
    }
    bool includes_zero() const {
        return !indices_.empty() && indices_.front() == 0;
    }
    bool contains(u64 e) const;
    std::size_t size() const {
        return elements_.size();
    }
    /// Largest representative among the selected nonzero cosets; 0 when none.
    u64 max_representative() const;

   private:
    friend DefiningSet make_defining_set(CosetSystemPtr system, std::vector<std::size_t> indices);

    CosetSystemPtr system_;
    std::vector<std::size_t> indices_;
    std::vector<u64> elements_;
};

/// Any union of whole cosets, given by coset numbers.
DefiningSet make_defining_set(CosetSystemPtr system, std::vector<std::size_t> indices);

/// Lambda_{a_1} u ... u Lambda_{a_tau}, with Lambda_0 prepended when include_zero.
DefiningSet defining_set(const CosetSystemPtr &system, std::size_t tau, bool include_zero);

/// Union of the cosets whose minimal representatives are listed (all nonzero).
DefiningSet defining_set_from_representatives(const CosetSystemPtr &system, std::span<const u64> reps,
                                              bool include_zero);

/// Image of delta in Z/n1Z, re-expressed as a union of cosets modulo n1.
DefiningSet reduce_mod(const DefiningSet &delta, u64 n1);

/// Smallest nonzero representative whose coset is absent from delta.
u64 next_representative(const DefiningSet &delta);

}  // namespace hbch
