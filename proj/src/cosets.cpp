#include "hbch/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hbch/error.hpp"

namespace hbch {

namespace {
constexpr std::uint32_t kUnassigned = UINT32_MAX;
}

std::shared_ptr<const CosetSystem> CosetSystem::build(u64 modulus, u64 q) {
    if (modulus == 0) fail(Errc::InvalidArgument, "coset modulus must be positive");
    if (modulus >= (u64{1} << 32)) fail(Errc::TooLarge, "coset modulus must be below 2^32");
    if (q < 2) fail(Errc::InvalidArgument, "q must be at least 2");
    if (std::gcd(modulus, q) != 1) {
        fail(Errc::NotCoprime, "gcd(" + std::to_string(modulus) + ", " + std::to_string(q) + ") != 1");
    }

    std::shared_ptr<CosetSystem> sys(new CosetSystem());
    sys->modulus_ = modulus;
    sys->q_ = q;
    sys->multiplier_ = mulmod(q, q, modulus);
    sys->index_.assign(modulus, kUnassigned);
    sys->elements_.reserve(modulus);
    sys->offsets_.push_back(0);

    std::vector<std::uint32_t> orbit;
    for (u64 e = 0; e < modulus; ++e) {
        if (sys->index_[e] != kUnassigned) continue;
        const auto id = static_cast<std::uint32_t>(sys->reps_.size());
        orbit.clear();
        u64 x = e;
        do {
            orbit.push_back(static_cast<std::uint32_t>(x));
            sys->index_[x] = id;
            x = mulmod(x, sys->multiplier_, modulus);
        } while (x != e);
        std::sort(orbit.begin(), orbit.end());
        sys->reps_.push_back(e);
        sys->elements_.insert(sys->elements_.end(), orbit.begin(), orbit.end());
        sys->offsets_.push_back(static_cast<std::uint32_t>(sys->elements_.size()));
    }
    return sys;
}

std::span<const std::uint32_t> CosetSystem::coset(std::size_t index) const {
    if (index >= reps_.size()) fail(Errc::IndexOutOfRange, "coset index " + std::to_string(index));
    return {elements_.data() + offsets_[index], elements_.data() + offsets_[index + 1]};
}

std::size_t CosetSystem::coset_of(u64 e) const {
    if (e >= modulus_) fail(Errc::IndexOutOfRange, "exponent " + std::to_string(e) + " not reduced");
    return index_[e];
}

std::optional<std::size_t> CosetSystem::index_of_representative(u64 a) const {
    auto it = std::lower_bound(reps_.begin(), reps_.end(), a);
    if (it == reps_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - reps_.begin());
}

// ---------------------------------------------------------------------------

std::vector<u64> DefiningSet::representatives() const {
    std::vector<u64> out;
    for (auto i : indices_) {
        if (i != 0) out.push_back(system_->representatives()[i]);
    }
    return out;
}

bool DefiningSet::contains(u64 e) const {
    if (e >= system_->modulus()) return false;
    return std::binary_search(indices_.begin(), indices_.end(), system_->coset_of(e));
}

u64 DefiningSet::max_representative() const {
    if (indices_.empty() || indices_.back() == 0) return 0;
    return system_->representatives()[indices_.back()];
}

DefiningSet make_defining_set(CosetSystemPtr system, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        fail(Errc::InvalidArgument, "coset selected twice");
    }
    DefiningSet d;
    for (auto i : indices) {
        auto c = system->coset(i);
        d.elements_.insert(d.elements_.end(), c.begin(), c.end());
    }
    d.system_ = std::move(system);
    d.indices_ = std::move(indices);
    return d;
}

DefiningSet defining_set(const CosetSystemPtr &system, std::size_t tau, bool include_zero) {
    const std::size_t nonzero = system->count() - 1;
    if (tau < 1 || tau > nonzero) {
        fail(Errc::IndexOutOfRange,
             "tau = " + std::to_string(tau) + " outside [1, " + std::to_string(nonzero) + "]");
    }
    std::vector<std::size_t> idx;
    if (include_zero) idx.push_back(0);
    for (std::size_t i = 1; i <= tau; ++i) idx.push_back(i);
    return make_defining_set(system, std::move(idx));
}

DefiningSet defining_set_from_representatives(const CosetSystemPtr &system, std::span<const u64> reps,
                                              bool include_zero) {
    std::vector<std::size_t> idx;
    if (include_zero) idx.push_back(0);
    for (u64 a : reps) {
        if (a == 0) fail(Errc::InvalidArgument, "representative 0 is selected via include_zero");
        auto i = system->index_of_representative(a);
        if (!i) {
            fail(Errc::InvalidArgument, std::to_string(a) + " is not a coset representative modulo " +
                                            std::to_string(system->modulus()));
        }
        idx.push_back(*i);
    }
    if (idx.empty()) fail(Errc::InvalidArgument, "empty defining set");
    return make_defining_set(system, std::move(idx));
}

DefiningSet reduce_mod(const DefiningSet &delta, u64 n1) {
    const u64 big = delta.system().modulus();
    if (n1 == 0 || big % n1 != 0) {
        fail(Errc::NotADivisor, std::to_string(n1) + " does not divide " + std::to_string(big));
    }
    auto sys = CosetSystem::build(n1, delta.system().q());
    std::vector<char> hit(n1, 0);
    for (u64 e : delta.elements()) hit[e % n1] = 1;

    std::vector<std::size_t> idx;
    std::size_t image_size = 0;
    for (u64 r = 0; r < n1; ++r) {
        if (!hit[r]) continue;
        ++image_size;
        const std::size_t c = sys->coset_of(r);
        if (sys->representatives()[c] == r) idx.push_back(c);
    }
    std::size_t covered = 0;
    for (auto c : idx) covered += sys->coset_size(c);
    if (covered != image_size) fail(Errc::NotCosetClosed, "reduction is not a union of cosets");
    return make_defining_set(std::move(sys), std::move(idx));
}

u64 next_representative(const DefiningSet &delta) {
    const auto &reps = delta.system().representatives();
    const auto &sel = delta.coset_indices();
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (!std::binary_search(sel.begin(), sel.end(), i)) return reps[i];
    }
    fail(Errc::Exhausted, "defining set already covers every coset");
}

}  // namespace hbch
