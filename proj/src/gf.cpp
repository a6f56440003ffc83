#include "hbch/gf.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "conway_data.hpp"
#include "hbch/error.hpp"

namespace hbch {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly &f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = *invmod(f.back(), p);
    while (a.size() >= f.size()) {
        const u64 c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c * f[i] % p)) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + u64{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin-style test: no irreducible factor of degree <= m/2.
bool is_irreducible(const Poly &f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    Poly x{0, 1};
    Poly h = poly_mod(x, f, p);
    for (std::size_t i = 1; i <= m / 2; ++i) {
        Poly base = h;
        Poly acc{1};
        for (std::uint32_t k = 0; k < p; ++k) acc = poly_mulmod(acc, base, f, p);
        h = acc;
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConwayTable

ConwayTable ConwayTable::parse(std::string_view text) {
    ConwayTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        long long v;
        while (fields >> v) values.push_back(v);
        if (!fields.eof()) fail(Errc::ParseError, "conway table line " + std::to_string(line_no) + ": not an integer");
        if (values.empty()) continue;
        if (values.size() < 3 || values[0] < 2 || values[1] < 1 ||
            values.size() != static_cast<std::size_t>(values[1]) + 3) {
            fail(Errc::ParseError, "conway table line " + std::to_string(line_no) + ": expected p m c0 ... cm");
        }
        std::vector<std::uint32_t> coeffs;
        for (std::size_t i = 2; i < values.size(); ++i) {
            if (values[i] < 0 || values[i] >= values[0]) {
                fail(Errc::ParseError, "conway table line " + std::to_string(line_no) + ": coefficient out of range");
            }
            coeffs.push_back(static_cast<std::uint32_t>(values[i]));
        }
        table.entries_[{static_cast<std::uint32_t>(values[0]), static_cast<std::uint32_t>(values[1])}] =
            std::move(coeffs);
    }
    return table;
}

ConwayTable ConwayTable::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidArgument, "cannot open conway table " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const ConwayTable &ConwayTable::bundled() {
    static const ConwayTable table = parse(detail::kBundledConwayText);
    return table;
}

std::optional<std::vector<std::uint32_t>> ConwayTable::lookup(std::uint32_t p, std::uint32_t m) const {
    auto it = entries_.find({p, m});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (m == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
    auto ord = checked_pow(p, m);
    if (!ord || *ord > kMaxOrder) {
        fail(Errc::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 2^24 elements");
    }
    order_ = *ord;
    if (modulus_.size() != m + 1) fail(Errc::InvalidArgument, "modulus must have degree m");
    for (auto c : modulus_) {
        if (c >= p) fail(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    if (modulus_.back() != 1) fail(Errc::InvalidArgument, "modulus must be monic");
    if (modulus_.front() == 0) fail(Errc::ReducibleModulus, "modulus divisible by x");

    const u64 units = order_ - 1;
    neg_shift_ = (p == 2) ? 0 : units / 2;
    log_.assign(order_, kNone);
    antilog_.assign(units, 0);

    // Walk gamma^0, gamma^1, ... in coefficient-code form.
    std::vector<std::uint32_t> digits(m, 0);
    digits[0] = 1;
    std::uint32_t low_mask = 0;  // x^m in terms of lower powers, p = 2 only
    if (p == 2) {
        for (std::uint32_t k = 0; k < m; ++k) low_mask |= modulus_[k] << k;
    }
    std::uint32_t code = 1;
    bool primitive = true;
    for (u64 i = 0; i < units; ++i) {
        if (i > 0 && code == 1) {
            primitive = false;
            break;
        }
        antilog_[i] = code;
        log_[code] = static_cast<std::uint32_t>(i);
        // multiply by x
        if (p == 2) {
            const bool carry = (code >> (m - 1)) & 1;
            code = static_cast<std::uint32_t>((code << 1) & (order_ - 1));
            if (carry) code ^= low_mask;
        } else {
            const std::uint32_t carry = digits[m - 1];
            for (std::uint32_t k = m - 1; k > 0; --k) digits[k] = digits[k - 1];
            digits[0] = 0;
            if (carry != 0) {
                for (std::uint32_t k = 0; k < m; ++k) {
                    digits[k] = static_cast<std::uint32_t>((digits[k] + u64{p - modulus_[k]} * carry) % p);
                }
            }
            u64 c = 0;
            for (std::uint32_t k = m; k-- > 0;) c = c * p + digits[k];
            code = static_cast<std::uint32_t>(c);
        }
    }
    if (primitive && code != 1) primitive = false;
    if (!primitive) {
        if (!is_irreducible(modulus_, p)) fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
        fail(Errc::NonPrimitiveModulus, "root of the modulus is not a primitive element");
    }

    zech_.assign(units, kNone);
    for (u64 i = 0; i < units; ++i) {
        const std::uint32_t c = antilog_[i];
        std::uint32_t plus_one;
        if (p == 2) {
            plus_one = c ^ 1u;
        } else {
            const std::uint32_t d0 = c % p;
            plus_one = c - d0 + (d0 + 1) % p;
        }
        zech_[i] = plus_one == 0 ? kNone : log_[plus_one];
    }
}

u64 FieldCtx::sqrt_order() const {
    if (!has_square_order()) fail(Errc::NonSquareAlphabet, "alphabet order is not a square");
    return *checked_pow(p_, m_ / 2);
}

u64 FieldCtx::log(Elem x) const {
    if (x.is_zero()) fail(Errc::InvalidArgument, "log of zero");
    return x.raw - 1;
}

Elem FieldCtx::inv(Elem a) const {
    if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    const u64 units = order_ - 1;
    return exp(units - (a.raw - 1));
}

Elem FieldCtx::div(Elem a, Elem b) const {
    return mul(a, inv(b));
}

Elem FieldCtx::pow(Elem a, i64 e) const {
    const u64 units = order_ - 1;
    if (a.is_zero()) {
        if (e < 0) fail(Errc::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const i64 r = e % static_cast<i64>(units);
    const u64 er = static_cast<u64>(r < 0 ? r + static_cast<i64>(units) : r);
    return exp(mulmod(a.raw - 1, er, units));
}

Elem FieldCtx::conj(Elem a) const {
    const u64 q = sqrt_order();
    if (a.is_zero()) return a;
    return exp(mulmod(a.raw - 1, q, order_ - 1));
}

Elem FieldCtx::from_int(i64 c) const {
    i64 r = c % static_cast<i64>(p_);
    if (r < 0) r += p_;
    if (r == 0) return zero();
    return Elem{log_[static_cast<std::size_t>(r)] + 1};
}

Elem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > m_) fail(Errc::InvalidArgument, "too many coefficients");
    u64 code = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] >= p_) fail(Errc::InvalidArgument, "coefficient out of range");
        code = code * p_ + coeffs[k];
    }
    if (code == 0) return zero();
    return Elem{log_[code] + 1};
}

std::vector<std::uint32_t> FieldCtx::to_coeffs(Elem x) const {
    std::vector<std::uint32_t> out(m_, 0);
    if (x.is_zero()) return out;
    u64 code = antilog_[x.raw - 1];
    for (std::uint32_t k = 0; k < m_; ++k) {
        out[k] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return out;
}

FieldPtr build_field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus,
                     const ConwayTable &table) {
    if (!is_prime(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (m == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
    auto ord = checked_pow(p, m);
    if (!ord || *ord > FieldCtx::kMaxOrder) {
        fail(Errc::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 2^24 elements");
    }
    if (!modulus) {
        modulus = table.lookup(p, m);
        if (!modulus) {
            fail(Errc::InvalidArgument,
                 "no Conway polynomial for (" + std::to_string(p) + ", " + std::to_string(m) + ")");
        }
    }
    return std::make_shared<const FieldCtx>(p, m, std::move(*modulus));
}

// ---------------------------------------------------------------------------
// FieldRegistry

FieldRegistry::FieldRegistry(ConwayTable table) : table_(std::move(table)) {}

FieldRegistry &FieldRegistry::bundled() {
    static FieldRegistry registry(ConwayTable::bundled());
    return registry;
}

FieldPtr FieldRegistry::field(std::uint32_t p, std::uint32_t m) {
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find({p, m}); it != cache_.end()) return it->second;
    }
    FieldPtr f = build_field(p, m, std::nullopt, table_);
    std::lock_guard lock(mu_);
    return cache_.emplace(std::make_pair(p, m), std::move(f)).first->second;
}

FieldPtr FieldRegistry::field_of_order(u64 order) {
    auto pp = as_prime_power(order);
    if (!pp) fail(Errc::InvalidArgument, std::to_string(order) + " is not a prime power");
    return field(static_cast<std::uint32_t>(pp->p), pp->e);
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower FieldTower::build(u64 q, std::uint32_t s, FieldRegistry &registry, u64 gamma_exponent) {
    auto pp = as_prime_power(q);
    if (!pp) fail(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
    if (s == 0) fail(Errc::InvalidArgument, "s must be positive");
    const auto p = static_cast<std::uint32_t>(pp->p);
    const unsigned e = pp->e;
    auto big_order = checked_pow(q, 2 * s);
    if (!big_order || *big_order > FieldCtx::kMaxOrder) {
        fail(Errc::FieldTooLarge, "q^{2s} exceeds 2^24");
    }

    FieldTower t;
    t.q_ = q;
    t.s_ = s;
    t.small_ = registry.field(p, 2 * e);
    t.big_ = registry.field(p, 2 * e * s);

    const u64 units = t.unit_order();
    if (std::gcd(gamma_exponent % units, units) != 1 && units > 1) {
        fail(Errc::InvalidArgument, "gamma exponent must be coprime to q^{2s} - 1");
    }
    t.gamma_ = t.big_->exp(gamma_exponent);

    const u64 small_units = t.small_->order() - 1;
    t.subfield_cofactor_ = units / small_units;

    // Find the power of the small root's candidate image that satisfies the
    // small modulus; with Conway data the first candidate already works.
    const auto &f = t.small_->modulus();
    bool found = false;
    for (u64 twist = 1; twist <= small_units && !found; ++twist) {
        if (std::gcd(twist, small_units) != 1) continue;
        const Elem beta = t.big_->exp(mulmod(t.subfield_cofactor_, twist, units));
        Elem acc = t.big_->zero();
        for (std::size_t k = f.size(); k-- > 0;) {
            acc = t.big_->add(t.big_->mul(acc, beta), t.big_->from_int(f[k]));
        }
        if (acc.is_zero()) {
            t.embed_twist_ = twist;
            t.embed_twist_inv_ = *invmod(twist, small_units);
            found = true;
        }
    }
    if (!found) fail(Errc::InternalInvariant, "no embedding of GF(q^2) into GF(q^{2s}) found");
    return t;
}

Elem FieldTower::embed(Elem x) const {
    if (x.is_zero()) return x;
    const u64 units = unit_order();
    return big_->exp(mulmod(mulmod(x.raw - 1, subfield_cofactor_, units), embed_twist_, units));
}

bool FieldTower::in_small(Elem x) const {
    return x.is_zero() || (x.raw - 1) % subfield_cofactor_ == 0;
}

std::optional<Elem> FieldTower::restrict_to_small(Elem x) const {
    if (!in_small(x)) return std::nullopt;
    if (x.is_zero()) return x;
    const u64 small_units = small_->order() - 1;
    const u64 i = (x.raw - 1) / subfield_cofactor_;
    return small_->exp(mulmod(i, embed_twist_inv_, small_units));
}

Elem FieldTower::frobenius(Elem x, std::uint32_t j) const {
    if (j >= s_) fail(Errc::InvalidArgument, "frobenius power must lie in [0, s)");
    if (x.is_zero()) return x;
    const u64 units = unit_order();
    return big_->exp(mulmod(x.raw - 1, powmod(q_ * q_ % units, j, units), units));
}

Elem FieldTower::trace_to_small(Elem x) const {
    Elem acc = big_->zero();
    for (std::uint32_t j = 0; j < s_; ++j) acc = big_->add(acc, frobenius(x, j));
    return acc;
}

Elem FieldTower::root_of_unity(u64 n1) const {
    const u64 units = unit_order();
    if (n1 == 0 || units % n1 != 0) {
        fail(Errc::NotADivisor, std::to_string(n1) + " does not divide q^{2s} - 1 = " + std::to_string(units));
    }
    return big_->pow(gamma_, static_cast<i64>(units / n1));
}

}  // namespace hbch
