#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbch/evalcodes.hpp"

namespace hbch {

struct GramCertificate {
    bool self_orthogonal = true;
    /// First (row, col) with a nonzero Hermitian product, in row-major order.
    std::optional<std::pair<std::size_t, std::size_t>> violation;
    Elem value;
    Matrix gram;
};

/// Full k x k Gram matrix G * conj(G)^T with conj(x) = x^q.
GramCertificate hermitian_gram_test(const LinearCode &code);

/// ev_P(X^e) .h ev_P(X^e2) == 0, evaluated directly over the points.
bool monomial_pair_orthogonal(const PointSet &points, u64 e, u64 e2);

/// Same predicate via the factorization into a roots-of-unity sum and a
/// geometric sum over the homothety classes.
bool monomial_pair_orthogonal_factorized(const PointSet &points, u64 e, u64 e2);

enum class CaseId { C1, C2, C3, C3a0, C4 };

std::string case_name(CaseId id);

struct CaseDescriptor {
    CaseId id = CaseId::C1;
    u64 q = 0;
    std::uint32_t s = 0;
    u64 n1 = 0;
    u64 aux = 0;  // n2 for cases 1 and 2, a otherwise
    bool excluded = false;

    friend bool operator==(const CaseDescriptor &, const CaseDescriptor &) = default;
};

/// Every factorization pattern n1 satisfies; empty when n1 does not divide q^{2s}-1.
std::vector<CaseDescriptor> classify_case(u64 q, std::uint32_t s, u64 n1);

/// Minimal solution of q x + q^{2k} y = beta n1 used by the brute-force bound.
struct Witness {
    u64 x = 0;
    u64 y = 0;
    std::uint32_t k = 0;
    u64 beta = 0;

    friend bool operator==(const Witness &, const Witness &) = default;
};

struct BoundResult {
    i64 L = 0;
    std::optional<Witness> witness;  // present for brute force

    friend bool operator==(const BoundResult &, const BoundResult &) = default;
};

inline constexpr u64 kDefaultBoundBudget = 100000;

/// L = min{max(x, y) : 1 <= x, y < n1, q x + q^{2k} y = 0 mod n1, 0 <= k < s} - 1.
/// Ties on max(x, y) go to the smallest k, then the smallest y.
BoundResult sharp_bound_bruteforce(u64 q, std::uint32_t s, u64 n1, u64 budget = kDefaultBoundBudget);

BoundResult sharp_bound_closed_form(const CaseDescriptor &desc);

/// Prior-work bound used for comparison.
i64 aly_bound(u64 q, std::uint32_t s, u64 n1);

struct CaseBound {
    CaseDescriptor desc;
    std::optional<i64> closed;  // absent for the excluded subcase

    friend bool operator==(const CaseBound &, const CaseBound &) = default;
};

struct BoundReport {
    u64 q = 0;
    std::uint32_t s = 0;
    u64 n1 = 0;
    std::vector<CaseBound> cases;
    std::optional<BoundResult> brute;
    i64 aly = 0;
    i64 L = 0;  // the value used downstream
    enum class Source { ClosedForm, BruteForce } source = Source::BruteForce;
    /// False when some closed form differs from the brute-force value.
    bool closed_forms_agree = true;
    /// Only the excluded subcase matched: the value has no closed-form confirmation.
    bool unvalidated = false;

    friend bool operator==(const BoundReport &, const BoundReport &) = default;
};

/// Brute force when n1 <= budget, closed forms otherwise. When both are
/// available and differ the brute-force value is used.
BoundReport resolve_bound(u64 q, std::uint32_t s, u64 n1, u64 budget = kDefaultBoundBudget);

/// "q s n1 case L_closed L_brute aly_bound witness_x witness_y witness_k",
/// one row per matching case ("-" for missing entries, case "none" when empty).
std::vector<std::string> bound_rows(const BoundReport &report);

}  // namespace hbch
