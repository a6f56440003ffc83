#include "hbch/hermitian.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hbch/error.hpp"

namespace hbch {

namespace {

__extension__ typedef __int128 i128;

u64 ipow(u64 base, unsigned exp) {
    auto v = checked_pow(base, exp);
    if (!v) fail(Errc::TooLarge, std::to_string(base) + "^" + std::to_string(exp) + " overflows");
    return *v;
}

bool divides_unit_order(u64 q, std::uint32_t s, u64 n1) {
    return n1 != 0 && powmod(q, 2 * u64{s}, n1) == 1 % n1;
}

void require_tower_divisor(u64 q, std::uint32_t s, u64 n1) {
    if (q < 2 || s < 1) fail(Errc::InvalidArgument, "need q >= 2 and s >= 1");
    if (!divides_unit_order(q, s, n1)) {
        fail(Errc::NotADivisor,
             std::to_string(n1) + " does not divide " + std::to_string(q) + "^" + std::to_string(2 * s) + " - 1");
    }
}

}  // namespace

GramCertificate hermitian_gram_test(const LinearCode &code) {
    const FieldCtx &f = code.field();
    if (!f.has_square_order()) {
        fail(Errc::NonSquareAlphabet, "alphabet of order " + std::to_string(f.order()) + " is not a square");
    }
    const Matrix &g = code.generator();
    Matrix conj = g;
    for (std::size_t r = 0; r < conj.rows(); ++r) {
        for (auto &x : conj.row(r)) x = f.conj(x);
    }
    GramCertificate cert;
    cert.gram = multiply_transposed(f, g, conj);
    for (std::size_t i = 0; i < cert.gram.rows() && !cert.violation; ++i) {
        for (std::size_t j = 0; j < cert.gram.cols(); ++j) {
            if (!cert.gram.at(i, j).is_zero()) {
                cert.self_orthogonal = false;
                cert.violation = std::make_pair(i, j);
                cert.value = cert.gram.at(i, j);
                break;
            }
        }
    }
    return cert;
}

bool monomial_pair_orthogonal(const PointSet &points, u64 e, u64 e2) {
    const FieldCtx &f = points.tower.big();
    const u64 units = points.tower.unit_order();
    const i64 ee = static_cast<i64>(e % units), ee2 = static_cast<i64>(e2 % units);
    const i64 q = static_cast<i64>(points.tower.q());
    Elem acc = f.zero();
    for (Elem a : points.points) {
        acc = f.add(acc, f.mul(f.pow(a, ee), f.pow(f.pow(a, ee2), q)));
    }
    return acc.is_zero();
}

bool monomial_pair_orthogonal_factorized(const PointSet &points, u64 e, u64 e2) {
    const FieldTower &tower = points.tower;
    const u64 units = tower.unit_order();
    const u64 exponent = (e % units + mulmod(tower.q(), e2 % units, units)) % units;
    // Sum over the n1-th roots of unity: n1 (nonzero mod p) or 0.
    if (exponent % points.n1 != 0) return true;
    const u64 lambda = points.lambda;
    if (exponent == 0) return lambda % tower.p() == 0;
    // 1 + g + ... + g^{lambda-1} with g = gamma^exponent != 1
    return mulmod(lambda % units, exponent, units) == 0;
}

// ---------------------------------------------------------------------------

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::C1: return "1";
        case CaseId::C2: return "2";
        case CaseId::C3: return "3";
        case CaseId::C3a0: return "3a0";
        case CaseId::C4: return "4";
    }
    return "?";
}

std::vector<CaseDescriptor> classify_case(u64 q, std::uint32_t s, u64 n1) {
    std::vector<CaseDescriptor> out;
    if (q < 2 || s < 1 || !divides_unit_order(q, s, n1)) return out;
    const auto qs_opt = checked_pow(q, s);
    if (!qs_opt) return out;
    const u64 qs = *qs_opt;

    if (n1 % (qs + 1) == 0) {
        const u64 n2 = n1 / (qs + 1);
        if ((qs - 1) % n2 == 0) out.push_back({s % 2 == 0 ? CaseId::C1 : CaseId::C2, q, s, n1, n2, false});
    }
    for (std::uint32_t a = 0; a < s; ++a) {
        const i128 prod = static_cast<i128>(qs - 1) * static_cast<i128>(ipow(q, a) + 1);
        if (prod != static_cast<i128>(n1) || (s + a) % 2 != 0) continue;
        const std::uint32_t half = (s + a) / 2;
        if (half % 2 == 1) {
            out.push_back({a == 0 ? CaseId::C3a0 : CaseId::C3, q, s, n1, a, false});
        } else {
            out.push_back({CaseId::C4, q, s, n1, a, q == 2 && a + 2 == s});
        }
    }
    return out;
}

BoundResult sharp_bound_bruteforce(u64 q, std::uint32_t s, u64 n1, u64 budget) {
    require_tower_divisor(q, s, n1);
    if (n1 < 2) fail(Errc::InvalidArgument, "n1 must be at least 2");
    if (n1 > budget) {
        fail(Errc::BudgetExceeded, "n1 = " + std::to_string(n1) + " exceeds the enumeration budget " +
                                       std::to_string(budget));
    }
    const auto qinv = invmod(q % n1, n1);
    if (!qinv) fail(Errc::NotCoprime, "q is not invertible modulo n1");

    u64 best = std::numeric_limits<u64>::max();
    Witness w;
    u64 step = 1;  // q^{2k} mod n1
    const u64 q2 = mulmod(q, q, n1);
    for (std::uint32_t k = 0; k < s; ++k) {
        for (u64 y = 1; y < n1; ++y) {
            const u64 rhs = (n1 - mulmod(step, y, n1)) % n1;
            const u64 x = mulmod(rhs, *qinv, n1);
            if (x == 0) continue;
            const u64 m = std::max(x, y);
            if (m < best) {
                best = m;
                w.x = x;
                w.y = y;
                w.k = k;
            }
        }
        step = mulmod(step, q2, n1);
    }
    if (best == std::numeric_limits<u64>::max()) fail(Errc::NoSolution, "no admissible pair found");

    i128 total = static_cast<i128>(q) * w.x;
    i128 pk = 1;
    for (std::uint32_t i = 0; i < 2 * w.k; ++i) pk *= q;
    total += pk * static_cast<i128>(w.y);
    if (total % n1 != 0) fail(Errc::InternalInvariant, "witness does not satisfy the congruence");
    w.beta = static_cast<u64>(total / n1);
    return BoundResult{static_cast<i64>(best) - 1, w};
}

BoundResult sharp_bound_closed_form(const CaseDescriptor &desc) {
    if (desc.excluded) fail(Errc::ExcludedCase, "no closed form for q = 2, a = s - 2");
    const i64 q = static_cast<i64>(desc.q);
    const std::uint32_t s = desc.s;
    auto p = [&](unsigned e) { return static_cast<i64>(ipow(desc.q, e)); };
    i64 L = 0;
    switch (desc.id) {
        case CaseId::C1: {
            const i64 n2 = static_cast<i64>(desc.aux);
            const i64 t = p(s - 1);
            L = q * n2 - std::min((q - 1) * n2 / (t + 1), ((q - 1) * n2 - 1) / t) - 1;
            break;
        }
        case CaseId::C2:
            L = static_cast<i64>(desc.aux) - 1;
            break;
        case CaseId::C3: {
            const auto a = static_cast<std::uint32_t>(desc.aux);
            L = p((s + a) / 2) + p((s - a) / 2) - 2;
            break;
        }
        case CaseId::C3a0:
            L = 2 * p(s / 2) - 3;
            break;
        case CaseId::C4: {
            const auto a = static_cast<std::uint32_t>(desc.aux);
            L = q * (p((s + a) / 2) - p(a) - 1) - 1;
            break;
        }
    }
    return BoundResult{L, std::nullopt};
}

i64 aly_bound(u64 q, std::uint32_t s, u64 n1) {
    require_tower_divisor(q, s, n1);
    if (s % 2 == 0) {
        const i128 num = static_cast<i128>(n1) * (static_cast<i128>(ipow(q, s + 1)) - static_cast<i128>(q * q) + 1);
        const i128 den = static_cast<i128>(ipow(q, 2 * s)) - 1;
        return static_cast<i64>(num / den) - 1;
    }
    return static_cast<i64>(n1 / (ipow(q, s) + 1)) - 1;
}

BoundReport resolve_bound(u64 q, std::uint32_t s, u64 n1, u64 budget) {
    require_tower_divisor(q, s, n1);
    if (n1 < 2) fail(Errc::InvalidArgument, "n1 must be at least 2");
    BoundReport r;
    r.q = q;
    r.s = s;
    r.n1 = n1;
    r.aly = aly_bound(q, s, n1);
    for (const auto &d : classify_case(q, s, n1)) {
        CaseBound cb{d, std::nullopt};
        if (!d.excluded) cb.closed = sharp_bound_closed_form(d).L;
        r.cases.push_back(cb);
    }
    if (n1 <= budget) r.brute = sharp_bound_bruteforce(q, s, n1, budget);

    std::optional<i64> closed;
    bool closed_conflict = false;
    for (const auto &cb : r.cases) {
        if (!cb.closed) continue;
        if (closed && *closed != *cb.closed) closed_conflict = true;
        if (!closed) closed = cb.closed;
        if (r.brute && *cb.closed != r.brute->L) r.closed_forms_agree = false;
    }
    if (closed_conflict) r.closed_forms_agree = false;

    if (r.brute) {
        r.L = r.brute->L;
        r.source = BoundReport::Source::BruteForce;
        r.unvalidated = !closed.has_value() && !r.cases.empty();
    } else if (closed && !closed_conflict) {
        r.L = *closed;
        r.source = BoundReport::Source::ClosedForm;
    } else if (closed_conflict) {
        fail(Errc::AmbiguousCase, "matching cases give different closed forms and brute force is over budget");
    } else {
        fail(Errc::BudgetExceeded, "no closed form applies and n1 = " + std::to_string(n1) +
                                       " exceeds the enumeration budget " + std::to_string(budget));
    }
    return r;
}

std::vector<std::string> bound_rows(const BoundReport &report) {
    const std::string head = std::to_string(report.q) + ' ' + std::to_string(report.s) + ' ' + std::to_string(report.n1);
    std::string tail;
    if (report.brute) {
        const Witness &w = *report.brute->witness;
        tail = std::to_string(report.brute->L) + ' ' + std::to_string(report.aly) + ' ' + std::to_string(w.x) + ' ' +
               std::to_string(w.y) + ' ' + std::to_string(w.k);
    } else {
        tail = "- " + std::to_string(report.aly) + " - - -";
    }
    std::vector<std::string> rows;
    if (report.cases.empty()) rows.push_back(head + " none - " + tail);
    for (const auto &cb : report.cases) {
        rows.push_back(head + ' ' + case_name(cb.desc.id) + ' ' + (cb.closed ? std::to_string(*cb.closed) : "-") +
                       ' ' + tail);
    }
    return rows;
}

}  // namespace hbch
