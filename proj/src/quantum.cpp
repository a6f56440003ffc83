#include "hbch/quantum.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "hbch/error.hpp"

namespace hbch {

std::string construction_name(Construction c) {
    return c == Construction::Homothetic ? "homothetic" : "bch";
}

std::optional<Construction> parse_construction(const std::string &name) {
    if (name == "homothetic") return Construction::Homothetic;
    if (name == "bch") return Construction::Bch;
    return std::nullopt;
}

std::string param_string(const QuantumParams &p) {
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + ",\\geq " + std::to_string(p.d) + "]]_" +
           std::to_string(p.q);
}

std::string record_line(const QuantumParams &p) {
    const Provenance &v = p.provenance;
    std::ostringstream out;
    out << p.q << ' ' << p.n << ' ' << p.k << ' ' << p.d << " construction=" << construction_name(v.construction)
        << " q=" << v.q << " s=" << v.s << " n1=" << v.n1 << " lambda=" << v.lambda << " cosets=[";
    for (std::size_t i = 0; i < v.cosets.size(); ++i) out << (i ? "," : "") << v.cosets[i];
    out << "] zero=" << (v.include_zero ? "true" : "false") << " lengthened=" << p.lengthened;
    return out.str();
}

namespace {

u64 parse_u64(const std::string &text, const std::string &what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        fail(Errc::ParseError, "bad " + what + " '" + text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception &) {
        fail(Errc::ParseError, what + " out of range");
    }
}

}  // namespace

QuantumParams parse_record(const std::string &line) {
    std::istringstream in(line);
    std::string tok[4];
    for (auto &t : tok) {
        if (!(in >> t)) fail(Errc::ParseError, "record needs four leading integers");
    }
    QuantumParams p;
    p.q = parse_u64(tok[0], "q");
    p.n = parse_u64(tok[1], "n");
    p.k = parse_u64(tok[2], "k");
    p.d = parse_u64(tok[3], "d");

    std::set<std::string> seen;
    std::string field;
    while (in >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) fail(Errc::ParseError, "expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (!seen.insert(key).second) fail(Errc::ParseError, "duplicate key " + key);
        Provenance &v = p.provenance;
        if (key == "construction") {
            auto c = parse_construction(val);
            if (!c) fail(Errc::ParseError, "unknown construction " + val);
            v.construction = *c;
        } else if (key == "q") {
            v.q = parse_u64(val, key);
        } else if (key == "s") {
            v.s = static_cast<std::uint32_t>(parse_u64(val, key));
        } else if (key == "n1") {
            v.n1 = parse_u64(val, key);
        } else if (key == "lambda") {
            v.lambda = parse_u64(val, key);
        } else if (key == "cosets") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']') fail(Errc::ParseError, "bad coset list");
            std::istringstream list(val.substr(1, val.size() - 2));
            std::string item;
            while (std::getline(list, item, ',')) v.cosets.push_back(parse_u64(item, "coset"));
        } else if (key == "zero") {
            if (val != "true" && val != "false") fail(Errc::ParseError, "zero must be true or false");
            v.include_zero = val == "true";
        } else if (key == "lengthened") {
            p.lengthened = static_cast<unsigned>(parse_u64(val, key));
        } else {
            fail(Errc::ParseError, "unknown key " + key);
        }
    }
    const u64 base = p.n - p.lengthened;
    if (p.lengthened > p.n || p.k > base || (base - p.k) % 2 != 0) {
        fail(Errc::ParseError, "inconsistent n, k and lengthened in record");
    }
    p.provenance.classical_dim = (base - p.k) / 2;
    return p;
}

QuantumParams stabilizer_from_classical(const LinearCode &code, u64 d_bound, Provenance provenance) {
    const auto cert = hermitian_gram_test(code);
    if (!cert.self_orthogonal) {
        fail(Errc::NotSelfOrthogonal, "rows " + std::to_string(cert.violation->first) + " and " +
                                          std::to_string(cert.violation->second) + " are not orthogonal");
    }
    if (d_bound < 1) fail(Errc::InvalidArgument, "distance bound must be at least 1");
    provenance.classical_dim = code.dim();
    QuantumParams p;
    p.q = code.field().sqrt_order();
    p.n = code.length();
    p.k = code.length() - 2 * code.dim();
    p.d = d_bound;
    p.provenance = std::move(provenance);
    return p;
}

QuantumParams lengthen(const QuantumParams &p, unsigned steps) {
    if (steps < 1) fail(Errc::PreconditionViolated, "lengthening needs at least one step");
    QuantumParams out = p;
    out.n += steps;
    out.lengthened += steps;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

DefiningSet select_cosets(const CosetSystemPtr &sys, const PipelineRequest &req) {
    if (req.tau && !req.cosets.empty()) fail(Errc::InvalidArgument, "give either tau or a coset list, not both");
    if (req.tau) return defining_set(sys, *req.tau, false);
    if (req.cosets.empty()) fail(Errc::InvalidArgument, "no cosets selected");
    return defining_set_from_representatives(sys, req.cosets, false);
}

DefiningSet with_zero(const DefiningSet &delta) {
    std::vector<std::size_t> idx = delta.coset_indices();
    idx.insert(idx.begin(), 0);
    return make_defining_set(delta.system_ptr(), std::move(idx));
}

}  // namespace

PipelineReport run_pipeline(const PipelineRequest &req, FieldRegistry &registry) {
    const auto pp = as_prime_power(req.q);
    if (!pp) fail(Errc::InvalidArgument, "q = " + std::to_string(req.q) + " is not a prime power");
    if (req.s < 1) fail(Errc::InvalidArgument, "s must be at least 1");
    const FieldTower tower = FieldTower::build(req.q, req.s, registry);
    const u64 units = tower.unit_order();
    if (req.n1 < 2 || units % req.n1 != 0) {
        fail(Errc::NotADivisor, "n1 = " + std::to_string(req.n1) + " must be a divisor > 1 of " + std::to_string(units));
    }

    const bool homothetic = req.construction == Construction::Homothetic;
    if (homothetic) {
        if (req.lambda < 1 || req.lambda > units / req.n1) {
            fail(Errc::PreconditionViolated, "lambda <= (q^{2s}-1)/n1 = " + std::to_string(units / req.n1) +
                                                 " is required, got " + std::to_string(req.lambda));
        }
        if (units % (req.lambda * req.n1) == 0) {
            fail(Errc::PreconditionViolated,
                 "lambda * n1 = " + std::to_string(req.lambda * req.n1) + " must not divide q^{2s}-1");
        }
        if (req.include_zero && req.lambda % pp->p != 0) {
            fail(Errc::PreconditionViolated, "the zero coset needs p | lambda (p = " + std::to_string(pp->p) + ")");
        }
    } else {
        if (req.lambda != 1) fail(Errc::PreconditionViolated, "the BCH construction has lambda = 1");
        if (req.include_zero) fail(Errc::PreconditionViolated, "the BCH construction does not take the zero coset");
    }

    const CosetSystemPtr sys = CosetSystem::build(homothetic ? units : req.n1, req.q);
    const DefiningSet delta1 = select_cosets(sys, req);
    const DefiningSet reduced = homothetic ? reduce_mod(delta1, req.n1) : delta1;
    if (reduced.includes_zero()) fail(Errc::PreconditionViolated, "the selected cosets reduce onto 0 modulo n1");
    const u64 a_max = reduced.max_representative();

    BoundReport bound = resolve_bound(req.q, req.s, req.n1, req.bound_budget);
    if (static_cast<i64>(a_max) > bound.L) {
        fail(Errc::BoundExceeded,
             "a'_max = " + std::to_string(a_max) + " exceeds L = " + std::to_string(bound.L));
    }

    const DefiningSet delta = req.include_zero ? with_zero(delta1) : delta1;
    const PointSet points = homothetic ? build_points(tower, req.n1, req.lambda) : unity_points(tower, req.n1);
    LinearCode code = subfield_subcode(evaluation_code(points, delta), tower);

    GramCertificate gram = hermitian_gram_test(code);
    if (!gram.self_orthogonal) {
        fail(Errc::InternalInvariant, "Gram test failed although a'_max <= L (rows " +
                                          std::to_string(gram.violation->first) + ", " +
                                          std::to_string(gram.violation->second) + ")");
    }

    const u64 d = next_representative(delta1) + (req.include_zero ? 1 : 0);
    Provenance prov{req.construction, req.q, req.s, req.n1, homothetic ? req.lambda : 1,
                    delta1.representatives(), req.include_zero, code.dim()};
    QuantumParams params = stabilizer_from_classical(code, d, std::move(prov));

    const std::size_t sum = delta.size();
    const std::size_t rank = code.dim();
    const i64 k_lb = static_cast<i64>(points.size()) - 2 * static_cast<i64>(sum);
    return PipelineReport{std::move(params), delta, reduced, std::move(bound), a_max, sum, k_lb,
                          rank, std::move(gram), std::move(code)};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<u64> case_form_lengths(u64 q, std::uint32_t s, u64 units) {
    std::set<u64> out;
    const u64 qs = *checked_pow(q, s);
    for (u64 n2 : divisors(qs - 1)) {
        const u64 n1 = (qs + 1) * n2;
        if (units % n1 == 0) out.insert(n1);
    }
    for (std::uint32_t a = 0; a < s; ++a) {
        const u64 n1 = (qs - 1) * (*checked_pow(q, a) + 1);
        if (units % n1 == 0) out.insert(n1);
    }
    std::vector<u64> v;
    for (u64 n1 : out) {
        if (!classify_case(q, s, n1).empty()) v.push_back(n1);
    }
    return v;
}

bool should_skip(const Error &e) {
    switch (e.code()) {
        case Errc::BoundExceeded:
        case Errc::PreconditionViolated:
        case Errc::IndexOutOfRange:
        case Errc::Exhausted:
            return true;
        default:
            return false;
    }
}

auto sort_key(const QuantumParams &p) {
    const Provenance &v = p.provenance;
    return std::make_tuple(p.q, p.n, -static_cast<i64>(p.k), -static_cast<i64>(p.d), p.lengthened,
                           static_cast<int>(v.construction), v.s, v.n1, v.lambda, v.cosets, v.include_zero);
}

}  // namespace

std::vector<PipelineRequest> scan_requests(const ScanGrid &grid) {
    std::vector<PipelineRequest> reqs = grid.pinned;
    for (u64 q : grid.qs) {
        const auto pp = as_prime_power(q);
        if (!pp) fail(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
        for (std::uint32_t s : grid.ss) {
            if (s < 1) fail(Errc::InvalidArgument, "s must be at least 1");
            const auto order = checked_pow(q, 2 * s);
            if (!order || *order > FieldCtx::kMaxOrder) continue;
            const u64 units = *order - 1;

            std::vector<u64> lengths;
            switch (grid.n1_mode) {
                case N1Mode::CaseForms:
                    lengths = case_form_lengths(q, s, units);
                    break;
                case N1Mode::AllDivisors:
                    for (u64 d : divisors(units)) {
                        if (d >= 2) lengths.push_back(d);
                    }
                    break;
                case N1Mode::Explicit:
                    for (u64 n1 : grid.n1s) {
                        if (n1 >= 2 && units % n1 == 0) lengths.push_back(n1);
                    }
                    break;
            }

            for (u64 n1 : lengths) {
                const u64 lambda_top = std::min(grid.lambda_max, units / n1);
                for (u64 lambda = 1; lambda <= lambda_top; ++lambda) {
                    const bool bch = lambda == 1;
                    if (!bch && units % (lambda * n1) == 0) continue;
                    for (std::size_t tau = 1; tau <= grid.tau_max; ++tau) {
                        PipelineRequest r;
                        r.construction = bch ? Construction::Bch : Construction::Homothetic;
                        r.q = q;
                        r.s = s;
                        r.n1 = n1;
                        r.lambda = lambda;
                        r.tau = tau;
                        reqs.push_back(r);
                        if (grid.try_zero && !bch && lambda % pp->p == 0) {
                            r.include_zero = true;
                            reqs.push_back(r);
                        }
                    }
                }
            }
        }
    }
    return reqs;
}

std::vector<QuantumParams> scan(const ScanGrid &grid, FieldRegistry &registry) {
    if (grid.budget == 0) return {};
    const auto reqs = scan_requests(grid);
    if (reqs.size() > grid.budget) {
        fail(Errc::BudgetExceeded, std::to_string(reqs.size()) + " pipeline runs exceed the budget of " +
                                       std::to_string(grid.budget));
    }

    std::vector<std::optional<QuantumParams>> results(reqs.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex err_mu;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= reqs.size()) return;
            {
                std::lock_guard<std::mutex> lock(err_mu);
                if (error) return;
            }
            try {
                results[i] = run_pipeline(reqs[i], registry).params;
            } catch (const Error &e) {
                if (should_skip(e)) continue;
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) error = std::current_exception();
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, grid.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<QuantumParams> out;
    for (auto &r : results) {
        if (r) out.push_back(std::move(*r));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return sort_key(a) < sort_key(b); });
    std::vector<QuantumParams> unique;
    for (auto &p : out) {
        if (!unique.empty() && unique.back().q == p.q && unique.back().n == p.n && unique.back().k == p.k &&
            unique.back().d == p.d) {
            continue;
        }
        unique.push_back(std::move(p));
    }
    return unique;
}

}  // namespace hbch
