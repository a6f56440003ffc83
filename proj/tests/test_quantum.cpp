#include <gtest/gtest.h>

#include <set>

#include "hbch/error.hpp"
#include "hbch/quantum.hpp"
#include "oracles.hpp"

using namespace hbch;

namespace {

template <typename F>
void expect_errc(Errc code, F &&f) {
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(code);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

PipelineRequest binary_request() {
    PipelineRequest r;
    r.q = 2;
    r.s = 5;
    r.n1 = 93;
    r.lambda = 2;
    r.cosets = {1, 2, 3, 5, 6, 7};
    return r;
}

PipelineRequest quinary_request(std::size_t tau) {
    PipelineRequest r;
    r.q = 5;
    r.s = 2;
    r.n1 = 48;
    r.lambda = 2;
    r.tau = tau;
    return r;
}

PipelineRequest octal_request() {
    PipelineRequest r;
    r.construction = Construction::Bch;
    r.q = 8;
    r.s = 2;
    r.n1 = 91;
    r.tau = 9;
    return r;
}

/// Designed distance recomputed from the provenance with plain integer cosets.
u64 designed_distance(const QuantumParams &p) {
    const auto &pv = p.provenance;
    const u64 modulus =
        pv.construction == Construction::Bch ? pv.n1 : oracle::ipow(pv.q, 2 * pv.s) - 1;
    std::set<u64> present;
    for (const auto &c : oracle::cosets(modulus, pv.q)) {
        if (std::find(pv.cosets.begin(), pv.cosets.end(), c.front()) != pv.cosets.end()) {
            present.insert(c.begin(), c.end());
        }
    }
    u64 j = 1;
    while (present.count(j)) ++j;
    return j + (pv.include_zero ? 1 : 0);
}

LinearCode rebuild(const Provenance &pv) {
    auto t = FieldTower::build(pv.q, pv.s);
    const bool hom = pv.construction == Construction::Homothetic;
    auto sys = CosetSystem::build(hom ? t.unit_order() : pv.n1, pv.q);
    auto d = defining_set_from_representatives(sys, pv.cosets, pv.include_zero);
    auto pts = hom ? build_points(t, pv.n1, pv.lambda) : unity_points(t, pv.n1);
    return subfield_subcode(evaluation_code(pts, d), t);
}

}  // namespace

TEST(Stabilizer, FromClassical) {
    auto t = FieldTower::build(2, 2);
    auto z = stabilizer_from_classical(LinearCode::zero_code(t.small_ptr(), 6), 1);
    EXPECT_EQ(z.n, 6u);
    EXPECT_EQ(z.k, 6u);
    EXPECT_EQ(z.q, 2u);
    EXPECT_EQ(param_string(z), "[[6,6,\\geq 1]]_2");
    expect_errc(Errc::NotSelfOrthogonal,
                [&] { stabilizer_from_classical(LinearCode::full_space(t.small_ptr(), 4), 2); });
    expect_errc(Errc::NonSquareAlphabet,
                [] { stabilizer_from_classical(LinearCode::zero_code(build_field(2, 3), 4), 1); });
}

TEST(Pipeline, BinaryHomothetic) {
    auto r = run_pipeline(binary_request());
    EXPECT_EQ(param_string(r.params), "[[186,126,\\geq 9]]_2");
    EXPECT_EQ(r.rank, 30u);
    EXPECT_EQ(r.coset_size_sum, 30u);
    EXPECT_EQ(r.k_lower_bound, 126);
    EXPECT_EQ(r.max_reduced_rep, 7u);
    EXPECT_EQ(r.bound.L, 10);
    EXPECT_TRUE(r.gram.self_orthogonal);
    EXPECT_EQ(r.params.provenance.classical_dim, 30u);
}

TEST(Pipeline, QuinaryHomothetic) {
    auto a = run_pipeline(quinary_request(7));
    EXPECT_EQ(param_string(a.params), "[[96,68,\\geq 8]]_5");
    EXPECT_EQ(a.rank, 14u);
    auto b = run_pipeline(quinary_request(6));
    EXPECT_EQ(param_string(b.params), "[[96,72,\\geq 7]]_5");
    EXPECT_EQ(b.rank, 12u);
}

TEST(Pipeline, OctalBch) {
    auto r = run_pipeline(octal_request());
    EXPECT_EQ(param_string(r.params), "[[91,55,\\geq 11]]_8");
    EXPECT_EQ(r.rank, 18u);
    EXPECT_EQ(r.bound.L, 10);
}

TEST(Pipeline, Preconditions) {
    auto r = binary_request();
    r.lambda = 11;  // 11 * 93 = 1023
    expect_errc(Errc::PreconditionViolated, [&] { run_pipeline(r); });
    r.lambda = 12;
    expect_errc(Errc::PreconditionViolated, [&] { run_pipeline(r); });
    r.lambda = 3;
    r.include_zero = true;  // p = 2 does not divide 3
    expect_errc(Errc::PreconditionViolated, [&] { run_pipeline(r); });
    r.lambda = 0;
    expect_errc(Errc::PreconditionViolated, [&] { run_pipeline(r); });

    auto b = octal_request();
    b.lambda = 2;
    expect_errc(Errc::PreconditionViolated, [&] { run_pipeline(b); });
    b.lambda = 1;
    b.include_zero = true;
    expect_errc(Errc::PreconditionViolated, [&] { run_pipeline(b); });

    auto n = binary_request();
    n.n1 = 94;
    expect_errc(Errc::NotADivisor, [&] { run_pipeline(n); });
    n.n1 = 1;
    expect_errc(Errc::NotADivisor, [&] { run_pipeline(n); });
    n = binary_request();
    n.q = 6;
    expect_errc(Errc::InvalidArgument, [&] { run_pipeline(n); });
}

TEST(Pipeline, BoundExceeded) {
    auto r = binary_request();
    r.cosets = {1, 2, 3, 5, 6, 7, 9, 11};
    expect_errc(Errc::BoundExceeded, [&] { run_pipeline(r); });
    auto b = octal_request();
    b.tau = 10;
    expect_errc(Errc::BoundExceeded, [&] { run_pipeline(b); });
}

TEST(Pipeline, ZeroCosetAddsOne) {
    auto r = binary_request();
    r.lambda = 4;
    auto without = run_pipeline(r);
    r.include_zero = true;
    auto with = run_pipeline(r);
    EXPECT_EQ(with.params.d, without.params.d + 1);
    EXPECT_EQ(with.coset_size_sum, without.coset_size_sum + 1);
    EXPECT_LE(with.params.k, without.params.k);
}

TEST(Pipeline, PropertiesOverSmallGrid) {
    for (auto [q, s] : std::vector<std::pair<u64, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
        auto t = FieldTower::build(q, s);
        for (u64 n1 : divisors(t.unit_order())) {
            if (n1 < 3) continue;
            for (u64 lambda = 1; lambda <= 4; ++lambda) {
                for (std::size_t tau = 1; tau <= 4; ++tau) {
                    PipelineRequest req;
                    req.q = q;
                    req.s = s;
                    req.n1 = n1;
                    req.lambda = lambda;
                    req.tau = tau;
                    try {
                        auto r = run_pipeline(req);
                        EXPECT_GE(static_cast<i64>(r.params.k), r.k_lower_bound);
                        EXPECT_EQ(r.params.n, lambda * n1);
                        EXPECT_EQ(r.params.k, r.params.n - 2 * r.rank);
                        EXPECT_EQ(r.params.d, designed_distance(r.params));
                        EXPECT_LE(static_cast<i64>(r.max_reduced_rep), r.bound.L);
                    } catch (const Error &e) {
                        EXPECT_FALSE(is_internal(e.code())) << e.what();
                    }
                }
            }
        }
    }
}

TEST(Lengthen, Examples) {
    auto p = run_pipeline(binary_request()).params;
    EXPECT_EQ(param_string(lengthen(p, 1)), "[[187,126,\\geq 9]]_2");
    EXPECT_EQ(param_string(lengthen(p, 3)), "[[189,126,\\geq 9]]_2");
    EXPECT_EQ(lengthen(p, 3).lengthened, 3u);
    EXPECT_EQ(lengthen(lengthen(p, 1), 2), lengthen(p, 3));
    expect_errc(Errc::PreconditionViolated, [&] { lengthen(p, 0); });
    auto o = run_pipeline(octal_request()).params;
    EXPECT_EQ(param_string(lengthen(o, 1)), "[[92,55,\\geq 11]]_8");
}

TEST(Record, RoundTrip) {
    auto p = run_pipeline(binary_request()).params;
    const std::string line = record_line(p);
    EXPECT_EQ(line,
              "2 186 126 9 construction=homothetic q=2 s=5 n1=93 lambda=2 cosets=[1,2,3,5,6,7] zero=false "
              "lengthened=0");
    EXPECT_EQ(parse_record(line), p);
    auto o = lengthen(run_pipeline(octal_request()).params, 1);
    EXPECT_EQ(parse_record(record_line(o)), o);
    expect_errc(Errc::ParseError, [] { parse_record("2 186 126"); });
    expect_errc(Errc::ParseError, [] { parse_record("2 186 x 9 construction=homothetic"); });
}

TEST(Construction, Names) {
    EXPECT_EQ(construction_name(Construction::Bch), "bch");
    EXPECT_EQ(parse_construction("homothetic"), Construction::Homothetic);
    EXPECT_FALSE(parse_construction("other").has_value());
}

TEST(Scan, PinnedGivesWorkedCodes) {
    ScanGrid g;
    g.pinned = {binary_request(), quinary_request(7), quinary_request(6), octal_request()};
    auto out = scan(g);
    std::vector<std::string> got;
    for (const auto &p : out) got.push_back(param_string(p));
    EXPECT_EQ(got, (std::vector<std::string>{"[[186,126,\\geq 9]]_2", "[[96,72,\\geq 7]]_5", "[[96,68,\\geq 8]]_5",
                                             "[[91,55,\\geq 11]]_8"}));
}

TEST(Scan, Budget) {
    ScanGrid g;
    g.qs = {2};
    g.ss = {3};
    g.lambda_max = 9;
    g.tau_max = 5;
    g.budget = 0;
    EXPECT_TRUE(scan(g).empty());
    g.budget = 3;
    ASSERT_GT(scan_requests(g).size(), 3u);
    expect_errc(Errc::BudgetExceeded, [&] { scan(g); });
}

TEST(Scan, ResultsReverifiedIndependently) {
    ScanGrid g;
    g.qs = {2};
    g.ss = {3};
    g.lambda_max = 9;
    g.tau_max = 5;
    g.try_zero = true;
    auto out = scan(g);
    ASSERT_FALSE(out.empty());
    std::set<std::tuple<u64, u64, u64, u64>> keys;
    for (const auto &p : out) {
        EXPECT_TRUE(keys.insert({p.q, p.n, p.k, p.d}).second);
        auto code = rebuild(p.provenance);
        EXPECT_EQ(code.dim(), p.provenance.classical_dim);
        EXPECT_EQ(p.k, p.n - 2 * code.dim());
        EXPECT_TRUE(hermitian_gram_test(code).self_orthogonal);
        EXPECT_EQ(p.d, designed_distance(p));
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        const auto &a = out[i - 1], &b = out[i];
        EXPECT_TRUE(std::make_tuple(a.q, a.n, -static_cast<i64>(a.k), -static_cast<i64>(a.d)) <
                    std::make_tuple(b.q, b.n, -static_cast<i64>(b.k), -static_cast<i64>(b.d)));
    }
    g.jobs = 4;
    EXPECT_EQ(scan(g), out);
}

TEST(Scan, DesignedDistanceHoldsOnSmallCodes) {
    // Exhaustive minimum distance of the Hermitian dual whenever it is cheap enough.
    ScanGrid g;
    g.qs = {2, 3};
    g.ss = {2};
    g.n1_mode = N1Mode::AllDivisors;
    g.lambda_max = 4;
    g.tau_max = 3;
    g.try_zero = true;
    std::size_t checked = 0;
    for (const auto &p : scan(g)) {
        auto code = rebuild(p.provenance);
        auto dual = hermitian_dual(code);
        if (dual.dim() == 0 || dual.dim() > 9) continue;
        EXPECT_GE(min_distance_exhaustive(dual, {std::nullopt, 4}), p.d) << record_line(p);
        ++checked;
    }
    EXPECT_GT(checked, 0u);
}
