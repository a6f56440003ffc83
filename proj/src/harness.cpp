#include "hbch/harness.hpp"

#include <functional>
#include <sstream>

#include "hbch/cosets.hpp"
#include "hbch/error.hpp"
#include "hbch/hermitian.hpp"
#include "hbch/quantum.hpp"

namespace hbch {

namespace {

template <typename Seq>
std::string set_string(const Seq &values) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto v : values) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

struct Recorder {
    std::vector<Claim> claims;

    void check(const std::string &id, const std::string &expected, const std::function<std::string()> &compute) {
        Claim c{id, expected, "", false};
        try {
            c.actual = compute();
            c.pass = c.actual == expected;
        } catch (const std::exception &e) {
            c.actual = std::string("error: ") + e.what();
        }
        claims.push_back(std::move(c));
    }
};

std::string coset_of(u64 n, u64 q, u64 rep) {
    auto sys = CosetSystem::build(n, q);
    auto i = sys->index_of_representative(rep);
    if (!i) return "not a representative";
    return set_string(sys->coset(*i));
}

std::string reduced_coset(const DefiningSet &reduced, u64 rep) {
    if (!reduced.contains(rep)) return "absent";
    const auto &sys = reduced.system();
    return set_string(sys.coset(sys.coset_of(rep)));
}

std::string code_summary(const PipelineReport &r) {
    return param_string(r.params) + " rank=" + std::to_string(r.rank) +
           " gram=" + (r.gram.self_orthogonal ? "zero" : "nonzero");
}

}  // namespace

std::vector<Claim> run_reproduction(FieldRegistry &registry) {
    Recorder rec;

    // Binary example: q = 2, s = 5, n1 = 93, lambda = 2.
    const std::vector<std::pair<u64, std::string>> binary_cosets = {
        {1, "{1,4,16,64,256}"}, {2, "{2,8,32,128,512}"}, {3, "{3,12,48,192,768}"},
        {5, "{5,20,80,257,320}"}, {6, "{6,24,96,384,513}"}, {7, "{7,28,112,448,769}"}};
    for (const auto &[rep, want] : binary_cosets) {
        rec.check("cosets n=1023 q=2 rep=" + std::to_string(rep), want, [&] { return coset_of(1023, 2, rep); });
    }
    const std::vector<u64> binary_reps = {1, 2, 3, 5, 6, 7};
    auto binary_reduced = [&] {
        auto sys = CosetSystem::build(1023, 2);
        return reduce_mod(defining_set_from_representatives(sys, binary_reps, false), 93);
    };
    const std::vector<std::pair<u64, std::string>> binary_reduced_cosets = {
        {1, "{1,4,16,64,70}"}, {2, "{2,8,32,35,47}"}, {3, "{3,6,12,24,48}"},
        {5, "{5,20,41,71,80}"}, {7, "{7,19,25,28,76}"}};
    for (const auto &[rep, want] : binary_reduced_cosets) {
        rec.check("reduced coset n1=93 rep=" + std::to_string(rep), want,
                  [&] { return reduced_coset(binary_reduced(), rep); });
    }
    rec.check("reduced max representative n1=93", "7",
              [&] { return std::to_string(binary_reduced().max_representative()); });
    rec.check("case q=2 s=5 n1=93", "3 a=1", [] {
        auto cases = classify_case(2, 5, 93);
        std::string out;
        for (const auto &c : cases) out += (out.empty() ? "" : ";") + case_name(c.id) + " a=" + std::to_string(c.aux);
        return out;
    });
    rec.check("L closed form q=2 s=5 n1=93", "10",
              [] { return std::to_string(sharp_bound_closed_form(classify_case(2, 5, 93).at(0)).L); });
    rec.check("L brute force q=2 s=5 n1=93", "10", [] { return std::to_string(sharp_bound_bruteforce(2, 5, 93).L); });
    rec.check("closed form exceeds Aly bound q=2 s=5 n1=93", "10 > 1", [] {
        return std::to_string(sharp_bound_closed_form(classify_case(2, 5, 93).at(0)).L) + " > " +
               std::to_string(aly_bound(2, 5, 93));
    });

    PipelineRequest binary;
    binary.q = 2;
    binary.s = 5;
    binary.n1 = 93;
    binary.lambda = 2;
    binary.cosets = binary_reps;
    std::optional<QuantumParams> binary_params;
    rec.check("code q=2 n=186", "[[186,126,\\geq 9]]_2 rank=30 gram=zero", [&] {
        auto r = run_pipeline(binary, registry);
        binary_params = r.params;
        return code_summary(r);
    });
    for (unsigned t = 1; t <= 3; ++t) {
        rec.check("lengthened q=2 steps=" + std::to_string(t), "[[" + std::to_string(186 + t) + ",126,\\geq 9]]_2",
                  [&] {
                      if (!binary_params) fail(Errc::PreconditionViolated, "base code unavailable");
                      return param_string(lengthen(*binary_params, t));
                  });
    }

    // Quinary examples: q = 5, s = 2, n1 = 48, lambda = 2.
    for (u64 rep = 1; rep <= 7; ++rep) {
        rec.check("cosets n=624 q=5 rep=" + std::to_string(rep),
                  "{" + std::to_string(rep) + "," + std::to_string(25 * rep) + "}",
                  [&] { return coset_of(624, 5, rep); });
    }
    rec.check("defining set n=624 q=5 tau=7", "{1,25,2,50,3,75,4,100,5,125,6,150,7,175}", [] {
        return set_string(defining_set(CosetSystem::build(624, 5), 7, false).elements());
    });
    rec.check("reduced max representative n1=48 tau=7", "7", [] {
        auto d = defining_set(CosetSystem::build(624, 5), 7, false);
        return std::to_string(reduce_mod(d, 48).max_representative());
    });
    rec.check("case q=5 s=2 n1=48", "3a0", [] {
        auto cases = classify_case(5, 2, 48);
        std::string out;
        for (const auto &c : cases) out += (out.empty() ? "" : ";") + case_name(c.id);
        return out;
    });
    rec.check("L closed form q=5 s=2 n1=48", "7",
              [] { return std::to_string(sharp_bound_closed_form(classify_case(5, 2, 48).at(0)).L); });
    rec.check("L brute force q=5 s=2 n1=48", "7", [] { return std::to_string(sharp_bound_bruteforce(5, 2, 48).L); });

    for (const auto &[tau, base, steps] : {std::tuple<std::size_t, std::string, unsigned>{7, "[[96,68,\\geq 8]]_5 rank=14 gram=zero", 1},
                                          {6, "[[96,72,\\geq 7]]_5 rank=12 gram=zero", 3}}) {
        PipelineRequest quinary;
        quinary.q = 5;
        quinary.s = 2;
        quinary.n1 = 48;
        quinary.lambda = 2;
        quinary.tau = tau;
        std::optional<QuantumParams> params;
        rec.check("code q=5 n=96 tau=" + std::to_string(tau), base, [&] {
            auto r = run_pipeline(quinary, registry);
            params = r.params;
            return code_summary(r);
        });
        const u64 k = tau == 7 ? 68 : 72;
        const u64 d = tau == 7 ? 8 : 7;
        for (unsigned t = 1; t <= steps; ++t) {
            rec.check("lengthened q=5 tau=" + std::to_string(tau) + " steps=" + std::to_string(t),
                      "[[" + std::to_string(96 + t) + "," + std::to_string(k) + ",\\geq " + std::to_string(d) + "]]_5",
                      [&] {
                          if (!params) fail(Errc::PreconditionViolated, "base code unavailable");
                          return param_string(lengthen(*params, t));
                      });
        }
    }

    // BCH example over GF(64): q = 8, N = 91.
    const std::vector<std::pair<u64, std::string>> octal_cosets = {
        {1, "{1,64}"}, {2, "{2,37}"}, {3, "{3,10}"}, {4, "{4,74}"}, {5, "{5,47}"},
        {6, "{6,20}"}, {7, "{7,84}"}, {8, "{8,57}"}, {9, "{9,30}"}};
    for (const auto &[rep, want] : octal_cosets) {
        rec.check("cosets n=91 q=8 rep=" + std::to_string(rep), want, [&] { return coset_of(91, 8, rep); });
    }
    rec.check("next representative n=91 q=8 tau=9", "11",
              [] { return std::to_string(next_representative(defining_set(CosetSystem::build(91, 8), 9, false))); });
    rec.check("case q=8 s=2 n1=91", "none", [] { return classify_case(8, 2, 91).empty() ? "none" : "some"; });
    PipelineRequest octal;
    octal.construction = Construction::Bch;
    octal.q = 8;
    octal.s = 2;
    octal.n1 = 91;
    octal.tau = 9;
    std::optional<QuantumParams> octal_params;
    rec.check("code q=8 n=91", "[[91,55,\\geq 11]]_8 rank=18 gram=zero", [&] {
        auto r = run_pipeline(octal, registry);
        octal_params = r.params;
        return code_summary(r);
    });
    rec.check("lengthened q=8 steps=1", "[[92,55,\\geq 11]]_8", [&] {
        if (!octal_params) fail(Errc::PreconditionViolated, "base code unavailable");
        return param_string(lengthen(*octal_params, 1));
    });

    return rec.claims;
}

}  // namespace hbch
