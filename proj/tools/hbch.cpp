// Command-line front end: cosets, bounds, code construction, the bundled
// reproduction harness and grid scans.

#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hbch/cosets.hpp"
#include "hbch/error.hpp"
#include "hbch/harness.hpp"
#include "hbch/hermitian.hpp"
#include "hbch/json_io.hpp"
#include "hbch/quantum.hpp"

namespace {

using namespace hbch;

enum class Format { Text, Csv, Json };

struct Globals {
    std::string format = "text";
    std::string conway;

    Format fmt() const {
        if (format == "csv") return Format::Csv;
        if (format == "json") return Format::Json;
        return Format::Text;
    }
};

std::unique_ptr<FieldRegistry> make_registry(const Globals &g) {
    if (g.conway.empty()) return std::make_unique<FieldRegistry>(ConwayTable::bundled());
    return std::make_unique<FieldRegistry>(ConwayTable::load(g.conway));
}

std::string join(const std::vector<u64> &v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return out;
}

std::string csv_row(const QuantumParams &p) {
    const Provenance &v = p.provenance;
    return std::to_string(p.q) + ',' + std::to_string(p.n) + ',' + std::to_string(p.k) + ',' + std::to_string(p.d) +
           ',' + construction_name(v.construction) + ',' + std::to_string(v.s) + ',' + std::to_string(v.n1) + ',' +
           std::to_string(v.lambda) + ",\"" + join(v.cosets, ' ') + "\"," + (v.include_zero ? "true" : "false") +
           ',' + std::to_string(p.lengthened);
}

constexpr const char *kCsvHeader = "q,n,k,d_designed,construction,s,n1,lambda,cosets,zero,lengthened";

// ---------------------------------------------------------------------------

struct CosetsArgs {
    u64 n = 0;
    u64 q = 0;
};

int run_cosets(const Globals &g, const CosetsArgs &a) {
    auto sys = CosetSystem::build(a.n, a.q);
    switch (g.fmt()) {
        case Format::Json:
            std::cout << cosets_to_json(*sys).dump(2) << '\n';
            break;
        case Format::Csv:
            std::cout << "index,representative,size,elements\n";
            for (std::size_t i = 0; i < sys->count(); ++i) {
                auto c = sys->coset(i);
                std::cout << i << ',' << sys->representatives()[i] << ',' << c.size() << ",\""
                          << join(std::vector<u64>(c.begin(), c.end()), ' ') << "\"\n";
            }
            break;
        case Format::Text:
            std::cout << "n=" << a.n << " q=" << a.q << " multiplier=" << sys->multiplier()
                      << " cosets=" << sys->count() << '\n';
            for (std::size_t i = 0; i < sys->count(); ++i) {
                auto c = sys->coset(i);
                std::cout << "Lambda_" << sys->representatives()[i] << " = {"
                          << join(std::vector<u64>(c.begin(), c.end()), ',') << "}\n";
            }
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct BoundArgs {
    u64 q = 0;
    std::uint32_t s = 0;
    u64 n1 = 0;
    u64 budget = kDefaultBoundBudget;
};

int run_bound(const Globals &g, const BoundArgs &a) {
    const BoundReport r = resolve_bound(a.q, a.s, a.n1, a.budget);
    const auto rows = bound_rows(r);
    switch (g.fmt()) {
        case Format::Json:
            std::cout << json(r).dump(2) << '\n';
            break;
        case Format::Csv:
            std::cout << "q,s,n1,case,L_closed,L_brute,aly_bound,witness_x,witness_y,witness_k\n";
            for (auto row : rows) {
                for (auto &ch : row) {
                    if (ch == ' ') ch = ',';
                }
                std::cout << row << '\n';
            }
            break;
        case Format::Text:
            std::cout << "q s n1 case L_closed L_brute aly_bound witness_x witness_y witness_k\n";
            for (const auto &row : rows) std::cout << row << '\n';
            std::cout << "L=" << r.L << " source=" << (r.source == BoundReport::Source::BruteForce ? "brute_force" : "closed_form");
            if (!r.closed_forms_agree) std::cout << " closed_form_disagrees";
            if (r.unvalidated) std::cout << " unvalidated(excluded case)";
            std::cout << '\n';
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    u64 q = 0;
    std::uint32_t s = 0;
    u64 n1 = 0;
    u64 lambda = 1;
    std::size_t tau = 0;
    std::vector<u64> cosets;
    bool zero = false;
    unsigned lengthen = 0;
    bool dump = false;
    u64 budget = kDefaultBoundBudget;
};

int run_construct(const Globals &g, const ConstructArgs &a) {
    auto registry = make_registry(g);
    PipelineRequest req;
    req.construction = a.lambda == 1 ? Construction::Bch : Construction::Homothetic;
    req.q = a.q;
    req.s = a.s;
    req.n1 = a.n1;
    req.lambda = a.lambda;
    if (a.tau) req.tau = a.tau;
    req.cosets = a.cosets;
    req.include_zero = a.zero;
    req.bound_budget = a.budget;
    const PipelineReport r = run_pipeline(req, *registry);

    std::vector<QuantumParams> longer;
    for (unsigned t = 1; t <= a.lengthen; ++t) longer.push_back(lengthen(r.params, t));

    switch (g.fmt()) {
        case Format::Json: {
            json j{{"params", r.params},
                   {"rank", r.rank},
                   {"coset_size_sum", r.coset_size_sum},
                   {"k_lower_bound", r.k_lower_bound},
                   {"max_reduced_representative", r.max_reduced_rep},
                   {"bound", r.bound},
                   {"gram_zero", r.gram.self_orthogonal},
                   {"lengthened", longer}};
            if (a.dump) {
                std::ostringstream gen;
                write_code(gen, r.code);
                j["generator"] = gen.str();
            }
            std::cout << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            std::cout << kCsvHeader << '\n' << csv_row(r.params) << '\n';
            for (const auto &p : longer) std::cout << csv_row(p) << '\n';
            if (a.dump) write_code(std::cout, r.code);
            break;
        case Format::Text:
            std::cout << param_string(r.params) << '\n';
            std::cout << "record: " << record_line(r.params) << '\n';
            std::cout << "classical: n=" << r.code.length() << " rank=" << r.rank
                      << " coset_size_sum=" << r.coset_size_sum << " k_lower_bound=" << r.k_lower_bound
                      << " a_max=" << r.max_reduced_rep << " L=" << r.bound.L
                      << " gram=" << (r.gram.self_orthogonal ? "zero" : "nonzero") << '\n';
            for (const auto &p : longer) std::cout << param_string(p) << '\n';
            if (a.dump) write_code(std::cout, r.code);
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------

int run_examples(const Globals &g, bool as_json) {
    auto registry = make_registry(g);
    const auto claims = run_reproduction(*registry);
    bool ok = true;
    for (const auto &c : claims) ok = ok && c.pass;
    if (as_json || g.fmt() == Format::Json) {
        json list = json::array();
        for (const auto &c : claims) {
            list.push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        }
        std::cout << json{{"all_pass", ok}, {"claims", list}}.dump(2) << '\n';
    } else if (g.fmt() == Format::Csv) {
        std::cout << "verdict,id,expected,actual\n";
        for (const auto &c : claims) {
            std::cout << (c.pass ? "PASS" : "FAIL") << ",\"" << c.id << "\",\"" << c.expected << "\",\"" << c.actual
                      << "\"\n";
        }
    } else {
        for (const auto &c : claims) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.actual;
            if (!c.pass) std::cout << " (expected " << c.expected << ")";
            std::cout << '\n';
        }
        std::size_t passed = 0;
        for (const auto &c : claims) passed += c.pass;
        std::cout << passed << "/" << claims.size() << " claims reproduced\n";
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    std::vector<u64> qs;
    std::vector<std::uint32_t> ss;
    std::string n1_mode = "case";
    std::vector<u64> n1s;
    u64 lambda_max = 1;
    std::size_t tau_max = 1;
    bool zero = false;
    bool pinned = false;
    u64 budget = 10000;
    unsigned jobs = 1;
};

std::vector<PipelineRequest> pinned_requests() {
    PipelineRequest a;
    a.q = 2;
    a.s = 5;
    a.n1 = 93;
    a.lambda = 2;
    a.cosets = {1, 2, 3, 5, 6, 7};
    PipelineRequest b;
    b.q = 5;
    b.s = 2;
    b.n1 = 48;
    b.lambda = 2;
    b.tau = 7;
    PipelineRequest c = b;
    c.tau = 6;
    PipelineRequest d;
    d.construction = Construction::Bch;
    d.q = 8;
    d.s = 2;
    d.n1 = 91;
    d.tau = 9;
    return {a, b, c, d};
}

int run_scan(const Globals &g, const ScanArgs &a) {
    auto registry = make_registry(g);
    ScanGrid grid;
    grid.qs = a.qs;
    grid.ss = a.ss;
    grid.n1_mode = a.n1_mode == "all" ? N1Mode::AllDivisors : a.n1_mode == "explicit" ? N1Mode::Explicit : N1Mode::CaseForms;
    if (grid.n1_mode == N1Mode::Explicit && a.n1s.empty()) fail(Errc::InvalidArgument, "--n1-mode explicit needs --n1");
    grid.n1s = a.n1s;
    grid.lambda_max = a.lambda_max;
    grid.tau_max = a.tau_max;
    grid.try_zero = a.zero;
    if (a.pinned) grid.pinned = pinned_requests();
    grid.budget = a.budget;
    grid.jobs = a.jobs;
    const auto results = scan(grid, *registry);

    switch (g.fmt()) {
        case Format::Json:
            std::cout << json(results).dump(2) << '\n';
            break;
        case Format::Csv:
            std::cout << kCsvHeader << '\n';
            for (const auto &p : results) std::cout << csv_row(p) << '\n';
            break;
        case Format::Text:
            for (const auto &p : results) std::cout << record_line(p) << '\n';
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Homothetic-BCH and BCH quantum stabilizer codes over GF(q^2)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--conway", g.conway, "Conway polynomial table replacing the bundled one")
        ->check(CLI::ExistingFile);

    CosetsArgs ca;
    auto *cosets = app.add_subcommand("cosets", "Cyclotomic cosets of Z/NZ with respect to q^2");
    cosets->add_option("--n", ca.n, "Modulus N")->required();
    cosets->add_option("--q", ca.q, "q (cosets are taken w.r.t. q^2)")->required();

    BoundArgs ba;
    auto *bound = app.add_subcommand("bound", "Self-orthogonality bound L for BCH codes of length n1");
    bound->add_option("--q", ba.q)->required();
    bound->add_option("--s", ba.s)->required();
    bound->add_option("--n1", ba.n1)->required();
    bound->add_option("--budget", ba.budget, "Largest n1 for the exhaustive bound")->capture_default_str();

    ConstructArgs ka;
    auto *construct = app.add_subcommand("construct", "Build a code and derive its quantum parameters");
    construct->add_option("--q", ka.q)->required();
    construct->add_option("--s", ka.s)->required();
    construct->add_option("--n1", ka.n1)->required();
    construct->add_option("--lambda", ka.lambda, "Homothety count; 1 builds the plain BCH code")
        ->capture_default_str();
    auto *tau_opt = construct->add_option("--tau", ka.tau, "Use the first tau nonzero cosets");
    auto *cosets_opt =
        construct->add_option("--cosets", ka.cosets, "Coset representatives, e.g. 1,2,3,5,6,7")->delimiter(',');
    tau_opt->excludes(cosets_opt);
    construct->add_flag("--zero", ka.zero, "Include the zero coset");
    construct->add_option("--lengthen", ka.lengthen, "Append this many lengthened codes");
    construct->add_flag("--dump-generator", ka.dump, "Print the generator matrix");
    construct->add_option("--budget", ka.budget, "Largest n1 for the exhaustive bound")->capture_default_str();

    bool ex_json = false;
    auto *examples = app.add_subcommand("examples", "Recompute the worked examples and report PASS/FAIL");
    examples->add_flag("--json", ex_json, "Machine-readable verdicts");

    ScanArgs sa;
    auto *scan_cmd = app.add_subcommand("scan", "Run the construction over a parameter grid");
    scan_cmd->add_option("--q", sa.qs, "q values")->delimiter(',');
    scan_cmd->add_option("--s", sa.ss, "s values")->delimiter(',');
    scan_cmd->add_option("--n1-mode", sa.n1_mode, "Lengths: case forms, all divisors or the --n1 list")
        ->check(CLI::IsMember({"case", "all", "explicit"}))
        ->capture_default_str();
    scan_cmd->add_option("--n1", sa.n1s, "Explicit lengths")->delimiter(',');
    scan_cmd->add_option("--lambda-max", sa.lambda_max)->capture_default_str();
    scan_cmd->add_option("--tau-max", sa.tau_max)->capture_default_str();
    scan_cmd->add_flag("--zero", sa.zero, "Also try the zero coset when p | lambda");
    scan_cmd->add_flag("--pinned", sa.pinned, "Add the worked-example configurations");
    scan_cmd->add_option("--budget", sa.budget, "Largest number of pipeline runs (0 runs nothing)")
        ->capture_default_str();
    scan_cmd->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cosets) return run_cosets(g, ca);
        if (*bound) return run_bound(g, ba);
        if (*construct) {
            if (!*tau_opt && !*cosets_opt) fail(Errc::InvalidArgument, "construct needs --tau or --cosets");
            return run_construct(g, ka);
        }
        if (*examples) return run_examples(g, ex_json);
        if (*scan_cmd) return run_scan(g, sa);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_internal(e.code()) ? 1 : 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
