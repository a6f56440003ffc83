#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbch/cosets.hpp"
#include "hbch/evalcodes.hpp"
#include "hbch/hermitian.hpp"

namespace hbch {

enum class Construction { Homothetic, Bch };

std::string construction_name(Construction c);
std::optional<Construction> parse_construction(const std::string &name);

struct Provenance {
    Construction construction = Construction::Homothetic;
    u64 q = 0;
    std::uint32_t s = 0;
    u64 n1 = 0;
    u64 lambda = 1;
    std::vector<u64> cosets;  // selected nonzero representatives
    bool include_zero = false;
    std::size_t classical_dim = 0;

    friend bool operator==(const Provenance &, const Provenance &) = default;
};

/// [[n, k, >= d]]_q
struct QuantumParams {
    u64 q = 0;
    u64 n = 0;
    u64 k = 0;
    u64 d = 1;
    unsigned lengthened = 0;
    Provenance provenance;

    friend bool operator==(const QuantumParams &, const QuantumParams &) = default;
};

/// "[[186,126,\geq 9]]_2"
std::string param_string(const QuantumParams &p);

/// "2 186 126 9 construction=homothetic q=2 s=5 n1=93 lambda=2 cosets=[1,2,3,5,6,7] zero=false lengthened=0"
std::string record_line(const QuantumParams &p);
QuantumParams parse_record(const std::string &line);

/// [[n, n - 2 dim, >= d_bound]]_q; the code must be Hermitian self-orthogonal.
QuantumParams stabilizer_from_classical(const LinearCode &code, u64 d_bound, Provenance provenance = {});

/// [[n, k, d]] -> [[n + steps, k, >= d]].
QuantumParams lengthen(const QuantumParams &p, unsigned steps);

struct PipelineRequest {
    Construction construction = Construction::Homothetic;
    u64 q = 0;
    std::uint32_t s = 0;
    u64 n1 = 0;
    u64 lambda = 1;
    /// Either a prefix length tau or an explicit list of representatives.
    std::optional<std::size_t> tau;
    std::vector<u64> cosets;
    bool include_zero = false;
    u64 bound_budget = kDefaultBoundBudget;
};

struct PipelineReport {
    QuantumParams params;
    DefiningSet delta;    // exponents modulo the evaluation modulus
    DefiningSet reduced;  // delta modulo n1
    BoundReport bound;
    u64 max_reduced_rep = 0;
    std::size_t coset_size_sum = 0;
    i64 k_lower_bound = 0;  // n - 2 * coset_size_sum
    std::size_t rank = 0;
    GramCertificate gram;
    LinearCode code;
};

/// Precondition and bound checks, construction, Gram verification and parameter derivation.
PipelineReport run_pipeline(const PipelineRequest &req, FieldRegistry &registry = FieldRegistry::bundled());

enum class N1Mode { CaseForms, AllDivisors, Explicit };

struct ScanGrid {
    std::vector<u64> qs;
    std::vector<std::uint32_t> ss;
    N1Mode n1_mode = N1Mode::CaseForms;
    std::vector<u64> n1s;  // for Explicit
    u64 lambda_max = 1;
    std::size_t tau_max = 1;
    bool try_zero = false;
    std::vector<PipelineRequest> pinned;
    /// Largest number of pipeline runs; 0 runs nothing.
    u64 budget = 10000;
    unsigned jobs = 1;
};

/// Candidate requests implied by the grid (before the budget check).
std::vector<PipelineRequest> scan_requests(const ScanGrid &grid);

/// Runs every admissible request, drops the ones rejected by the bound or a
/// precondition, deduplicates on (q, n, k, d) and sorts by (q, n, -k, -d).
std::vector<QuantumParams> scan(const ScanGrid &grid, FieldRegistry &registry = FieldRegistry::bundled());

}  // namespace hbch
