#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbch/cosets.hpp"
#include "hbch/gf.hpp"
#include "hbch/matrix.hpp"

namespace hbch {

enum class PointKind {
    Unity,       // U(N): the N-th roots of unity
    Homothetic,  // P(n1, lambda): gamma^t * U(n1), t < lambda
};

/// Ordered evaluation points in GF(q^{2s}). For Homothetic sets, block t
/// (coordinates t*n1 .. t*n1 + n1 - 1) is gamma^t * (1, zeta, ..., zeta^{n1-1}).
struct PointSet {
    FieldTower tower;
    PointKind kind = PointKind::Unity;
    u64 n1 = 0;      // N for Unity
    u64 lambda = 1;  // always 1 for Unity
    std::vector<Elem> points;

    std::size_t size() const {
        return points.size();
    }
};

PointSet unity_points(const FieldTower &tower, u64 n);

/// Requires n1 | q^{2s}-1 and 1 <= lambda <= (q^{2s}-1)/n1.
PointSet build_points(const FieldTower &tower, u64 n1, u64 lambda);

/// Free-form provenance carried along with a code.
struct CodeMeta {
    std::string construction;
    std::vector<u64> representatives;
    bool includes_zero = false;
};

/// Linear code given by a generator matrix kept in reduced row echelon form,
/// so two codes are equal iff their generators are equal.
class LinearCode {
   public:
    LinearCode(FieldPtr field, std::size_t length, Matrix rows, CodeMeta meta = {});

    static LinearCode zero_code(FieldPtr field, std::size_t length);
    static LinearCode full_space(FieldPtr field, std::size_t length);

    const FieldCtx &field() const {
        return *field_;
    }
    const FieldPtr &field_ptr() const {
        return field_;
    }
    std::size_t length() const {
        return length_;
    }
    std::size_t dim() const {
        return gen_.rows();
    }
    const Matrix &generator() const {
        return gen_;
    }
    const CodeMeta &meta() const {
        return meta_;
    }

    bool contains(std::span<const Elem> word) const;
    /// Same alphabet, length and row space.
    bool same_code(const LinearCode &other) const;

   private:
    FieldPtr field_;
    std::size_t length_;
    Matrix gen_;
    CodeMeta meta_;
};

/// Rows ev(X^e) for e in `exponents` (taken modulo q^{2s}-1).
LinearCode evaluation_code(const PointSet &points, std::span<const u64> exponents);
LinearCode evaluation_code(const PointSet &points, const DefiningSet &delta);

/// code ∩ GF(q^2)^n by scalar restriction: expand over a GF(q^2)-basis of
/// GF(q^{2s}) and solve for the combinations with vanishing non-constant parts.
LinearCode subfield_subcode(const LinearCode &code, const FieldTower &tower);

/// Span of ev(Tr(gamma^j X^e)) for representatives e of delta and 0 <= j < s.
/// Equals the subfield subcode for coset-closed delta.
LinearCode trace_code(const PointSet &points, const DefiningSet &delta);

/// Projection onto the first `keep` coordinates.
LinearCode puncture(const LinearCode &code, std::size_t keep);

/// {x : sum x_i y_i^q = 0 for all y in code}; alphabet must have square order.
LinearCode hermitian_dual(const LinearCode &code);

struct DistanceOptions {
    /// Largest admissible dimension; by default the one keeping |F|^dim <= 2^30.
    std::optional<std::size_t> max_dim;
    unsigned jobs = 1;
};

/// Minimum Hamming weight over all nonzero codewords, by enumeration.
std::size_t min_distance_exhaustive(const LinearCode &code, const DistanceOptions &options = {});

/// Line-oriented format: "q2 n k" then k rows of n element indices.
void write_code(std::ostream &out, const LinearCode &code);
LinearCode read_code(std::istream &in, FieldRegistry &registry = FieldRegistry::bundled());

}  // namespace hbch
