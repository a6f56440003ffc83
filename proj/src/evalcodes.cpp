#include "hbch/evalcodes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <thread>

#include "hbch/error.hpp"

namespace hbch {

PointSet unity_points(const FieldTower &tower, u64 n) {
    const Elem zeta = tower.root_of_unity(n);
    PointSet ps{tower, PointKind::Unity, n, 1, {}};
    ps.points.reserve(n);
    Elem x = tower.big().one();
    for (u64 i = 0; i < n; ++i) {
        ps.points.push_back(x);
        x = tower.big().mul(x, zeta);
    }
    return ps;
}

PointSet build_points(const FieldTower &tower, u64 n1, u64 lambda) {
    const u64 units = tower.unit_order();
    if (n1 == 0 || units % n1 != 0) {
        fail(Errc::NotADivisor, std::to_string(n1) + " does not divide " + std::to_string(units));
    }
    if (lambda < 1) fail(Errc::InvalidArgument, "lambda must be at least 1");
    if (lambda > units / n1) {
        fail(Errc::LambdaTooLarge, "lambda = " + std::to_string(lambda) + " exceeds (q^{2s}-1)/n1 = " +
                                       std::to_string(units / n1));
    }
    const FieldCtx &f = tower.big();
    const Elem zeta = tower.root_of_unity(n1);
    PointSet ps{tower, PointKind::Homothetic, n1, lambda, {}};
    ps.points.reserve(n1 * lambda);
    Elem shift = f.one();
    for (u64 t = 0; t < lambda; ++t) {
        Elem x = shift;
        for (u64 i = 0; i < n1; ++i) {
            ps.points.push_back(x);
            x = f.mul(x, zeta);
        }
        shift = f.mul(shift, tower.gamma());
    }
    return ps;
}

// ---------------------------------------------------------------------------

LinearCode::LinearCode(FieldPtr field, std::size_t length, Matrix rows, CodeMeta meta)
    : field_(std::move(field)), length_(length), gen_(std::move(rows)), meta_(std::move(meta)) {
    if (!field_) fail(Errc::InvalidArgument, "code without alphabet");
    if (gen_.rows() == 0) {
        gen_ = Matrix(0, length_);
    } else if (gen_.cols() != length_) {
        fail(Errc::InvalidArgument, "generator width " + std::to_string(gen_.cols()) +
                                        " differs from length " + std::to_string(length_));
    }
    rref(*field_, gen_);
}

LinearCode LinearCode::zero_code(FieldPtr field, std::size_t length) {
    return LinearCode(std::move(field), length, Matrix(0, length));
}

LinearCode LinearCode::full_space(FieldPtr field, std::size_t length) {
    Matrix id(length, length);
    for (std::size_t i = 0; i < length; ++i) id.at(i, i) = field->one();
    return LinearCode(std::move(field), length, std::move(id));
}

bool LinearCode::contains(std::span<const Elem> word) const {
    if (word.size() != length_) return false;
    Matrix m = gen_;
    m.append_row(word);
    return rank(*field_, std::move(m)) == dim();
}

bool LinearCode::same_code(const LinearCode &other) const {
    return field_->p() == other.field_->p() && field_->m() == other.field_->m() &&
           field_->modulus() == other.field_->modulus() && length_ == other.length_ && gen_ == other.gen_;
}

// ---------------------------------------------------------------------------

LinearCode evaluation_code(const PointSet &points, std::span<const u64> exponents) {
    const FieldCtx &f = points.tower.big();
    const u64 units = points.tower.unit_order();
    Matrix g(0, points.size());
    std::vector<Elem> row(points.size());
    for (u64 e : exponents) {
        const i64 ee = static_cast<i64>(e % units);
        for (std::size_t i = 0; i < points.size(); ++i) row[i] = f.pow(points.points[i], ee);
        g.append_row(row);
    }
    return LinearCode(points.tower.big_ptr(), points.size(), std::move(g));
}

LinearCode evaluation_code(const PointSet &points, const DefiningSet &delta) {
    LinearCode c = evaluation_code(points, std::span<const u64>(delta.elements()));
    return LinearCode(c.field_ptr(), c.length(), c.generator(),
                      CodeMeta{"evaluation", delta.representatives(), delta.includes_zero()});
}

namespace {

// Coordinates over the GF(q^2)-basis omega_a = rho^a (rho the big field's
// primitive root), through the trace-dual system M c = t.
class BasisCoordinates {
   public:
    explicit BasisCoordinates(const FieldTower &tower) : tower_(tower), s_(tower.s()) {
        const FieldCtx &big = tower.big();
        const FieldCtx &small = tower.small();
        for (std::uint32_t a = 0; a < s_; ++a) basis_.push_back(big.exp(a));

        // [M | I] -> [I | M^{-1}]
        Matrix aug(s_, 2 * s_);
        for (std::uint32_t a = 0; a < s_; ++a) {
            for (std::uint32_t b = 0; b < s_; ++b) {
                aug.at(a, b) = small_trace(big.mul(basis_[a], basis_[b]));
            }
            aug.at(a, s_ + a) = small.one();
        }
        const auto pivots = rref(small, aug);
        if (pivots.size() != s_ || pivots.back() != s_ - 1) {
            fail(Errc::InternalInvariant, "trace form is degenerate on the chosen basis");
        }
        inverse_ = Matrix(s_, s_);
        for (std::uint32_t a = 0; a < s_; ++a) {
            for (std::uint32_t b = 0; b < s_; ++b) inverse_.at(a, b) = aug.at(a, s_ + b);
        }
    }

    const std::vector<Elem> &basis() const {
        return basis_;
    }

    void coordinates(Elem h, std::vector<Elem> &out) const {
        const FieldCtx &big = tower_.big();
        const FieldCtx &small = tower_.small();
        traces_.resize(s_);
        for (std::uint32_t a = 0; a < s_; ++a) traces_[a] = small_trace(big.mul(basis_[a], h));
        out.assign(s_, small.zero());
        for (std::uint32_t a = 0; a < s_; ++a) {
            Elem acc = small.zero();
            for (std::uint32_t b = 0; b < s_; ++b) acc = small.add(acc, small.mul(inverse_.at(a, b), traces_[b]));
            out[a] = acc;
        }
    }

   private:
    Elem small_trace(Elem x) const {
        auto r = tower_.restrict_to_small(tower_.trace_to_small(x));
        if (!r) fail(Errc::InternalInvariant, "trace left the subfield");
        return *r;
    }

    const FieldTower &tower_;
    std::uint32_t s_;
    std::vector<Elem> basis_;
    Matrix inverse_;
    mutable std::vector<Elem> traces_;
};

}  // namespace

LinearCode subfield_subcode(const LinearCode &code, const FieldTower &tower) {
    const FieldCtx &big = tower.big();
    const FieldCtx &f = code.field();
    if (f.p() != big.p() || f.m() != big.m() || f.modulus() != big.modulus()) {
        fail(Errc::AlphabetMismatch, "code alphabet is not the tower's extension field");
    }
    const FieldCtx &small = tower.small();
    const std::size_t n = code.length();
    const std::size_t k = code.dim();
    const std::uint32_t s = tower.s();
    if (k == 0) return LinearCode::zero_code(tower.small_ptr(), n);

    BasisCoordinates coords(tower);
    const std::size_t span_rows = k * s;
    // constant[r][l]: omega_0 component; upper[l*(s-1) + b-1][r]: omega_b component, b >= 1
    Matrix constant(span_rows, n);
    Matrix upper(n * (s - 1), span_rows);
    std::vector<Elem> c;
    for (std::size_t i = 0; i < k; ++i) {
        const auto g = code.generator().row(i);
        for (std::uint32_t j = 0; j < s; ++j) {
            const std::size_t r = i * s + j;
            for (std::size_t l = 0; l < n; ++l) {
                coords.coordinates(big.mul(coords.basis()[j], g[l]), c);
                constant.at(r, l) = c[0];
                for (std::uint32_t b = 1; b < s; ++b) upper.at(l * (s - 1) + b - 1, r) = c[b];
            }
        }
    }
    const Matrix combos = right_kernel(small, upper);

    Matrix sub(combos.rows(), n);
    for (std::size_t v = 0; v < combos.rows(); ++v) {
        for (std::size_t r = 0; r < span_rows; ++r) {
            const Elem a = combos.at(v, r);
            if (a.is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) {
                sub.at(v, l) = small.add(sub.at(v, l), small.mul(a, constant.at(r, l)));
            }
        }
    }
    CodeMeta meta = code.meta();
    meta.construction = "subfield-subcode";
    return LinearCode(tower.small_ptr(), n, std::move(sub), std::move(meta));
}

LinearCode trace_code(const PointSet &points, const DefiningSet &delta) {
    const FieldTower &tower = points.tower;
    const FieldCtx &big = tower.big();
    const u64 units = tower.unit_order();
    const std::size_t n = points.size();

    std::vector<u64> exps;
    if (delta.includes_zero()) exps.push_back(0);
    for (u64 a : delta.representatives()) exps.push_back(a);

    Matrix g(0, n);
    std::vector<Elem> row(n);
    for (u64 e : exps) {
        std::vector<Elem> values(n);
        for (std::size_t l = 0; l < n; ++l) values[l] = big.pow(points.points[l], static_cast<i64>(e % units));
        for (std::uint32_t j = 0; j < tower.s(); ++j) {
            const Elem w = big.exp(j);
            for (std::size_t l = 0; l < n; ++l) {
                auto r = tower.restrict_to_small(tower.trace_to_small(big.mul(w, values[l])));
                if (!r) fail(Errc::InternalInvariant, "trace left the subfield");
                row[l] = *r;
            }
            g.append_row(row);
        }
    }
    return LinearCode(tower.small_ptr(), n, std::move(g),
                      CodeMeta{"trace", delta.representatives(), delta.includes_zero()});
}

LinearCode puncture(const LinearCode &code, std::size_t keep) {
    if (keep < 1 || keep > code.length()) {
        fail(Errc::BadRange, "cannot keep " + std::to_string(keep) + " of " + std::to_string(code.length()) +
                                 " coordinates");
    }
    return LinearCode(code.field_ptr(), keep, code.generator().left_columns(keep), code.meta());
}

LinearCode hermitian_dual(const LinearCode &code) {
    const FieldCtx &f = code.field();
    if (!f.has_square_order()) {
        fail(Errc::NonSquareAlphabet, "alphabet of order " + std::to_string(f.order()) + " is not a square");
    }
    Matrix conj = code.generator();
    for (std::size_t r = 0; r < conj.rows(); ++r) {
        for (auto &x : conj.row(r)) x = f.conj(x);
    }
    Matrix dual = right_kernel(f, conj);
    return LinearCode(code.field_ptr(), code.length(), std::move(dual), CodeMeta{"hermitian-dual", {}, false});
}

// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
    const FieldCtx &f;
    const Matrix &g;
    std::size_t n;
    std::size_t k;

    // Adds c * g[row] into acc.
    void axpy(std::vector<Elem> &acc, Elem c, std::size_t row) const {
        const auto r = g.row(row);
        for (std::size_t l = 0; l < n; ++l) {
            if (!r[l].is_zero()) acc[l] = f.add(acc[l], f.mul(c, r[l]));
        }
    }

    static std::size_t weight(const std::vector<Elem> &w) {
        return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return !x.is_zero(); }));
    }

    // Explores all words base + sum_{i >= pos} c_i g_i, scratch sized k + 1.
    void dfs(std::size_t pos, std::vector<std::vector<Elem>> &levels, std::size_t &best) const {
        if (pos == k) {
            best = std::min(best, weight(levels[pos]));
            return;
        }
        for (u64 raw = 0; raw < f.order(); ++raw) {
            levels[pos + 1] = levels[pos];
            if (raw != 0) axpy(levels[pos + 1], Elem{static_cast<std::uint32_t>(raw)}, pos);
            dfs(pos + 1, levels, best);
            if (best == 1) return;
        }
    }
};

}  // namespace

std::size_t min_distance_exhaustive(const LinearCode &code, const DistanceOptions &options) {
    const FieldCtx &f = code.field();
    const std::size_t k = code.dim();
    if (k == 0) fail(Errc::InvalidArgument, "the zero code has no nonzero codeword");
    const std::size_t cap =
        options.max_dim.value_or(static_cast<std::size_t>(30.0 / std::log2(static_cast<double>(f.order())) + 1e-9));
    if (k > cap) {
        fail(Errc::TooLarge, "dimension " + std::to_string(k) + " exceeds enumeration cap " + std::to_string(cap));
    }

    const std::size_t n = code.length();
    Enumerator en{f, code.generator(), n, k};

    // Words are normalized so the first nonzero message symbol is 1; each task
    // fixes the leading position t and, when present, the symbol at t + 1.
    struct Task {
        std::size_t lead;
        std::optional<u64> next;
    };
    std::vector<Task> tasks;
    for (std::size_t t = 0; t < k; ++t) {
        if (t + 1 == k) {
            tasks.push_back({t, std::nullopt});
        } else {
            for (u64 raw = 0; raw < f.order(); ++raw) tasks.push_back({t, raw});
        }
    }

    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> global_best{n + 1};
    auto worker = [&] {
        std::vector<std::vector<Elem>> levels(k + 1, std::vector<Elem>(n, f.zero()));
        std::size_t best = n + 1;
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size() || global_best.load() == 1) break;
            const Task &task = tasks[i];
            std::vector<Elem> &base = levels[task.lead + 1];
            std::fill(base.begin(), base.end(), f.zero());
            en.axpy(base, f.one(), task.lead);
            std::size_t start = task.lead + 1;
            if (task.next) {
                levels[start + 1] = base;
                if (*task.next != 0) en.axpy(levels[start + 1], Elem{static_cast<std::uint32_t>(*task.next)}, start);
                ++start;
            }
            en.dfs(start, levels, best);
            std::size_t cur = global_best.load();
            while (best < cur && !global_best.compare_exchange_weak(cur, best)) {
            }
        }
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    return global_best.load();
}

// ---------------------------------------------------------------------------

void write_code(std::ostream &out, const LinearCode &code) {
    out << code.field().order() << ' ' << code.length() << ' ' << code.dim() << '\n';
    for (std::size_t r = 0; r < code.dim(); ++r) {
        const auto row = code.generator().row(r);
        for (std::size_t l = 0; l < row.size(); ++l) {
            if (l) out << ' ';
            out << row[l].raw;
        }
        out << '\n';
    }
}

LinearCode read_code(std::istream &in, FieldRegistry &registry) {
    u64 order = 0, n = 0, k = 0;
    if (!(in >> order >> n >> k)) fail(Errc::ParseError, "missing code header");
    FieldPtr f = registry.field_of_order(order);
    Matrix g(k, n);
    for (u64 r = 0; r < k; ++r) {
        for (u64 l = 0; l < n; ++l) {
            u64 raw = 0;
            if (!(in >> raw)) fail(Errc::ParseError, "truncated generator row " + std::to_string(r));
            if (raw >= order) fail(Errc::ParseError, "element index " + std::to_string(raw) + " out of range");
            g.at(r, l) = Elem{static_cast<std::uint32_t>(raw)};
        }
    }
    return LinearCode(std::move(f), n, std::move(g));
}

}  // namespace hbch
