#include "hbch/matrix.hpp"

#include <algorithm>

#include "hbch/error.hpp"

namespace hbch {

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) fail(Errc::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::truncate_rows(std::size_t rows) {
    if (rows >= rows_) return;
    rows_ = rows;
    data_.resize(rows_ * cols_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

Matrix Matrix::left_columns(std::size_t cols) const {
    if (cols > cols_) fail(Errc::BadRange, "column range exceeds matrix width");
    Matrix out(rows_, cols);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy_n(row(r).begin(), cols, out.row(r).begin());
    }
    return out;
}

std::vector<std::size_t> rref(const FieldCtx &field, Matrix &m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot_row = lead;
        while (pivot_row < m.rows() && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        m.swap_rows(lead, pivot_row);

        auto prow = m.row(lead);
        const Elem scale = field.inv(prow[col]);
        for (std::size_t c = col; c < m.cols(); ++c) prow[c] = field.mul(prow[c], scale);

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            auto row = m.row(r);
            const Elem f = row[col];
            if (f.is_zero()) continue;
            const Elem nf = field.neg(f);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!prow[c].is_zero()) row[c] = field.add(row[c], field.mul(nf, prow[c]));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    m.truncate_rows(lead);
    return pivots;
}

std::size_t rank(const FieldCtx &field, Matrix m) {
    return rref(field, m).size();
}

Matrix right_kernel(const FieldCtx &field, const Matrix &m) {
    const std::size_t n = m.cols();
    Matrix reduced = m;
    const auto pivots = rref(field, reduced);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;

    Matrix kernel(0, n);
    std::vector<Elem> v(n);
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::fill(v.begin(), v.end(), field.zero());
        v[free_col] = field.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = field.neg(reduced.at(i, free_col));
        }
        kernel.append_row(v);
    }
    if (kernel.rows() == 0) return Matrix(0, n);
    rref(field, kernel);
    return kernel;
}

Matrix multiply_transposed(const FieldCtx &field, const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols()) fail(Errc::InvalidArgument, "inner dimension mismatch");
    Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            Elem acc = field.zero();
            for (std::size_t c = 0; c < a.cols(); ++c) acc = field.add(acc, field.mul(a.at(i, c), b.at(j, c)));
            out.at(i, j) = acc;
        }
    }
    return out;
}

}  // namespace hbch
