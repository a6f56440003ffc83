#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hbch/gf.hpp"

namespace hbch {

/// Dense row-major matrix of field elements. Carries no field; the
/// algorithms below take the field explicitly.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return rows_ == 0;
    }

    Elem &at(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    Elem at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<Elem> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const Elem> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    /// Appends a row; the first row fixes the column count of an empty matrix.
    void append_row(std::span<const Elem> values);
    void truncate_rows(std::size_t rows);
    void swap_rows(std::size_t a, std::size_t b);
    Matrix transposed() const;
    /// Keeps columns [0, cols).
    Matrix left_columns(std::size_t cols) const;

    friend bool operator==(const Matrix &, const Matrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduced row echelon form in place (first-nonzero pivoting). Zero rows are
/// dropped. Returns the pivot columns.
std::vector<std::size_t> rref(const FieldCtx &field, Matrix &m);

std::size_t rank(const FieldCtx &field, Matrix m);

/// Basis, in reduced echelon form, of {x : m x^T = 0}.
Matrix right_kernel(const FieldCtx &field, const Matrix &m);

/// a * b^T computed over `field`.
Matrix multiply_transposed(const FieldCtx &field, const Matrix &a, const Matrix &b);

}  // namespace hbch
