#pragma once

#include "lnd/rational.hpp"

#include <cstddef>
#include <vector>

namespace lnd {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void append_row(const std::vector<Rational>& values);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    RationalMatrix rref;               // nonzero rows only, pivots equal 1
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form. Elimination runs fraction-free on primitive
/// integer rows (content divided out after each update); rationals only
/// appear when pivots are normalized at the end.
Echelon reduced_row_echelon(const RationalMatrix& m);

/// Rows form a basis of {v : m v = 0}, in reduced echelon form.
RationalMatrix nullspace(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// True when `v` lies in the row space of an RREF matrix.
bool in_row_space(const Echelon& e, const std::vector<Rational>& v);

}  // namespace lnd
