#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "monadforge/polynomial.hpp"
#include "monadforge/prime_field.hpp"

namespace monadforge {

/// Dense row-major matrix of polynomials. 0x0 (and other empty shapes) are legal.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);
    /// Throws ShapeError unless entries.size() == rows * cols.
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    static PolyMatrix identity(std::size_t size);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }

    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;

    friend PolyMatrix operator-(const PolyMatrix& a);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hconcat(const std::vector<PolyMatrix>& blocks);
PolyMatrix vconcat(const std::vector<PolyMatrix>& blocks);

/// Dense matrix over a prime field.
struct FieldMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
};

using FieldPoint = std::map<Variable, std::uint64_t>;

FieldMatrix evaluate_matrix(const PolyMatrix& a, const FieldPoint& point, const PrimeField& field);
FieldMatrix field_matrix_mul(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& field);

/// Rank by Gaussian elimination over the field.
std::size_t rank_over_field(FieldMatrix m, const PrimeField& field);

}  // namespace monadforge
