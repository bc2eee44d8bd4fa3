#include "monadforge/poly_matrix.hpp"

#include <string>
#include <utility>

namespace monadforge {

namespace {

std::string shape(std::size_t r, std::size_t c)
{
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("matrix of shape " + shape(rows_, cols_) + " needs " + std::to_string(rows_ * cols_) +
                         " entries, got " + std::to_string(entries_.size()));
}

PolyMatrix PolyMatrix::identity(std::size_t size)
{
    PolyMatrix id(size, size);
    for (std::size_t i = 0; i < size; ++i)
        id.at(i, i) = Polynomial(Integer(1));
    return id;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& p : entries_)
        if (!p.is_zero())
            return false;
    return true;
}

PolyMatrix operator-(const PolyMatrix& a)
{
    PolyMatrix out = a;
    for (auto& p : out.entries_)
        p = -p;
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("cannot add " + shape(a.rows_, a.cols_) + " and " + shape(b.rows_, b.cols_));
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
        out.entries_[i] += b.entries_[i];
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    return a + (-b);
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows())
        throw ShapeError("incompatible shapes for product: " + shape(a.rows(), a.cols()) + " * " +
                         shape(b.rows(), b.cols()));
    PolyMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto& lhs = a.at(i, l);
            if (lhs.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(l, j).is_zero())
                    out.at(i, j) += lhs * b.at(l, j);
        }
    return out;
}

PolyMatrix hconcat(const std::vector<PolyMatrix>& blocks)
{
    if (blocks.empty())
        return {};
    std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw ShapeError("hconcat: row counts differ (" + std::to_string(rows) + " vs " +
                             std::to_string(b.rows()) + ")");
        cols += b.cols();
    }
    PolyMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, offset + j) = b.at(i, j);
        offset += b.cols();
    }
    return out;
}

PolyMatrix vconcat(const std::vector<PolyMatrix>& blocks)
{
    if (blocks.empty())
        return {};
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw ShapeError("vconcat: column counts differ (" + std::to_string(cols) + " vs " +
                             std::to_string(b.cols()) + ")");
        rows += b.rows();
    }
    PolyMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                out.at(offset + i, j) = b.at(i, j);
        offset += b.rows();
    }
    return out;
}

FieldMatrix evaluate_matrix(const PolyMatrix& a, const FieldPoint& point, const PrimeField& field)
{
    FieldMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a.at(i, j).evaluate(point, field);
    return out;
}

FieldMatrix field_matrix_mul(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& field)
{
    if (a.cols != b.rows)
        throw ShapeError("incompatible shapes for product: " + shape(a.rows, a.cols) + " * " +
                         shape(b.rows, b.cols));
    FieldMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l)
            for (std::size_t j = 0; j < b.cols; ++j)
                out(i, j) = field.add(out(i, j), field.mul(a(i, l), b(l, j)));
    return out;
}

std::size_t rank_over_field(FieldMatrix m, const PrimeField& field)
{
    for (auto& v : m.data)
        v %= field.characteristic();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m(pivot, j), m(rank, j));
        const std::uint64_t inv = field.inv(m(rank, col));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (m(i, col) == 0)
                continue;
            const std::uint64_t factor = field.mul(m(i, col), inv);
            for (std::size_t j = col; j < m.cols; ++j)
                m(i, j) = field.sub(m(i, j), field.mul(factor, m(rank, j)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace monadforge
