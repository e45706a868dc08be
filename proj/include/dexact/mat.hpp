#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dexact/scalar.hpp"

namespace dexact {

/// Dense matrix over a single field, row-major.
class Mat {
public:
    Mat() = default;
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    static Mat from_rows(Field f, const std::vector<std::vector<mpq_class>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& c) const;

    Mat transpose() const;
    Mat column(std::size_t j) const;
    Mat columns(const std::vector<std::size_t>& js) const;

    /// [A | B] side by side.
    static Mat hcat(const Mat& a, const Mat& b);
    /// A stacked on top of B.
    static Mat vcat(const Mat& a, const Mat& b);
    /// Block diagonal.
    static Mat diag_blocks(Field f, const std::vector<Mat>& blocks);

    std::string str() const;

private:
    Field field_ = Field::rational();
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Mat r;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const Mat& a);

std::size_t rank(const Mat& a);

/// Columns form a basis of the null space of a.
Mat kernel_basis(const Mat& a);

/// x with a*x = b (column vectors), or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

/// Basis of the column span as a matrix whose columns are independent
/// columns of a (in order).
Mat column_space_basis(const Mat& a);

} // namespace dexact
