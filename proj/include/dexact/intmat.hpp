#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "dexact/errors.hpp"

namespace dexact {

/// Dense integer matrix with arbitrary-precision entries.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;

    mpz_class det() const; // via fraction-free expansion, small sizes only

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> entries_;
};

struct SnfResult {
    IntMat u, d, v; // u*a*v = d, u and v unimodular, d diagonal with divisibility chain
};

SnfResult smith_normal_form(const IntMat& a);

/// Z^n modulo the row span of a relation matrix, with a canonical coset map.
class K0Presentation {
public:
    K0Presentation() = default;
    K0Presentation(const IntMat& relations, std::size_t n_generators);

    std::size_t n_generators() const { return n_; }
    /// All n invariant factors d_1 | d_2 | ... (1s included, 0 = free).
    const std::vector<mpz_class>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    /// Nontrivial torsion factors (those > 1).
    std::vector<mpz_class> torsion() const;

    /// Unique coset representative of v, deterministic and order-independent.
    std::vector<mpz_class> canon(const std::vector<mpz_class>& v) const;

    bool same_coset(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const;

private:
    std::size_t n_ = 0;
    std::size_t free_rank_ = 0;
    std::vector<mpz_class> factors_;
    IntMat v_, v_inv_; // column change of basis from the SNF of the relations
};

K0Presentation quotient_group(const IntMat& relations, std::size_t n_generators);

} // namespace dexact
