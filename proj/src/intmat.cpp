#include "dexact/intmat.hpp"

#include <algorithm>

namespace dexact {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw ShapeError("integer matrix product shape mismatch");
    IntMat m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

mpz_class IntMat::det() const {
    if (rows_ != cols_) throw ShapeError("det of non-square matrix");
    IntMat a = *this;
    std::size_t n = rows_;
    mpz_class sign = 1, prev = 1;
    // Bareiss fraction-free elimination
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a.at(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return n == 0 ? mpz_class(1) : sign * a.at(n - 1, n - 1);
}

namespace {

// Elementary-operation SNF with pivot selection by minimal absolute value.
struct SnfWorker {
    IntMat a, u, v, vinv;

    explicit SnfWorker(const IntMat& m)
        : a(m),
          u(IntMat::identity(m.rows())),
          v(IntMat::identity(m.cols())),
          vinv(IntMat::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void add_row(std::size_t i, std::size_t j, const mpz_class& c) { // row_i += c*row_j
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) += c * a.at(j, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
        for (std::size_t k = 0; k < vinv.cols(); ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
    }
    void add_col(std::size_t i, std::size_t j, const mpz_class& c) { // col_i += c*col_j
        for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) += c * a.at(k, j);
        for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) += c * v.at(k, j);
        for (std::size_t k = 0; k < vinv.cols(); ++k) vinv.at(j, k) -= c * vinv.at(i, k);
    }

    void run() {
        std::size_t n = std::min(a.rows(), a.cols());
        for (std::size_t t = 0; t < n; ++t) reduce_at(t);
        fix_divisibility(n);
    }

    void reduce_at(std::size_t t) {
        for (;;) {
            // pivot: minimal absolute value among nonzero entries of the tail block
            std::size_t pi = t, pj = t;
            mpz_class best = 0;
            for (std::size_t i = t; i < a.rows(); ++i)
                for (std::size_t j = t; j < a.cols(); ++j) {
                    if (a.at(i, j) == 0) continue;
                    mpz_class ab = abs(a.at(i, j));
                    if (best == 0 || ab < best) {
                        best = ab;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) return; // tail block is zero
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            if (a.at(t, t) < 0) negate_row(t);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // row and column are clear; ensure pivot divides the rest of the block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < a.cols() && divides_all; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) return;
        }
    }

    void fix_divisibility(std::size_t n) {
        // pass until d_i | d_{i+1} throughout (reduce_at already makes each
        // pivot divide its tail block, so this is at most a cleanup)
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (a.at(i, i) != 0 && a.at(i + 1, i + 1) % a.at(i, i) == 0) continue;
            if (a.at(i, i) == 0 && a.at(i + 1, i + 1) == 0) continue;
            add_col(i, i + 1, 1);
            reduce_at(i);
            i = static_cast<std::size_t>(-1); // restart
        }
    }
};

} // namespace

SnfResult smith_normal_form(const IntMat& a) {
    SnfWorker w(a);
    w.run();
    return SnfResult{w.u, w.a, w.v};
}

K0Presentation::K0Presentation(const IntMat& relations, std::size_t n_generators) : n_(n_generators) {
    if (relations.rows() > 0 && relations.cols() != n_generators)
        throw ShapeError("relation matrix has wrong number of columns");
    IntMat rel = relations;
    if (rel.rows() == 0) rel = IntMat(0, n_generators);
    SnfWorker w(rel);
    w.run();
    v_ = w.v;
    v_inv_ = w.vinv;
    factors_.assign(n_, mpz_class(0));
    std::size_t n = std::min(rel.rows(), rel.cols());
    for (std::size_t i = 0; i < n; ++i) factors_[i] = w.a.at(i, i);
    free_rank_ = 0;
    for (const auto& f : factors_)
        if (f == 0) ++free_rank_;
}

std::vector<mpz_class> K0Presentation::torsion() const {
    std::vector<mpz_class> t;
    for (const auto& f : factors_)
        if (f > 1) t.push_back(f);
    return t;
}

std::vector<mpz_class> K0Presentation::canon(const std::vector<mpz_class>& vec) const {
    if (vec.size() != n_) throw ShapeError("canon: wrong vector length");
    // coordinates in the SNF basis: w = v * V (row vector convention)
    std::vector<mpz_class> w(n_, 0);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) w[j] += vec[i] * v_.at(i, j);
    // reduce modulo invariant factors into [0, d_i)
    for (std::size_t j = 0; j < n_; ++j)
        if (factors_[j] != 0) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), w[j].get_mpz_t(), factors_[j].get_mpz_t());
            w[j] = r;
        }
    // transform back
    std::vector<mpz_class> out(n_, 0);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) out[j] += w[i] * v_inv_.at(i, j);
    return out;
}

bool K0Presentation::same_coset(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const {
    return canon(a) == canon(b);
}

K0Presentation quotient_group(const IntMat& relations, std::size_t n_generators) {
    return K0Presentation(relations, n_generators);
}

} // namespace dexact
