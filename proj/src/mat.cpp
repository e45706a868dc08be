#include "dexact/mat.hpp"

#include <sstream>

namespace dexact {

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<mpq_class>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

bool Mat::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    if (field_ != o.field_) throw FieldMismatch("matrix product field mismatch");
    Mat m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += aik * o.at(k, j);
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Mat m = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] += o.entries_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat m = *this;
    for (auto& e : m.entries_) e *= c;
    return m;
}

Mat Mat::transpose() const {
    Mat m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::column(std::size_t j) const { return columns({j}); }

Mat Mat::columns(const std::vector<std::size_t>& js) const {
    Mat m(field_, rows_, js.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < js.size(); ++k) m.at(i, k) = at(i, js[k]);
    return m;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw ShapeError("hcat row mismatch");
    Mat m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw ShapeError("vcat column mismatch");
    Mat m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Mat Mat::diag_blocks(Field f, const std::vector<Mat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Mat m(f, r, c);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

RrefResult rref(const Mat& a) {
    RrefResult res{a, {}, 0};
    Mat& m = res.r;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = Scalar::one(m.field()) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

Mat kernel_basis(const Mat& a) {
    RrefResult r = rref(a);
    std::vector<std::size_t> free_cols;
    std::size_t p = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (p < r.pivots.size() && r.pivots[p] == j)
            ++p;
        else
            free_cols.push_back(j);
    }
    Mat k(a.field(), a.cols(), free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        std::size_t fc = free_cols[idx];
        k.at(fc, idx) = Scalar::one(a.field());
        for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
            k.at(r.pivots[pi], idx) = -r.r.at(pi, fc);
    }
    return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: rhs row count mismatch");
    Mat aug = Mat::hcat(a, b);
    RrefResult r = rref(aug);
    // inconsistent if a pivot falls in the rhs block
    for (std::size_t pc : r.pivots)
        if (pc >= a.cols()) return std::nullopt;
    Mat x(a.field(), a.cols(), b.cols());
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(r.pivots[pi], j) = r.r.at(pi, a.cols() + j);
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve(a, Mat::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

Mat column_space_basis(const Mat& a) {
    RrefResult r = rref(a);
    return a.columns(r.pivots);
}

} // namespace dexact
