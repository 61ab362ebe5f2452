#include "gcoalg/matrix.hpp"

#include <sstream>

namespace gcoalg {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ShapeMismatch("matrix entry count " + std::to_string(entries_.size()) +
                            " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    for (const auto& e : entries_)
        if (e.field() != field_)
            throw FieldMismatch("matrix over " + field_.name() + " given a " + e.field().name() +
                                " entry");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
}

Matrix Matrix::row_of_ints(const Field& f, const std::vector<long>& values) {
    return of_ints(f, 1, values.size(), values);
}

Matrix Matrix::of_ints(const Field& f, std::size_t rows, std::size_t cols,
                       const std::vector<long>& values) {
    std::vector<Scalar> entries;
    entries.reserve(values.size());
    for (long v : values) entries.push_back(Scalar::of_int(f, v));
    return Matrix(f, rows, cols, std::move(entries));
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
    return entries_[i * cols_ + j];
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
    return entries_[i * cols_ + j];
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

void Matrix::check_same_field(const Matrix& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("cannot combine matrices over " + field_.name() + " and " +
                            o.field_.name());
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    if (cols_ != o.rows_)
        throw ShapeMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& e : r.entries_) e *= s;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::column(std::size_t j) const { return columns({j}); }

Matrix Matrix::columns(const std::vector<std::size_t>& js) const {
    Matrix r(field_, rows_, js.size());
    for (std::size_t k = 0; k < js.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, k) = at(i, js[k]);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream out;
    out << rows_ << "x" << cols_ << " over " << field_.name();
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "\n  [";
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
        out << "]";
    }
    return out.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw FieldMismatch("kronecker over " + a.field().name() + " and " + b.field().name());
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Scalar& s = a.at(ia, ja);
            if (s.is_zero()) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    r.at(ia * b.rows() + ib, ja * b.cols() + jb) = s * b.at(ib, jb);
        }
    return r;
}

Matrix tensor_swap(const Field& f, std::size_t m, std::size_t n) {
    Matrix r(f, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(j * m + i, i * n + j) = Scalar::one(f);
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

Rref rref(const Matrix& m) {
    Rref out{m, {}};
    Matrix& a = out.mat;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(pivot, j));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar factor = a.at(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) -= factor * a.at(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix kernel_basis(const Matrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.field(), m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        k.at(free_cols[j], j) = Scalar::one(m.field());
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            k.at(r.pivot_cols[p], j) = -r.mat.at(p, free_cols[j]);
    }
    return k;
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_right row mismatch");
    if (a.field() != b.field()) throw FieldMismatch("solve_right field mismatch");
    Rref r = rref(hstack(a, b));
    for (std::size_t c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt;  // inconsistent system
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(r.pivot_cols[p], j) = r.mat.at(p, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    auto x = solve_right(m, Matrix::identity(m.field(), m.rows()));
    if (!x) return std::nullopt;
    return x;
}

Matrix column_space_basis(const Matrix& m) { return m.columns(rref(m).pivot_cols); }

}  // namespace gcoalg
