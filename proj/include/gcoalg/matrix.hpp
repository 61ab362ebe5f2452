#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcoalg/field.hpp"

namespace gcoalg {

/// Dense matrix over an exact field, row-major. Zero-sized dimensions are
/// legal values throughout (zero-dimensional components are first class).
///
/// Every structure map in the library is a matrix acting on coordinate
/// columns, with the tensor basis of V (x) W ordered (i, j) -> i*dim(W) + j.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);
    /// Row vector from integer literals; convenient in tests and fixtures.
    static Matrix row_of_ints(const Field& f, const std::vector<long>& values);
    static Matrix of_ints(const Field& f, std::size_t rows, std::size_t cols,
                          const std::vector<long>& values);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    Scalar& at(std::size_t i, std::size_t j);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;

    Matrix transposed() const;
    Matrix column(std::size_t j) const;
    /// Columns selected by index, in the given order.
    Matrix columns(const std::vector<std::size_t>& js) const;

    std::string str() const;  // multi-line, for diagnostics

  private:
    void check_same_field(const Matrix& o) const;

    Field field_ = Field::rationals();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Kronecker product consistent with the (i, j) -> i*dim(W) + j basis order:
/// (A (x) B) acts on V (x) W coordinates when A acts on V and B acts on W.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// The flip V (x) W -> W (x) V as a permutation matrix (dims m = dim V,
/// n = dim W).
Matrix tensor_swap(const Field& f, std::size_t m, std::size_t n);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;  // pivot_cols[r] = column of row r's pivot
};

/// Reduced row-echelon form; deterministic (first nonzero pivot, no swaps
/// beyond the required row exchange).
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the null space as the columns of a (cols x k) matrix,
/// k = cols - rank. Columns are in reduced column-echelon form: each free
/// coordinate carries a single 1 in its own basis column.
Matrix kernel_basis(const Matrix& m);

/// Any x with a*x = b (free variables set to zero), or nullopt when some
/// column of b lies outside the column space of a.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Two-sided inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the column space: the pivot columns of m, in order.
Matrix column_space_basis(const Matrix& m);

}  // namespace gcoalg
