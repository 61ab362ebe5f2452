#include "gcoalg/coalgebra.hpp"

namespace gcoalg {

namespace {

// first column on which two equal-shaped matrices differ, as a witness
std::size_t first_bad_column(const Matrix& a, const Matrix& b) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a.at(i, j) != b.at(i, j)) return j;
    return 0;
}

}  // namespace

Coalgebra::Coalgebra(Field f, std::size_t d, Matrix delta, Matrix eps)
    : field(f), dim(d), comult(std::move(delta)), counit(std::move(eps)) {
    if (comult.rows() != dim * dim || comult.cols() != dim)
        throw ShapeMismatch("comultiplication must be (dim^2 x dim)");
    if (counit.rows() != 1 || counit.cols() != dim) throw ShapeMismatch("counit must be (1 x dim)");
    if (comult.field() != field || counit.field() != field)
        throw FieldMismatch("coalgebra structure maps over the wrong field");
}

Coalgebra Coalgebra::ground(const Field& f) { return group_like(f, 1); }

Coalgebra Coalgebra::group_like(const Field& f, std::size_t d) {
    Matrix delta(f, d * d, d);
    Matrix eps(f, 1, d);
    for (std::size_t i = 0; i < d; ++i) {
        delta.at(i * d + i, i) = Scalar::one(f);
        eps.at(0, i) = Scalar::one(f);
    }
    return Coalgebra(f, d, delta, eps);
}

Coalgebra Coalgebra::comatrix(const Field& f, std::size_t n) {
    std::size_t d = n * n;  // basis e_ij at index i*n + j
    Matrix delta(f, d * d, d);
    Matrix eps(f, 1, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                delta.at((i * n + k) * d + (k * n + j), i * n + j) = Scalar::one(f);
            if (i == j) eps.at(0, i * n + j) = Scalar::one(f);
        }
    return Coalgebra(f, d, delta, eps);
}

Report verify_coalgebra(const Coalgebra& c) {
    Report report;
    Matrix id = Matrix::identity(c.field, c.dim);
    Matrix lhs = kronecker(c.comult, id) * c.comult;
    Matrix rhs = kronecker(id, c.comult) * c.comult;
    if (lhs != rhs) report.add("coassociativity", {first_bad_column(lhs, rhs)});
    Matrix left_counit = kronecker(c.counit, id) * c.comult;
    Matrix right_counit = kronecker(id, c.counit) * c.comult;
    if (right_counit != id) report.add("counit-right", {first_bad_column(right_counit, id)});
    if (left_counit != id) report.add("counit-left", {first_bad_column(left_counit, id)});
    return report;
}

bool is_cocommutative(const Coalgebra& c) {
    return tensor_swap(c.field, c.dim, c.dim) * c.comult == c.comult;
}

DualAlgebra dual_algebra(const Coalgebra& c) {
    // (e_i* . e_j*)(e_k) = Delta[i*d + j, k], so the multiplication on
    // coordinate columns of C* is the transpose of the comultiplication.
    return {c.field, c.dim, c.comult.transposed(), c.counit.transposed()};
}

Report verify_algebra(const DualAlgebra& a) {
    Report report;
    Matrix id = Matrix::identity(a.field, a.dim);
    Matrix assoc_l = a.mult * kronecker(a.mult, id);
    Matrix assoc_r = a.mult * kronecker(id, a.mult);
    if (assoc_l != assoc_r) report.add("associativity", {first_bad_column(assoc_l, assoc_r)});
    Matrix unit_l = a.mult * kronecker(a.unit, id);
    Matrix unit_r = a.mult * kronecker(id, a.unit);
    if (unit_l != id) report.add("unit-left", {first_bad_column(unit_l, id)});
    if (unit_r != id) report.add("unit-right", {first_bad_column(unit_r, id)});
    return report;
}

Matrix convolve(const Coalgebra& c, const Matrix& u, const Matrix& v) {
    if (u.rows() != 1 || u.cols() != c.dim || v.rows() != 1 || v.cols() != c.dim)
        throw ShapeMismatch("convolve expects (1 x dim) functionals");
    return kronecker(u, v) * c.comult;
}

std::optional<Matrix> convolution_inverse(const Coalgebra& c, const Matrix& u) {
    if (u.rows() != 1 || u.cols() != c.dim)
        throw ShapeMismatch("convolution_inverse expects a (1 x dim) functional");
    // (u * v)(e_k) = sum_{i,j} u_i v_j Delta[i*d + j, k]; linear in v.
    std::size_t d = c.dim;
    Matrix system(c.field, d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                system.at(k, j) += u.at(0, i) * c.comult.at(i * d + j, k);
    auto v = solve_right(system, c.counit.transposed());
    if (!v) return std::nullopt;
    Matrix vrow = v->transposed();
    if (convolve(c, vrow, u) != c.counit)
        throw InternalError("one-sided convolution inverse is not two-sided");
    return vrow;
}

Report verify_right_comodule(const Coalgebra& c, const RightComodule& m) {
    Report report;
    std::size_t n = m.dim;
    if (m.coaction.rows() != n * c.dim || m.coaction.cols() != n)
        throw ShapeMismatch("right coaction must be (dim*d x dim)");
    Matrix id_m = Matrix::identity(c.field, n);
    Matrix id_c = Matrix::identity(c.field, c.dim);
    Matrix counit_law = kronecker(id_m, c.counit) * m.coaction;
    if (counit_law != id_m) report.add("comodule-counit", {first_bad_column(counit_law, id_m)});
    Matrix lhs = kronecker(m.coaction, id_c) * m.coaction;
    Matrix rhs = kronecker(id_m, c.comult) * m.coaction;
    if (lhs != rhs) report.add("comodule-coassociativity", {first_bad_column(lhs, rhs)});
    return report;
}

Report verify_left_comodule(const Coalgebra& c, const LeftComodule& m) {
    Report report;
    std::size_t n = m.dim;
    if (m.coaction.rows() != c.dim * n || m.coaction.cols() != n)
        throw ShapeMismatch("left coaction must be (d*dim x dim)");
    Matrix id_m = Matrix::identity(c.field, n);
    Matrix id_c = Matrix::identity(c.field, c.dim);
    Matrix counit_law = kronecker(c.counit, id_m) * m.coaction;
    if (counit_law != id_m) report.add("comodule-counit", {first_bad_column(counit_law, id_m)});
    Matrix lhs = kronecker(id_c, m.coaction) * m.coaction;
    Matrix rhs = kronecker(c.comult, id_m) * m.coaction;
    if (lhs != rhs) report.add("comodule-coassociativity", {first_bad_column(lhs, rhs)});
    return report;
}

Matrix cotensor(const Coalgebra& c, const RightComodule& n, const LeftComodule& m) {
    Matrix id_n = Matrix::identity(c.field, n.dim);
    Matrix id_m = Matrix::identity(c.field, m.dim);
    return kernel_basis(kronecker(n.coaction, id_m) - kronecker(id_n, m.coaction));
}

std::vector<Matrix> comodule_hom_space(const Coalgebra& c, const RightComodule& m,
                                       const RightComodule& n) {
    // Colinearity (f (x) C) o rho_M = rho_N o f, linearized over the entries
    // of f: column (i*dim M + j) of the constraint matrix is the constraint
    // image of the basis map E_ij.
    std::size_t rows = n.dim * c.dim * m.dim;
    std::size_t vars = n.dim * m.dim;
    Matrix id_c = Matrix::identity(c.field, c.dim);
    Matrix constraints(c.field, rows, vars);
    for (std::size_t i = 0; i < n.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            Matrix e(c.field, n.dim, m.dim);
            e.at(i, j) = Scalar::one(c.field);
            Matrix img = kronecker(e, id_c) * m.coaction - n.coaction * e;
            for (std::size_t ri = 0; ri < img.rows(); ++ri)
                for (std::size_t cj = 0; cj < img.cols(); ++cj)
                    constraints.at(ri * m.dim + cj, i * m.dim + j) = img.at(ri, cj);
        }
    Matrix basis_vectors = kernel_basis(constraints);
    std::vector<Matrix> basis;
    for (std::size_t col = 0; col < basis_vectors.cols(); ++col) {
        Matrix f(c.field, n.dim, m.dim);
        for (std::size_t i = 0; i < n.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j)
                f.at(i, j) = basis_vectors.at(i * m.dim + j, col);
        basis.push_back(f);
    }
    return basis;
}

}  // namespace gcoalg
