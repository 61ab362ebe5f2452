#include "gcoalg/smash.hpp"

namespace gcoalg {

GroupCoalgebra build_smash(const GroupCoalgebra& c) {
    std::size_t ord = c.group.order();
    std::size_t e = c.group.identity();
    std::vector<std::size_t> dims(ord);
    for (std::size_t a = 0; a < ord; ++a) dims[a] = c.dims[a] * ord;
    std::vector<Matrix> delta(ord * ord);
    for (std::size_t a = 0; a < ord; ++a)
        for (std::size_t b = 0; b < ord; ++b) {
            std::size_t ab = c.group.mul(a, b);
            const Matrix& d = c.delta(a, b);
            Matrix m(c.field, dims[a] * dims[b], dims[ab]);
            // (e_k x| s) -> sum_{i,j} d[i*d_b + j, k] (e_i x| b s) (x) (e_j x| s)
            for (std::size_t s = 0; s < ord; ++s) {
                std::size_t bs = c.group.mul(b, s);
                for (std::size_t k = 0; k < c.dims[ab]; ++k)
                    for (std::size_t i = 0; i < c.dims[a]; ++i)
                        for (std::size_t j = 0; j < c.dims[b]; ++j) {
                            const Scalar& v = d.at(i * c.dims[b] + j, k);
                            if (v.is_zero()) continue;
                            m.at((i * ord + bs) * dims[b] + (j * ord + s), k * ord + s) = v;
                        }
            }
            delta[a * ord + b] = std::move(m);
        }
    Matrix counit(c.field, 1, dims[e]);
    for (std::size_t k = 0; k < c.dims[e]; ++k)
        for (std::size_t s = 0; s < ord; ++s) counit.at(0, k * ord + s) = c.counit.at(0, k);
    return GroupCoalgebra(c.field, c.group, std::move(dims), std::move(delta), std::move(counit));
}

Report verify_smash_comodule(const GroupCoalgebra& base, const SmashComodule& m) {
    Report report;
    GroupCoalgebra sm = build_smash(base);
    std::size_t ord = base.group.order();
    std::size_t e = base.group.identity();
    if (m.coactions.size() != ord) throw ShapeMismatch("one smash coaction per group element");
    for (std::size_t b = 0; b < ord; ++b)
        if (m.coactions[b].rows() != m.dim * sm.dims[b] || m.coactions[b].cols() != m.dim)
            throw ShapeMismatch("smash coaction " + std::to_string(b) + " has the wrong shape");
    Matrix id = Matrix::identity(base.field, m.dim);
    if (kronecker(id, sm.counit) * m.coactions[e] != id) report.add("smash-counit", {e});
    for (std::size_t a = 0; a < ord; ++a)
        for (std::size_t b = 0; b < ord; ++b) {
            std::size_t ab = base.group.mul(a, b);
            Matrix lhs = kronecker(id, sm.delta(a, b)) * m.coactions[ab];
            Matrix rhs =
                kronecker(m.coactions[a], Matrix::identity(base.field, sm.dims[b])) * m.coactions[b];
            if (lhs != rhs) report.add("smash-square", {a, b});
        }
    return report;
}

SmashComodule to_smash_comodule(const GroupCoalgebra& base, const GComodule& m) {
    std::size_t ord = base.group.order();
    std::vector<std::size_t> offset(ord + 1, 0);
    for (std::size_t a = 0; a < ord; ++a) offset[a + 1] = offset[a] + m.dims[a];
    SmashComodule out;
    out.dim = offset[ord];
    out.coactions.resize(ord);
    for (std::size_t b = 0; b < ord; ++b) {
        std::size_t db = base.dims[b] * ord;  // dim of C_b x| kG
        Matrix rho(base.field, out.dim * db, out.dim);
        for (std::size_t s = 0; s < ord; ++s) {
            std::size_t sbinv = base.group.mul(s, base.group.inv(b));
            std::size_t sinv = base.group.inv(s);
            const Matrix& r = m.rho(sbinv, b, ord);  // M_s -> M_{s b^-1} (x) C_b
            for (std::size_t col = 0; col < m.dims[s]; ++col)
                for (std::size_t i = 0; i < m.dims[sbinv]; ++i)
                    for (std::size_t j = 0; j < base.dims[b]; ++j) {
                        const Scalar& v = r.at(i * base.dims[b] + j, col);
                        if (v.is_zero()) continue;
                        rho.at((offset[sbinv] + i) * db + (j * ord + sinv), offset[s] + col) = v;
                    }
        }
        out.coactions[b] = std::move(rho);
    }
    return out;
}

std::vector<Matrix> grade_decomposition(const GroupCoalgebra& base, const SmashComodule& m) {
    std::size_t ord = base.group.order();
    std::size_t e = base.group.identity();
    std::size_t de = base.dims[e];
    // p_e: C_e x| kG -> kG, c x| s -> counit(c) s^-1
    Matrix p(base.field, ord, de * ord);
    for (std::size_t k = 0; k < de; ++k)
        for (std::size_t s = 0; s < ord; ++s)
            p.at(base.group.inv(s), k * ord + s) = base.counit.at(0, k);
    Matrix kappa = kronecker(Matrix::identity(base.field, m.dim), p) * m.coactions[e];
    std::vector<Matrix> projections(ord, Matrix(base.field, m.dim, m.dim));
    for (std::size_t s = 0; s < ord; ++s)
        for (std::size_t t = 0; t < m.dim; ++t)
            for (std::size_t u = 0; u < m.dim; ++u)
                projections[s].at(t, u) = kappa.at(t * ord + s, u);
    Matrix sum = Matrix::zero(base.field, m.dim, m.dim);
    for (const Matrix& pr : projections) sum = sum + pr;
    if (sum != Matrix::identity(base.field, m.dim))
        throw NotGradable("grade idempotents do not sum to the identity");
    return projections;
}

GComodule from_smash_comodule(const GroupCoalgebra& base, const SmashComodule& m) {
    std::size_t ord = base.group.order();
    std::vector<Matrix> proj = grade_decomposition(base, m);
    std::vector<Matrix> grade_basis(ord);
    GComodule out;
    out.dims.resize(ord);
    for (std::size_t s = 0; s < ord; ++s) {
        grade_basis[s] = column_space_basis(proj[s]);
        out.dims[s] = grade_basis[s].cols();
    }
    out.coactions.resize(ord * ord);
    for (std::size_t a = 0; a < ord; ++a)
        for (std::size_t b = 0; b < ord; ++b) {
            std::size_t ab = base.group.mul(a, b);
            std::size_t db = base.dims[b];
            std::size_t tag = base.group.inv(ab);
            // rho_b on grade ab lands in M (x) C_b x| (ab)^-1
            Matrix img = m.coactions[b] * grade_basis[ab];
            Matrix stripped(base.field, m.dim * db, out.dims[ab]);
            for (std::size_t t = 0; t < m.dim; ++t)
                for (std::size_t j = 0; j < db; ++j)
                    for (std::size_t s = 0; s < ord; ++s)
                        for (std::size_t col = 0; col < out.dims[ab]; ++col) {
                            const Scalar& v = img.at(t * (db * ord) + (j * ord + s), col);
                            if (v.is_zero()) continue;
                            if (s != tag)
                                throw SupportViolation(
                                    "coaction " + std::to_string(b) + " of grade " +
                                    std::to_string(ab) + " carries the wrong group tag");
                            stripped.at(t * db + j, col) = v;
                        }
            // the M-part must live in grade a = ab b^-1
            auto rho = solve_right(kronecker(grade_basis[a], Matrix::identity(base.field, db)),
                                   stripped);
            if (!rho)
                throw SupportViolation("coaction " + std::to_string(b) + " of grade " +
                                       std::to_string(ab) + " leaves grade " + std::to_string(a));
            out.coactions[a * ord + b] = *rho;
        }
    return out;
}

FPrimeGPrimeResult fprime_gprime_check(const GroupCoalgebra& base, const RightComodule& n) {
    FPrimeGPrimeResult result;
    std::size_t ord = base.group.order();
    std::size_t e = base.group.identity();
    Coalgebra ce = component_e(base);

    // G'(N) as a smash comodule, graded by construction
    CotensorComodule gn = functor_G(base, n);
    SmashComodule gprime = to_smash_comodule(base, gn.comodule);
    Report valid = verify_smash_comodule(base, gprime);
    result.report.merge(valid);

    // F' = grade-e part; the counit (I (x) eps) o inc must be an iso onto N
    GComodule recovered = from_smash_comodule(base, gprime);
    if (recovered != gn.comodule)
        result.report.add("smash-round-trip", {}, "G'(N) does not round-trip through the grading");
    Matrix nu = kronecker(Matrix::identity(base.field, n.dim), ce.counit) * gn.inclusions[e];
    result.counit_iso = recovered.dims[e] == n.dim && rank(nu) == n.dim;
    if (!result.counit_iso) result.report.add("counit-iso", {e});

    // unit bijectivity across the suspension family (through the smash picture)
    result.unit_bijective.resize(ord, true);
    for (std::size_t s = 0; s < ord; ++s) {
        GComodule suspended = from_smash_comodule(base, to_smash_comodule(base, suspension(base, s)));
        AdjunctionResult adj = adjunction_check(base, suspended);
        result.unit_bijective[s] = adj.all_units_bijective;
    }
    result.strong_equivalent = result.counit_iso;
    for (bool b : result.unit_bijective) result.strong_equivalent &= b;
    return result;
}

}  // namespace gcoalg
