#include "gcoalg/crossed.hpp"

#include <random>

namespace gcoalg {

namespace {

// iterated comultiplication Delta^2: C -> C (x) C (x) C
Matrix delta2(const Coalgebra& c) {
    return kronecker(c.comult, Matrix::identity(c.field, c.dim)) * c.comult;
}

// c -> c_(1,a) (x) c_(2,b) (x) c_(3,(ab)^-1) on the identity component
Matrix gc_delta3(const GroupCoalgebra& c, std::size_t a, std::size_t b) {
    std::size_t ab = c.group.mul(a, b);
    std::size_t tail = c.group.inv(ab);
    return kronecker(c.delta(a, b), Matrix::identity(c.field, c.dims[tail])) * c.delta(ab, tail);
}

// c -> c_(1,a) (x) c_(2,e) (x) c_(3,a^-1) on the identity component
Matrix gc_delta_aea(const GroupCoalgebra& c, std::size_t a) {
    std::size_t ainv = c.group.inv(a);
    return kronecker(c.delta(a, c.group.identity()), Matrix::identity(c.field, c.dims[ainv])) *
           c.delta(a, ainv);
}

// basis of the left-colinear maps C_a -> C_e over the identity component
std::vector<Matrix> left_colinear_hom_space(const GroupCoalgebra& c, std::size_t a) {
    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e], da = c.dims[a];
    Matrix id_e = Matrix::identity(c.field, de);
    Matrix constraints(c.field, de * de * da, de * da);
    for (std::size_t i = 0; i < de; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Matrix basis_map(c.field, de, da);
            basis_map.at(i, j) = Scalar::one(c.field);
            Matrix img = c.delta(e, e) * basis_map - kronecker(id_e, basis_map) * c.delta(e, a);
            for (std::size_t r = 0; r < img.rows(); ++r)
                for (std::size_t s = 0; s < img.cols(); ++s)
                    constraints.at(r * da + s, i * da + j) = img.at(r, s);
        }
    Matrix vecs = kernel_basis(constraints);
    std::vector<Matrix> basis;
    for (std::size_t col = 0; col < vecs.cols(); ++col) {
        Matrix m(c.field, de, da);
        for (std::size_t i = 0; i < de; ++i)
            for (std::size_t j = 0; j < da; ++j) m.at(i, j) = vecs.at(i * da + j, col);
        basis.push_back(std::move(m));
    }
    return basis;
}

Matrix span_element(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeff) {
    Matrix sum = Matrix::zero(basis[0].field(), basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < basis.size(); ++i) sum = sum + basis[i].scaled(coeff[i]);
    return sum;
}

SpanSearch find_invertible_in_span(const std::vector<Matrix>& basis, const Field& field,
                                   std::size_t dim, const SearchPolicy& policy,
                                   std::mt19937_64& rng) {
    SpanSearch out;
    if (dim == 0) {
        out.verdict = Verdict::yes;
        out.found = Matrix::zero(field, 0, 0);
        return out;
    }
    if (basis.empty()) return out;  // only the zero map
    std::size_t s = basis.size();

    if (field.is_prime_field()) {
        std::uint64_t p = field.modulus();
        double total = 1;
        for (std::size_t i = 0; i < s; ++i) total *= static_cast<double>(p);
        if (total <= static_cast<double>(policy.exhaustive_bound)) {
            std::vector<Scalar> coeff(s, Scalar::zero(field));
            std::uint64_t count = static_cast<std::uint64_t>(total);
            for (std::uint64_t n = 1; n < count; ++n) {
                std::uint64_t v = n;
                for (std::size_t i = 0; i < s; ++i) {
                    coeff[i] = Scalar::of_int(field, static_cast<long>(v % p));
                    v /= p;
                }
                Matrix candidate = span_element(basis, coeff);
                if (rank(candidate) == dim) {
                    out.verdict = Verdict::yes;
                    out.found = candidate;
                    return out;
                }
            }
            return out;  // exhaustive miss: a definite negative
        }
        for (int t = 0; t < policy.rational_retries; ++t) {
            std::vector<Scalar> coeff;
            for (std::size_t i = 0; i < s; ++i)
                coeff.push_back(Scalar::of_int(field, static_cast<long>(rng() % p)));
            Matrix candidate = span_element(basis, coeff);
            if (rank(candidate) == dim) {
                out.verdict = Verdict::yes;
                out.found = candidate;
                return out;
            }
        }
        out.verdict = Verdict::inconclusive;
        return out;
    }

    // rationals: sample, then certify det == 0 on the span by grid evaluation
    long radius = static_cast<long>(4 * dim + 4);
    for (int t = 0; t < policy.rational_retries; ++t) {
        std::vector<Scalar> coeff;
        for (std::size_t i = 0; i < s; ++i)
            coeff.push_back(Scalar::of_int(
                field, static_cast<long>(rng() % (2 * radius + 1)) - radius));
        Matrix candidate = span_element(basis, coeff);
        if (rank(candidate) == dim) {
            out.verdict = Verdict::yes;
            out.found = candidate;
            return out;
        }
    }
    // det has per-variable degree <= dim; a full (dim+1)-point grid certifies
    double grid = 1;
    for (std::size_t i = 0; i < s; ++i) grid *= static_cast<double>(dim + 1);
    if (grid > static_cast<double>(policy.exhaustive_bound)) {
        out.verdict = Verdict::inconclusive;
        return out;
    }
    std::vector<std::size_t> point(s, 0);
    while (true) {
        std::vector<Scalar> coeff;
        for (std::size_t i = 0; i < s; ++i)
            coeff.push_back(Scalar::of_int(field, static_cast<long>(point[i])));
        Matrix candidate = span_element(basis, coeff);
        if (rank(candidate) == dim) {
            out.verdict = Verdict::yes;
            out.found = candidate;
            return out;
        }
        std::size_t i = 0;
        while (i < s && point[i] == dim) point[i++] = 0;
        if (i == s) break;
        ++point[i];
    }
    return out;  // det vanishes on the whole span
}

}  // namespace

SpanSearch search_invertible_in_span(const std::vector<Matrix>& basis, const Field& field,
                                     std::size_t dim, const SearchPolicy& policy) {
    std::mt19937_64 rng(policy.seed);
    return find_invertible_in_span(basis, field, dim, policy, rng);
}

GroupCoalgebra build_kG(const Field& f, const FiniteGroup& g) {
    return cofree(Coalgebra::ground(f), g);
}

std::vector<std::size_t> kg_antipode(const FiniteGroup& g) {
    std::vector<std::size_t> s(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) s[a] = g.inv(a);
    return s;
}

WeakAction WeakAction::trivial(const Coalgebra& c, const FiniteGroup& g) {
    return {std::vector<Matrix>(g.order(), Matrix::identity(c.field, c.dim))};
}

Report verify_weak_action(const Coalgebra& c, const WeakAction& action) {
    Report report;
    for (std::size_t a = 0; a < action.maps.size(); ++a) {
        const Matrix& la = action.maps[a];
        if (la.rows() != c.dim || la.cols() != c.dim)
            throw ShapeMismatch("action map " + std::to_string(a) + " has the wrong shape");
        if (c.comult * la != kronecker(la, la) * c.comult)
            report.add("action-comultiplicative", {a});
        if (c.counit * la != c.counit) report.add("action-counital", {a});
    }
    return report;
}

FactorSet FactorSet::trivial(const Coalgebra& c, const FiniteGroup& g) {
    std::size_t n = g.order();
    return {std::vector<Matrix>(n * n, c.counit), std::vector<Matrix>(n * n, c.counit)};
}

Report verify_factor_set(const Coalgebra& c, const FactorSet& fset) {
    Report report;
    if (fset.g.size() != fset.f.size())
        throw ShapeMismatch("factor set must store one inverse per functional");
    for (std::size_t k = 0; k < fset.f.size(); ++k) {
        if (fset.f[k].rows() != 1 || fset.f[k].cols() != c.dim)
            throw ShapeMismatch("factor set functionals must be (1 x dim)");
        if (convolve(c, fset.f[k], fset.g[k]) != c.counit ||
            convolve(c, fset.g[k], fset.f[k]) != c.counit)
            report.add("factor-set-inverse", {k});
    }
    return report;
}

Report validate_crossed_data(const Coalgebra& c, const FiniteGroup& g, const WeakAction& action,
                             const FactorSet& fset) {
    Report report;
    std::size_t n = g.order();
    std::size_t e = g.identity();
    if (action.maps.size() != n) throw ShapeMismatch("one action map per group element");
    if (fset.f.size() != n * n) throw ShapeMismatch("one factor-set entry per element pair");
    report.merge(verify_weak_action(c, action));
    report.merge(verify_factor_set(c, fset));
    if (!report.ok()) return report;

    Matrix dd = delta2(c);
    Matrix id = Matrix::identity(c.field, c.dim);
    const Matrix& f_ee = fset.at(e, e, n);
    const Matrix& g_ee = fset.inv_at(e, e, n);

    // lambda_e(c) = f_{e,e}(c_(1)) c_(2) g_{e,e}(c_(3))
    if (action.maps[e] != kronecker(f_ee, kronecker(id, g_ee)) * dd)
        report.add("unit-action", {e});

    // counit-unit relations
    for (std::size_t a = 0; a < n; ++a) {
        if (fset.at(e, a, n) != f_ee) report.add("counit-unit-left", {e, a});
        if (fset.at(a, e, n) != f_ee * action.maps[a]) report.add("counit-unit-right", {a, e});
    }

    // cocycle relation
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t gg = 0; gg < n; ++gg) {
                Matrix lhs =
                    kronecker(fset.at(b, gg, n) * action.maps[a], fset.at(a, g.mul(b, gg), n)) *
                    c.comult;
                Matrix rhs = kronecker(fset.at(a, b, n), fset.at(g.mul(a, b), gg, n)) * c.comult;
                if (lhs != rhs) report.add("cocycle", {a, b, gg});
            }

    // twisted commutation
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix lhs = kronecker(action.maps[b] * action.maps[a], fset.at(a, b, n)) * c.comult;
            Matrix rhs = kronecker(fset.at(a, b, n), action.maps[g.mul(a, b)]) * c.comult;
            if (lhs != rhs) report.add("twisted-commutation", {a, b});
        }
    return report;
}

GroupCoalgebra build_crossed(const Coalgebra& c, const FiniteGroup& g, const WeakAction& action,
                             const FactorSet& fset) {
    Report validation = validate_crossed_data(c, g, action, fset);
    if (!validation.ok())
        throw InvalidCrossedData("crossed data rejected: " + validation.summary());
    std::size_t n = g.order();
    std::size_t e = g.identity();
    Matrix dd = delta2(c);
    Matrix id = Matrix::identity(c.field, c.dim);
    std::vector<std::size_t> dims(n, c.dim);
    std::vector<Matrix> delta(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            delta[a * n + b] = kronecker(id, kronecker(action.maps[a], fset.at(a, b, n))) * dd;
    GroupCoalgebra out(c.field, g, std::move(dims), std::move(delta), fset.inv_at(e, e, n));
    Report axioms = verify_group_coalgebra(out);
    if (!axioms.ok())
        throw InternalError("validated crossed data produced an invalid G-coalgebra: " +
                            axioms.summary());
    return out;
}

NormalizedCrossed normalize_factor_set(const Coalgebra& c, const FiniteGroup& g,
                                       const WeakAction& action, const FactorSet& fset) {
    Report validation = validate_crossed_data(c, g, action, fset);
    if (!validation.ok())
        throw InvalidCrossedData("crossed data rejected: " + validation.summary());
    std::size_t n = g.order();
    std::size_t e = g.identity();

    NormalizedCrossed out;
    out.action = action;
    out.action.maps[e] = Matrix::identity(c.field, c.dim);
    out.fset = fset;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == e) continue;
        std::size_t ainv = g.inv(a);
        out.fset.f[a * n + ainv] = convolve(c, fset.at(a, ainv, n), fset.at(e, e, n));
    }
    for (std::size_t a = 0; a < n; ++a) {
        out.fset.f[e * n + a] = c.counit;
        out.fset.f[a * n + e] = c.counit;
    }
    for (std::size_t k = 0; k < n * n; ++k) {
        auto inv = convolution_inverse(c, out.fset.f[k]);
        if (!inv) throw InternalError("normalized factor set lost invertibility");
        out.fset.g[k] = *inv;
    }

    out.iso.assign(n, Matrix::identity(c.field, c.dim));
    out.iso[e] = kronecker(Matrix::identity(c.field, c.dim), fset.inv_at(e, e, n)) * c.comult;
    Matrix iso_e_inv = kronecker(Matrix::identity(c.field, c.dim), fset.at(e, e, n)) * c.comult;
    if (iso_e_inv * out.iso[e] != Matrix::identity(c.field, c.dim))
        throw InternalError("normalization isomorphism is not invertible");

    out.before = build_crossed(c, g, action, fset);
    out.after = build_crossed(c, g, out.action, out.fset);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix lhs = kronecker(out.iso[a], out.iso[b]) * out.before.delta(a, b);
            Matrix rhs = out.after.delta(a, b) * out.iso[g.mul(a, b)];
            if (lhs != rhs)
                throw InternalError("normalization is not a G-coalgebra morphism at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
        }
    if (out.after.counit * out.iso[e] != out.before.counit)
        throw InternalError("normalization does not preserve the counit");
    return out;
}

Report verify_cocleft_data(const GroupCoalgebra& c, const CocleftData& d) {
    Report report;
    std::size_t n = c.group.order();
    if (d.u.size() != n || d.v.size() != n)
        throw ShapeMismatch("cocleft data needs one functional pair per element");
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t ainv = c.group.inv(a);
        if (d.u[a].rows() != 1 || d.u[a].cols() != c.dims[a] || d.v[a].rows() != 1 ||
            d.v[a].cols() != c.dims[ainv])
            throw ShapeMismatch("cocleft functional " + std::to_string(a) +
                                " has the wrong shape");
        if (kronecker(d.u[a], d.v[a]) * c.delta(a, ainv) != c.counit)
            report.add("cocleft-right-inverse", {a});
        if (kronecker(d.v[a], d.u[a]) * c.delta(ainv, a) != c.counit)
            report.add("cocleft-left-inverse", {a});
    }
    return report;
}

PartnerResult solve_convolution_partner(const GroupCoalgebra& c, const std::vector<Matrix>& u) {
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e];
    CocleftData data;
    data.u = u;
    data.v.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t ainv = c.group.inv(a);
        std::size_t da = c.dims[a], dv = c.dims[ainv];
        const Matrix& d_right = c.delta(a, ainv);
        const Matrix& d_left = c.delta(ainv, a);
        Matrix system(c.field, 2 * de, dv);
        for (std::size_t k = 0; k < de; ++k)
            for (std::size_t j = 0; j < dv; ++j) {
                for (std::size_t i = 0; i < da; ++i) {
                    system.at(k, j) += u[a].at(0, i) * d_right.at(i * dv + j, k);
                    system.at(de + k, j) += u[a].at(0, i) * d_left.at(j * da + i, k);
                }
            }
        Matrix rhs = vstack(c.counit.transposed(), c.counit.transposed());
        auto v = solve_right(system, rhs);
        if (!v) return {std::nullopt, a};
        data.v[a] = v->transposed();
    }
    return {std::move(data), 0};
}

CrossedExtraction crossed_from_cocleft(const GroupCoalgebra& c, const CocleftData& d) {
    Report pre = verify_cocleft_data(c, d);
    if (!pre.ok()) throw PreconditionViolated("unverified cocleft data: " + pre.summary());

    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e];
    Coalgebra ce = component_e(c);
    Matrix id_e = Matrix::identity(c.field, de);

    CrossedExtraction out;
    out.action.maps.resize(n);
    out.fset.f.resize(n * n);
    out.fset.g.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        out.action.maps[a] = kronecker(d.u[a], kronecker(id_e, d.v[a])) * gc_delta_aea(c, a);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            out.fset.f[a * n + b] =
                kronecker(d.u[a], kronecker(d.u[b], d.v[ab])) * gc_delta3(c, a, b);
            auto inv = convolution_inverse(ce, out.fset.f[a * n + b]);
            if (!inv) throw InternalError("extracted factor set is not convolution invertible");
            out.fset.g[a * n + b] = *inv;
        }

    out.crossed = build_crossed(ce, c.group, out.action, out.fset);

    out.iso.resize(n);
    out.iso_inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        out.iso[a] = kronecker(id_e, d.u[a]) * c.delta(e, a);
        out.iso_inv[a] = kronecker(Matrix::identity(c.field, c.dims[a]), d.v[a]) *
                         c.delta(a, c.group.inv(a));
        if (out.iso_inv[a] * out.iso[a] != Matrix::identity(c.field, c.dims[a]) ||
            out.iso[a] * out.iso_inv[a] != id_e)
            throw InternalError("cocleft isomorphism is not two-sided at " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix lhs = kronecker(out.iso[a], out.iso[b]) * c.delta(a, b);
            Matrix rhs = out.crossed.delta(a, b) * out.iso[c.group.mul(a, b)];
            if (lhs != rhs)
                throw InternalError("cocleft extraction is not a G-coalgebra morphism at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
        }
    if (out.crossed.counit * out.iso[e] != c.counit)
        throw InternalError("cocleft extraction does not preserve the counit");
    return out;
}

CocleftDecision is_cocleft(const GroupCoalgebra& c, const SearchPolicy& policy) {
    CocleftDecision decision;
    StrongResult strong = is_strong(c);
    if (!strong.strong) {
        decision.verdict = Verdict::no;
        decision.witnesses = strong.witnesses;
        decision.note = "not strong";
        return decision;
    }
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e];
    for (std::size_t a = 0; a < n; ++a)
        if (c.dims[a] != de) decision.witnesses.push_back(a);
    if (!decision.witnesses.empty()) {
        decision.verdict = Verdict::no;
        decision.note = "component dimensions differ from the identity component";
        return decision;
    }

    std::mt19937_64 rng(policy.seed);
    std::vector<Matrix> phi(n), phi_inv(n);
    phi[e] = Matrix::identity(c.field, de);
    bool inconclusive = false;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == e) continue;
        auto basis = left_colinear_hom_space(c, a);
        SpanSearch search = find_invertible_in_span(basis, c.field, de, policy, rng);
        if (search.verdict == Verdict::yes) {
            phi[a] = *search.found;
        } else if (search.verdict == Verdict::no) {
            decision.witnesses.push_back(a);
        } else {
            inconclusive = true;
        }
    }
    if (!decision.witnesses.empty()) {
        decision.verdict = Verdict::no;
        decision.note = "no invertible left-colinear map onto the identity component";
        return decision;
    }
    if (inconclusive) {
        decision.verdict = Verdict::inconclusive;
        decision.note = "rational search exhausted its retries without certification";
        return decision;
    }

    // u_a = counit o phi_a;  v_a = counit o nabla o (C_{a^-1} (x) phi_a^-1) o Delta_{a^-1, e}
    CocleftData witness;
    witness.u.resize(n);
    witness.v.resize(n);
    Coalgebra ce = component_e(c);
    for (std::size_t a = 0; a < n; ++a) {
        phi_inv[a] = *inverse(phi[a]);
        witness.u[a] = c.counit * phi[a];
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t ainv = c.group.inv(a);
        RightComodule right{c.dims[ainv], c.delta(ainv, e)};
        LeftComodule left{c.dims[a], c.delta(e, a)};
        Matrix inc = cotensor(ce, right, left);
        auto cor = solve_right(inc, c.delta(ainv, a));
        if (!cor || inc.cols() != de) throw InternalError("strong corestriction unavailable");
        auto nabla = inverse(*cor);
        if (!nabla) throw InternalError("corestricted comultiplication is not invertible");
        auto lifted = solve_right(
            inc, kronecker(Matrix::identity(c.field, c.dims[ainv]), phi_inv[a]) * c.delta(ainv, e));
        if (!lifted) throw InternalError("candidate section misses the cotensor");
        witness.v[a] = c.counit * (*nabla * *lifted);
    }
    Report check = verify_cocleft_data(c, witness);
    if (!check.ok())
        throw InternalError("constructed cocleft witness fails verification: " + check.summary());
    decision.verdict = Verdict::yes;
    decision.witness = std::move(witness);
    return decision;
}

SmashTypeResult smash_type_check(const GroupCoalgebra& c, const std::vector<Matrix>& u) {
    SmashTypeResult result;
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    if (u.size() != n) throw ShapeMismatch("one functional per group element");
    for (std::size_t a = 0; a < n; ++a)
        if (u[a].rows() != 1 || u[a].cols() != c.dims[a])
            throw ShapeMismatch("functional " + std::to_string(a) + " has the wrong shape");
    if (u[e] != c.counit) result.report.add("morphism-counit", {e});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            if (kronecker(u[a], u[b]) * c.delta(a, b) != u[ab]) result.report.add("morphism", {a, b});
        }
    if (!result.report.ok()) return result;

    CocleftData data;
    data.u = u;
    data.v.resize(n);
    for (std::size_t a = 0; a < n; ++a) data.v[a] = u[c.group.inv(a)];
    CrossedExtraction extraction = crossed_from_cocleft(c, data);
    Coalgebra ce = component_e(c);
    for (std::size_t k = 0; k < n * n; ++k)
        if (extraction.fset.f[k] != ce.counit)
            throw InternalError("smash-type decomposition produced a nontrivial factor set");
    result.decomposition = std::move(extraction);
    return result;
}

Report trivial_action_check(const GroupCoalgebra& c, const CocleftData& d) {
    Report pre = verify_cocleft_data(c, d);
    if (!pre.ok()) throw PreconditionViolated("unverified cocleft data: " + pre.summary());
    Report report;
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e];
    Matrix id_e = Matrix::identity(c.field, de);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix lhs = kronecker(d.u[a], id_e) * c.delta(a, e);
        Matrix rhs = kronecker(id_e, d.u[a]) * c.delta(e, a);
        if (lhs != rhs) report.add("central-relation", {a});
    }
    if (!report.ok()) return report;

    CrossedExtraction extraction = crossed_from_cocleft(c, d);
    for (std::size_t a = 0; a < n; ++a)
        if (extraction.action.maps[a] != id_e)
            throw InternalError("central cocleft data produced a nontrivial action at " +
                                std::to_string(a));
    Coalgebra ce = component_e(c);
    for (std::size_t a = 0; a < n; ++a) {
        const Matrix& p = extraction.iso[a];
        bool left = ce.comult * p == kronecker(id_e, p) * c.delta(e, a);
        bool right = ce.comult * p == kronecker(p, id_e) * c.delta(a, e);
        if (!left || !right || rank(p) != de)
            throw InternalError("cocleft section is not a bicomodule isomorphism at " +
                                std::to_string(a));
    }
    return report;
}

std::vector<std::vector<Matrix>> enumerate_dual_families(const GroupCoalgebra& c,
                                                         std::uint64_t bound) {
    std::vector<std::vector<Matrix>> families;
    if (!c.field.is_prime_field()) return families;
    std::uint64_t p = c.field.modulus();
    std::size_t total_dim = 0;
    for (std::size_t d : c.dims) total_dim += d;
    double total = 1;
    for (std::size_t i = 0; i < total_dim; ++i) total *= static_cast<double>(p);
    if (total > static_cast<double>(bound)) return families;

    std::size_t n = c.group.order();
    std::uint64_t count = static_cast<std::uint64_t>(total);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        std::vector<Matrix> u(n);
        for (std::size_t a = 0; a < n; ++a) {
            Matrix row(c.field, 1, c.dims[a]);
            for (std::size_t j = 0; j < c.dims[a]; ++j) {
                row.at(0, j) = Scalar::of_int(c.field, static_cast<long>(v % p));
                v /= p;
            }
            u[a] = std::move(row);
        }
        families.push_back(std::move(u));
    }
    return families;
}

std::vector<std::vector<Matrix>> enumerate_kg_morphisms(const GroupCoalgebra& c,
                                                        std::uint64_t bound) {
    std::vector<std::vector<Matrix>> out;
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    for (auto& u : enumerate_dual_families(c, bound)) {
        if (u[e] != c.counit) continue;
        bool morphism = true;
        for (std::size_t a = 0; a < n && morphism; ++a)
            for (std::size_t b = 0; b < n && morphism; ++b)
                morphism = kronecker(u[a], u[b]) * c.delta(a, b) == u[c.group.mul(a, b)];
        if (morphism) out.push_back(std::move(u));
    }
    return out;
}

}  // namespace gcoalg
