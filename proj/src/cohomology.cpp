#include "gcoalg/cohomology.hpp"

#include <algorithm>
#include <random>

namespace gcoalg {

namespace {

// all families of functionals (one (1 x d) row per slot) over a prime field
std::vector<std::vector<Matrix>> enumerate_rows(const Field& field, std::size_t slots,
                                                std::size_t dim, std::uint64_t bound) {
    if (!field.is_prime_field()) throw Error("exhaustive enumeration needs a prime field");
    std::uint64_t p = field.modulus();
    double total = 1;
    for (std::size_t i = 0; i < slots * dim; ++i) total *= static_cast<double>(p);
    if (total > static_cast<double>(bound))
        throw Error("search space of size " + std::to_string(total) + " exceeds the bound");
    std::vector<std::vector<Matrix>> out;
    std::uint64_t count = static_cast<std::uint64_t>(total);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        std::vector<Matrix> rows(slots);
        for (std::size_t s = 0; s < slots; ++s) {
            Matrix row(field, 1, dim);
            for (std::size_t j = 0; j < dim; ++j) {
                row.at(0, j) = Scalar::of_int(field, static_cast<long>(v % p));
                v /= p;
            }
            rows[s] = std::move(row);
        }
        out.push_back(std::move(rows));
    }
    return out;
}

std::optional<std::vector<Matrix>> invert_rows(const Coalgebra& c, const std::vector<Matrix>& rows) {
    std::vector<Matrix> inv;
    inv.reserve(rows.size());
    for (const Matrix& r : rows) {
        auto i = convolution_inverse(c, r);
        if (!i) return std::nullopt;
        inv.push_back(*i);
    }
    return inv;
}

}  // namespace

Report check_right_g_action(const Coalgebra& c, const FiniteGroup& g, const WeakAction& action) {
    if (!is_cocommutative(c)) throw NotCocommutative("the coalgebra is not cocommutative");
    Report report = verify_weak_action(c, action);
    std::size_t n = g.order();
    if (action.maps.size() != n) throw ShapeMismatch("one action map per group element");
    if (action.maps[g.identity()] != Matrix::identity(c.field, c.dim))
        report.add("action-unit", {g.identity()});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (action.maps[g.mul(a, b)] != action.maps[b] * action.maps[a])
                report.add("action-composition", {a, b});
    return report;
}

GModuleAlgebra g_module_algebra(const Coalgebra& c, const FiniteGroup& g, const WeakAction& action) {
    Report report = check_right_g_action(c, g, action);
    if (!report.ok()) throw ValidationError("not a right G-action: " + report.summary());
    return {c, g, action.maps};
}

OneCochain make_one_cochain(const Coalgebra& c, std::vector<Matrix> h) {
    auto inv = invert_rows(c, h);
    if (!inv) throw Error("1-cochain component is not convolution invertible");
    return {std::move(h), std::move(*inv)};
}

OneCochain trivial_one_cochain(const Coalgebra& c, const FiniteGroup& g) {
    return {std::vector<Matrix>(g.order(), c.counit), std::vector<Matrix>(g.order(), c.counit)};
}

TwoCochain make_two_cochain(const Coalgebra& c, std::vector<Matrix> f) {
    auto inv = invert_rows(c, f);
    if (!inv) throw Error("2-cochain component is not convolution invertible");
    return {std::move(f), std::move(*inv)};
}

TwoCochain trivial_two_cochain(const Coalgebra& c, const FiniteGroup& g) {
    std::size_t n = g.order();
    return {std::vector<Matrix>(n * n, c.counit), std::vector<Matrix>(n * n, c.counit)};
}

TwoCochain to_two_cochain(const FactorSet& fset) { return {fset.f, fset.g}; }

FactorSet to_factor_set(const TwoCochain& f) { return {f.f, f.finv}; }

Report is_2cocycle(const GModuleAlgebra& m, const TwoCochain& f) {
    Report report;
    std::size_t n = m.group.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) {
                Matrix lhs =
                    convolve(m.coalg, m.act(a, f.at(b, g, n)), f.at(a, m.group.mul(b, g), n));
                Matrix rhs = convolve(m.coalg, f.at(a, b, n), f.at(m.group.mul(a, b), g, n));
                if (lhs != rhs) report.add("two-cocycle", {a, b, g});
            }
    return report;
}

Report is_1cocycle(const GModuleAlgebra& m, const OneCochain& theta) {
    Report report;
    std::size_t n = m.group.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix lhs = convolve(m.coalg, m.act(a, theta.h[b]), theta.h[a]);
            if (lhs != theta.h[m.group.mul(a, b)]) report.add("one-cocycle", {a, b});
        }
    return report;
}

TwoCochain delta1(const GModuleAlgebra& m, const OneCochain& h) {
    std::size_t n = m.group.order();
    std::vector<Matrix> f(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            f[a * n + b] = convolve(m.coalg, convolve(m.coalg, h.h[a], h.hinv[m.group.mul(a, b)]),
                                    m.act(a, h.h[b]));
    return make_two_cochain(m.coalg, std::move(f));
}

CohomologousResult cohomologous(const GModuleAlgebra& m, const TwoCochain& f, const TwoCochain& f2,
                                const SearchPolicy& policy) {
    CohomologousResult result;
    std::size_t n = m.group.order();
    if (f.f == f2.f) {
        result.verdict = Verdict::yes;
        result.witness = trivial_one_cochain(m.coalg, m.group);
        return result;
    }
    if (!m.coalg.field.is_prime_field()) {
        result.verdict = Verdict::inconclusive;
        return result;
    }
    std::vector<std::vector<Matrix>> candidates;
    try {
        candidates = enumerate_rows(m.coalg.field, n, m.coalg.dim, policy.exhaustive_bound);
    } catch (const Error&) {
        result.verdict = Verdict::inconclusive;
        return result;
    }
    for (auto& rows : candidates) {
        auto inv = invert_rows(m.coalg, rows);
        if (!inv) continue;
        OneCochain h{rows, *inv};
        TwoCochain boundary = delta1(m, h);
        bool match = true;
        for (std::size_t k = 0; k < n * n && match; ++k)
            match = f.f[k] == convolve(m.coalg, f2.f[k], boundary.f[k]);
        if (match) {
            result.verdict = Verdict::yes;
            result.witness = std::move(h);
            return result;
        }
    }
    result.verdict = Verdict::no;
    return result;
}

IsoCriterionResult crossed_iso_criterion(const GModuleAlgebra& m, const TwoCochain& f,
                                         const TwoCochain& f2, const Matrix& phi,
                                         const SearchPolicy& policy) {
    const Coalgebra& c = m.coalg;
    if (phi.rows() != c.dim || phi.cols() != c.dim || rank(phi) != c.dim ||
        c.comult * phi != kronecker(phi, phi) * c.comult || c.counit * phi != c.counit)
        throw PreconditionViolated("phi is not a coalgebra automorphism");

    std::size_t n = m.group.order();
    std::vector<Matrix> f2phi(n * n), f2phi_inv(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        f2phi[k] = f2.f[k] * phi;
        f2phi_inv[k] = f2.finv[k] * phi;
    }
    IsoCriterionResult result;
    CohomologousResult cls = cohomologous(m, f, TwoCochain{f2phi, f2phi_inv}, policy);
    result.verdict = cls.verdict;
    if (cls.verdict != Verdict::yes) return result;
    result.witness = cls.witness;

    WeakAction action{m.action};
    auto assemble_and_verify = [&](const GModuleAlgebra& mm, const TwoCochain& fa,
                                   const TwoCochain& fb, const Matrix& base,
                                   const OneCochain& h) -> std::optional<std::vector<Matrix>> {
        std::vector<Matrix> iso(n);
        for (std::size_t b = 0; b < n; ++b) iso[b] = kronecker(base, h.hinv[b]) * mm.coalg.comult;
        GroupCoalgebra before = build_crossed(mm.coalg, mm.group, WeakAction{mm.action},
                                              to_factor_set(fa));
        GroupCoalgebra after = build_crossed(mm.coalg, mm.group, WeakAction{mm.action},
                                             to_factor_set(fb));
        for (std::size_t a = 0; a < n; ++a)
            if (rank(iso[a]) != mm.coalg.dim) return std::nullopt;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (kronecker(iso[a], iso[b]) * before.delta(a, b) !=
                    after.delta(a, b) * iso[mm.group.mul(a, b)])
                    return std::nullopt;
        if (after.counit * iso[mm.group.identity()] != before.counit) return std::nullopt;
        return iso;
    };

    // direct construction on the given cocycles
    if (auto iso = assemble_and_verify(m, f, f2, phi, *cls.witness)) {
        result.iso = std::move(*iso);
        result.iso_verified = true;
        return result;
    }

    // fall back to normalized representatives
    NormalizedCrossed nf = normalize_factor_set(c, m.group, action, to_factor_set(f));
    NormalizedCrossed nf2 = normalize_factor_set(c, m.group, action, to_factor_set(f2));
    TwoCochain fn = to_two_cochain(nf.fset), f2n = to_two_cochain(nf2.fset);
    std::vector<Matrix> f2nphi(n * n), f2nphi_inv(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        f2nphi[k] = f2n.f[k] * phi;
        f2nphi_inv[k] = f2n.finv[k] * phi;
    }
    CohomologousResult cls_n = cohomologous(m, fn, TwoCochain{f2nphi, f2nphi_inv}, policy);
    if (cls_n.verdict == Verdict::yes) {
        if (auto iso = assemble_and_verify(m, fn, f2n, phi, *cls_n.witness)) {
            // conjugate back through the normalization isomorphisms
            std::vector<Matrix> composite(n);
            for (std::size_t a = 0; a < n; ++a) {
                auto inv2 = inverse(nf2.iso[a]);
                if (!inv2) return result;
                composite[a] = *inv2 * (*iso)[a] * nf.iso[a];
            }
            GroupCoalgebra before = build_crossed(c, m.group, action, to_factor_set(f));
            GroupCoalgebra after = build_crossed(c, m.group, action, to_factor_set(f2));
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = 0; b < n && ok; ++b)
                    ok = kronecker(composite[a], composite[b]) * before.delta(a, b) ==
                         after.delta(a, b) * composite[m.group.mul(a, b)];
            ok = ok && after.counit * composite[m.group.identity()] == before.counit;
            if (ok) {
                result.iso = std::move(composite);
                result.iso_verified = true;
            }
        }
    }
    return result;
}

Report verify_kg_morphism(const GroupCoalgebra& c, const std::vector<Matrix>& u) {
    Report report;
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    if (u.size() != n) throw ShapeMismatch("one functional per group element");
    if (u[e] != c.counit) report.add("morphism-counit", {e});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (kronecker(u[a], u[b]) * c.delta(a, b) != u[c.group.mul(a, b)])
                report.add("morphism", {a, b});
    return report;
}

GModuleAlgebra omega_module_algebra(const GroupCoalgebra& c, const std::vector<Matrix>& u0) {
    Report morphism = verify_kg_morphism(c, u0);
    if (!morphism.ok())
        throw PreconditionViolated("basepoint is not a G-coalgebra morphism: " +
                                   morphism.summary());
    Coalgebra ce = component_e(c);
    if (!is_cocommutative(ce)) throw NotCocommutative("identity component is not cocommutative");
    CocleftData data;
    data.u = u0;
    data.v.resize(c.group.order());
    for (std::size_t a = 0; a < c.group.order(); ++a) data.v[a] = u0[c.group.inv(a)];
    CrossedExtraction ext = crossed_from_cocleft(c, data);
    return g_module_algebra(ce, c.group, ext.action);
}

OneCochain theta_from_morphisms(const GroupCoalgebra& c, const std::vector<Matrix>& u,
                                const std::vector<Matrix>& u0) {
    Report ru = verify_kg_morphism(c, u), r0 = verify_kg_morphism(c, u0);
    if (!ru.ok() || !r0.ok())
        throw PreconditionViolated("theta_from_morphisms needs verified morphism families");
    Coalgebra ce = component_e(c);
    if (!is_cocommutative(ce)) throw NotCocommutative("identity component is not cocommutative");
    std::size_t n = c.group.order();
    std::vector<Matrix> h(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t ainv = c.group.inv(a);
        h[a] = kronecker(u[a], u0[ainv]) * c.delta(a, ainv);
    }
    return make_one_cochain(ce, std::move(h));
}

std::vector<Matrix> morphism_from_theta(const GroupCoalgebra& c, const std::vector<Matrix>& u0,
                                        const OneCochain& theta) {
    GModuleAlgebra m = omega_module_algebra(c, u0);
    Report cocycle = is_1cocycle(m, theta);
    if (!cocycle.ok())
        throw PreconditionViolated("theta is not a 1-cocycle: " + cocycle.summary());
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    std::vector<Matrix> u(n);
    for (std::size_t a = 0; a < n; ++a) u[a] = kronecker(theta.h[a], u0[a]) * c.delta(e, a);
    return u;
}

OmegaEquivalenceResult omega_equivalence(const GroupCoalgebra& c, const std::vector<Matrix>& u,
                                         const std::vector<Matrix>& u2,
                                         const SearchPolicy& policy) {
    Report ru = verify_kg_morphism(c, u), r2 = verify_kg_morphism(c, u2);
    if (!ru.ok() || !r2.ok())
        throw PreconditionViolated("omega_equivalence needs verified morphism families");
    OmegaEquivalenceResult result;
    std::size_t n = c.group.order();
    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e];
    Coalgebra ce = component_e(c);

    // f(c_(1,e)) u_a(c_(2,a)) = u2_a(c_(1,a)) f(c_(2,e)), linear in f
    std::size_t rows = 0;
    for (std::size_t a = 0; a < n; ++a) rows += c.dims[a];
    Matrix system(c.field, rows, de);
    std::size_t row0 = 0;
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t da = c.dims[a];
        const Matrix& left = c.delta(e, a);
        const Matrix& right = c.delta(a, e);
        for (std::size_t k = 0; k < da; ++k)
            for (std::size_t j = 0; j < de; ++j) {
                Scalar coeff = Scalar::zero(c.field);
                for (std::size_t i = 0; i < da; ++i) {
                    coeff += u[a].at(0, i) * left.at(j * da + i, k);
                    coeff -= u2[a].at(0, i) * right.at(i * de + j, k);
                }
                system.at(row0 + k, j) = coeff;
            }
        row0 += da;
    }
    Matrix span = kernel_basis(system);

    auto try_candidate = [&](const Matrix& candidate) -> bool {
        if (!convolution_inverse(ce, candidate)) return false;
        result.verdict = Verdict::yes;
        result.witness = candidate;
        return true;
    };

    if (span.cols() == 0) {
        result.verdict = Verdict::no;
        return result;
    }
    if (c.field.is_prime_field()) {
        std::uint64_t p = c.field.modulus();
        double total = 1;
        for (std::size_t i = 0; i < span.cols(); ++i) total *= static_cast<double>(p);
        if (total <= static_cast<double>(policy.exhaustive_bound)) {
            std::uint64_t count = static_cast<std::uint64_t>(total);
            for (std::uint64_t idx = 1; idx < count; ++idx) {
                std::uint64_t v = idx;
                Matrix candidate = Matrix::zero(c.field, 1, de);
                for (std::size_t i = 0; i < span.cols(); ++i) {
                    candidate =
                        candidate +
                        span.column(i).transposed().scaled(
                            Scalar::of_int(c.field, static_cast<long>(v % p)));
                    v /= p;
                }
                if (try_candidate(candidate)) return result;
            }
            result.verdict = Verdict::no;
            return result;
        }
        result.verdict = Verdict::inconclusive;
        return result;
    }

    // rationals: try the counit and seeded small combinations, never negative
    if (solve_right(span, ce.counit.transposed()) && try_candidate(ce.counit)) return result;
    std::mt19937_64 rng(policy.seed);
    for (int t = 0; t < policy.rational_retries; ++t) {
        Matrix candidate = Matrix::zero(c.field, 1, de);
        for (std::size_t i = 0; i < span.cols(); ++i)
            candidate = candidate + span.column(i).transposed().scaled(Scalar::of_int(
                                        c.field, static_cast<long>(rng() % 17) - 8));
        if (try_candidate(candidate)) return result;
    }
    result.verdict = Verdict::inconclusive;
    return result;
}

Report action_independence_check(const GroupCoalgebra& c, const CocleftData& d1,
                                 const CocleftData& d2) {
    Coalgebra ce = component_e(c);
    if (!is_cocommutative(ce)) throw NotCocommutative("identity component is not cocommutative");
    Report pre1 = verify_cocleft_data(c, d1), pre2 = verify_cocleft_data(c, d2);
    if (!pre1.ok() || !pre2.ok())
        throw PreconditionViolated("action_independence_check needs verified cocleft data");
    Report report;
    CrossedExtraction e1 = crossed_from_cocleft(c, d1);
    CrossedExtraction e2 = crossed_from_cocleft(c, d2);
    std::size_t n = c.group.order();
    for (std::size_t a = 0; a < n; ++a)
        if (e1.action.maps[a] != e2.action.maps[a]) report.add("action-dependence", {a});

    std::size_t e = c.group.identity();
    std::size_t de = c.dims[e];
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t da = c.dims[a];
        Matrix lhs = c.delta(a, e);
        Matrix rhs = tensor_swap(c.field, de, da) *
                     kronecker(e1.action.maps[a], Matrix::identity(c.field, da)) * c.delta(e, a);
        if (lhs != rhs) report.add("exchange-relation", {a});
    }
    return report;
}

Classification classify_h2(const GModuleAlgebra& m, std::uint64_t bound) {
    Classification out;
    std::size_t n = m.group.order();
    const Coalgebra& c = m.coalg;

    for (auto& rows : enumerate_rows(c.field, n * n, c.dim, bound)) {
        auto inv = invert_rows(c, rows);
        if (!inv) continue;
        TwoCochain f{std::move(rows), std::move(*inv)};
        if (is_2cocycle(m, f).ok()) out.cocycles.push_back(std::move(f));
    }

    std::vector<TwoCochain> boundaries;
    for (auto& rows : enumerate_rows(c.field, n, c.dim, bound)) {
        auto inv = invert_rows(c, rows);
        if (!inv) continue;
        OneCochain h{std::move(rows), std::move(*inv)};
        TwoCochain b = delta1(m, h);
        if (std::find(boundaries.begin(), boundaries.end(), b) == boundaries.end())
            boundaries.push_back(b);
        if (is_1cocycle(m, h).ok()) out.one_cocycles.push_back(std::move(h));
    }
    out.coboundary_count = boundaries.size();

    std::vector<bool> assigned(out.cocycles.size(), false);
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < out.cocycles.size(); ++j) {
            if (assigned[j]) continue;
            for (const TwoCochain& b : boundaries) {
                bool match = true;
                for (std::size_t k = 0; k < n * n && match; ++k)
                    match = out.cocycles[j].f[k] == convolve(c, out.cocycles[i].f[k], b.f[k]);
                if (match) {
                    cls.push_back(j);
                    assigned[j] = true;
                    break;
                }
            }
        }
        out.classes.push_back(std::move(cls));
    }

    std::vector<std::vector<Matrix>> b1;
    for (auto& rows : enumerate_rows(c.field, 1, c.dim, bound)) {
        auto inv = invert_rows(c, rows);
        if (!inv) continue;
        std::vector<Matrix> theta(n);
        for (std::size_t a = 0; a < n; ++a)
            theta[a] = convolve(c, m.act(a, rows[0]), (*inv)[0]);
        if (std::find(b1.begin(), b1.end(), theta) == b1.end()) b1.push_back(std::move(theta));
    }
    out.one_coboundary_count = b1.size();
    return out;
}

}  // namespace gcoalg
