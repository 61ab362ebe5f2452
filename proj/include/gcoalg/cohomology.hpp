#pragma once

#include "gcoalg/crossed.hpp"

namespace gcoalg {

/// The convolution algebra of a cocommutative coalgebra with the left
/// G-action <a.f, c> = <f, c.a> transported from a right G-action on C.
struct GModuleAlgebra {
    Coalgebra coalg;
    FiniteGroup group;
    std::vector<Matrix> action;  // right action on C: one (d x d) map per element

    /// a.f for a functional row f.
    Matrix act(std::size_t a, const Matrix& f) const { return f * action[a]; }
};

/// Requires cocommutativity (NotCocommutative otherwise) and verifies that
/// the maps form a right G-action by coalgebra morphisms: lambda_e = id and
/// lambda_{ab} = lambda_b o lambda_a.
Report check_right_g_action(const Coalgebra& c, const FiniteGroup& g, const WeakAction& action);

/// Validated bundle; throws on a failing action.
GModuleAlgebra g_module_algebra(const Coalgebra& c, const FiniteGroup& g, const WeakAction& action);

/// A 1-cochain: per-element convolution-invertible functionals with their
/// inverses stored.
struct OneCochain {
    std::vector<Matrix> h;
    std::vector<Matrix> hinv;

    bool operator==(const OneCochain& o) const { return h == o.h; }
};

/// Computes and stores the inverses; throws Error when some component is not
/// convolution invertible.
OneCochain make_one_cochain(const Coalgebra& c, std::vector<Matrix> h);

OneCochain trivial_one_cochain(const Coalgebra& c, const FiniteGroup& g);

/// A 2-cochain: per-pair convolution-invertible functionals with inverses.
struct TwoCochain {
    std::vector<Matrix> f;  // index a*order + b
    std::vector<Matrix> finv;

    const Matrix& at(std::size_t a, std::size_t b, std::size_t order) const {
        return f[a * order + b];
    }
    bool operator==(const TwoCochain& o) const { return f == o.f; }
};

TwoCochain make_two_cochain(const Coalgebra& c, std::vector<Matrix> f);
TwoCochain trivial_two_cochain(const Coalgebra& c, const FiniteGroup& g);

/// Factor sets and 2-cochains share their layout.
TwoCochain to_two_cochain(const FactorSet& fset);
FactorSet to_factor_set(const TwoCochain& f);

/// (a.f_{b,g}) * f_{a,bg} = f_{a,b} * f_{ab,g} for all triples.
Report is_2cocycle(const GModuleAlgebra& m, const TwoCochain& f);

/// (a.th_b) * th_a = th_{ab} for all pairs.
Report is_1cocycle(const GModuleAlgebra& m, const OneCochain& theta);

/// The coboundary delta1(h)_{a,b} = h_a * h^-1_{ab} * (a.h_b); always a
/// 2-cocycle.
TwoCochain delta1(const GModuleAlgebra& m, const OneCochain& h);

struct CohomologousResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<OneCochain> witness;  // h with f = f2 * delta1(h), when yes
};

/// Same class in H^2: exhaustive search for the witness over prime fields
/// within the bound; over the rationals only the direct f = f2 certificate
/// is attempted, anything else is inconclusive (never reported negative).
CohomologousResult cohomologous(const GModuleAlgebra& m, const TwoCochain& f, const TwoCochain& f2,
                                const SearchPolicy& policy = {});

struct IsoCriterionResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<OneCochain> witness;
    std::vector<Matrix> iso;  // per element, when constructed
    bool iso_verified = false;
};

/// Isomorphism criterion for crossed coproducts: decides [f] = [f2 o phi]
/// via cohomologous and on success assembles the componentwise isomorphism
/// phi_b = (phi (x) h'_b) o Delta, verified against the built crossed
/// coproducts. phi must be a coalgebra automorphism.
IsoCriterionResult crossed_iso_criterion(const GModuleAlgebra& m, const TwoCochain& f,
                                         const TwoCochain& f2, const Matrix& phi,
                                         const SearchPolicy& policy = {});

/// The componentwise maps u_a on C_a forming a G-coalgebra morphism to k<G>.
Report verify_kg_morphism(const GroupCoalgebra& c, const std::vector<Matrix>& u);

/// Module-algebra structure induced on the identity component by a morphism
/// family (the action extracted from the cocleft data (u, u o inv)).
GModuleAlgebra omega_module_algebra(const GroupCoalgebra& c, const std::vector<Matrix>& u0);

/// theta_a(c) = u_a(c_(1,a)) u0_{a^-1}(c_(2,a^-1)); a 1-cocycle for the
/// basepoint action.
OneCochain theta_from_morphisms(const GroupCoalgebra& c, const std::vector<Matrix>& u,
                                const std::vector<Matrix>& u0);

/// u_a(c) = theta_a(c_(1,e)) u0_a(c_(2,a)); inverse to theta_from_morphisms.
std::vector<Matrix> morphism_from_theta(const GroupCoalgebra& c, const std::vector<Matrix>& u0,
                                        const OneCochain& theta);

struct OmegaEquivalenceResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Matrix> witness;  // the intertwining invertible functional
};

/// Equivalence of morphism families: existence of a convolution-invertible
/// f on the identity component with f(c_(1,e)) u_a(c_(2,a)) =
/// u2_a(c_(1,a)) f(c_(2,e)); linear in f, so the solution space is searched
/// for an invertible element.
OmegaEquivalenceResult omega_equivalence(const GroupCoalgebra& c, const std::vector<Matrix>& u,
                                         const std::vector<Matrix>& u2,
                                         const SearchPolicy& policy = {});

/// The extracted actions of two cocleavings coincide, and the cocommutative
/// exchange relation c_(1,a) (x) c_(2,e) = c_(2,a) (x) c_(1,e).a holds.
Report action_independence_check(const GroupCoalgebra& c, const CocleftData& d1,
                                 const CocleftData& d2);

struct Classification {
    std::vector<TwoCochain> cocycles;               // Z^2
    std::vector<std::vector<std::size_t>> classes;  // H^2 as index sets into cocycles
    std::size_t coboundary_count = 0;               // |B^2|
    std::vector<OneCochain> one_cocycles;           // Z^1
    std::size_t one_coboundary_count = 0;           // |B^1|
};

/// Exhaustive classification over a prime field: enumerates all invertible
/// cochains within the bound. Throws Error when the space is too large or
/// the field is not prime.
Classification classify_h2(const GModuleAlgebra& m, std::uint64_t bound = 1'000'000);

}  // namespace gcoalg
