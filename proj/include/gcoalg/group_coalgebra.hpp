#pragma once

#include <vector>

#include "gcoalg/coalgebra.hpp"
#include "gcoalg/group.hpp"

namespace gcoalg {

/// A G-coalgebra: one vector space per group element and comultiplications
/// Delta_{a,b}: C_{ab} -> C_a (x) C_b stored as (d_a*d_b x d_ab) matrices,
/// plus the counit on the identity component.
struct GroupCoalgebra {
    Field field;
    FiniteGroup group;
    std::vector<std::size_t> dims;
    std::vector<Matrix> comult;  // index a*order + b
    Matrix counit;               // 1 x d_e

    GroupCoalgebra() = default;
    GroupCoalgebra(Field f, FiniteGroup g, std::vector<std::size_t> d, std::vector<Matrix> delta,
                   Matrix eps);

    const Matrix& delta(std::size_t a, std::size_t b) const {
        return comult[a * group.order() + b];
    }
    Matrix& delta(std::size_t a, std::size_t b) { return comult[a * group.order() + b]; }

    bool operator==(const GroupCoalgebra& o) const;
};

/// Every component equal to c and every Delta_{a,b} equal to c's
/// comultiplication; strong whenever the comultiplication is injective.
GroupCoalgebra cofree(const Coalgebra& c, const FiniteGroup& g);

/// Indexed coassociativity for all triples plus the counit laws per element;
/// failures carry the witnessing elements.
Report verify_group_coalgebra(const GroupCoalgebra& c);

/// The identity component (C_e, Delta_{e,e}, counit) as a plain coalgebra.
Coalgebra component_e(const GroupCoalgebra& c);

struct StrongResult {
    bool strong = false;
    std::vector<std::size_t> witnesses;  // elements (or flattened pairs) where injectivity fails
};

/// Strongness via the diagonal family: rank(Delta_{a, a^-1}) = d_e for
/// every a. Witnesses list each failing a.
StrongResult is_strong(const GroupCoalgebra& c);

/// The full characterization: every Delta_{a,b} injective. Witness entries
/// are flattened pairs a*order + b.
StrongResult strong_via_all_pairs(const GroupCoalgebra& c);

/// The comodule characterization: every coaction of every suspension is
/// injective. Witness entries are flattened pairs (suspension, component).
StrongResult strong_via_suspensions(const GroupCoalgebra& c);

/// A right group comodule over a G-coalgebra: coaction(a, b) realizes
/// rho_{a,b}: M_{ab} -> M_a (x) C_b as an (m_a*d_b x m_ab) matrix.
struct GComodule {
    std::vector<std::size_t> dims;
    std::vector<Matrix> coactions;  // index a*order + b

    const Matrix& rho(std::size_t a, std::size_t b, std::size_t order) const {
        return coactions[a * order + b];
    }

    bool operator==(const GComodule& o) const = default;
};

Report verify_g_comodule(const GroupCoalgebra& c, const GComodule& m);

/// The sigma-suspension: M_a = C_{sigma a}, rho_{a,b} = Delta_{sigma a, b}.
GComodule suspension(const GroupCoalgebra& c, std::size_t sigma);

/// F(M) = (M_e, rho_{e,e}) as a comodule over the identity component.
RightComodule functor_F(const GroupCoalgebra& c, const GComodule& m);

/// G(N): components are the cotensor products N box C_a inside N (x) C_a
/// (inclusion matrices kept), coactions the restrictions of N (x) Delta_{a,b}.
struct CotensorComodule {
    GComodule comodule;
    std::vector<Matrix> inclusions;  // per element: (dim N * d_a x dims[a])
};

CotensorComodule functor_G(const GroupCoalgebra& c, const RightComodule& n);

struct AdjunctionResult {
    Report report;                    // triangle-identity failures
    std::vector<bool> unit_bijective;  // per element
    bool all_units_bijective = false;
};

/// Builds the adjunction unit (corestricted rho_{e,a}) and counit and checks
/// both triangle identities as matrix identities; reports whether every unit
/// component is bijective.
AdjunctionResult adjunction_check(const GroupCoalgebra& c, const GComodule& m);

struct CorestrictionResult {
    Report report;  // pairs (a, b) where the corestricted Delta is not bijective
    bool all_iso = false;
    bool agrees_with_strong = false;
};

/// For every pair (a, b): checks that Delta_{a,b} lands in the cotensor
/// C_a box C_b and corestricts to a bijection onto it.
CorestrictionResult corestriction_iso_check(const GroupCoalgebra& c);

/// Over a strong G-coalgebra a group comodule with one zero component is
/// zero; a violation is reported as a library bug. Throws
/// PreconditionViolated when c is not strong.
Report zero_propagation(const GroupCoalgebra& c, const GComodule& m);

/// G-graded algebra on R_a = (C_{a^-1})*: mult(a, b) maps coordinate columns
/// of R_a (x) R_b to R_{ab}.
struct GradedDualAlgebra {
    Field field;
    FiniteGroup group;
    std::vector<std::size_t> dims;
    std::vector<Matrix> mult;  // index a*order + b: (r_ab x r_a*r_b)
    Matrix unit;               // r_e x 1

    const Matrix& product(std::size_t a, std::size_t b) const {
        return mult[a * group.order() + b];
    }
};

/// The dual graded algebra; multiplication is the transpose of
/// Delta_{b^-1, a^-1} under the Kronecker identification of dual bases.
/// Associativity and the unit laws are verified on construction.
GradedDualAlgebra dual_graded_algebra(const GroupCoalgebra& c);

Report verify_graded_algebra(const GradedDualAlgebra& r);

/// Strongly graded: every component multiplication is surjective.
bool is_strongly_graded(const GradedDualAlgebra& r);

/// A morphism of group comodules: per-element maps f_a: M_a -> N_a.
struct GComoduleMorphism {
    std::vector<Matrix> maps;
};

Report verify_g_morphism(const GroupCoalgebra& c, const GComodule& m, const GComodule& n,
                         const GComoduleMorphism& f);

/// Basis of the space of group-comodule morphisms M -> N.
std::vector<GComoduleMorphism> g_comodule_hom_space(const GroupCoalgebra& c, const GComodule& m,
                                                    const GComodule& n);

/// Kernel/image closure of a morphism: rho_M(K_{ab}) lies in K_a (x) C_b and
/// rho_N(I_{ab}) lies in I_a (x) C_b, checked on generating columns.
Report morphism_closure_check(const GroupCoalgebra& c, const GComodule& m, const GComodule& n,
                              const GComoduleMorphism& f);

}  // namespace gcoalg
