#pragma once

#include "gcoalg/group_coalgebra.hpp"

namespace gcoalg {

/// The smash coproduct C x| kG: component a is C_a (x) kG with basis
/// (i, s) -> i*|G| + s, comultiplication
///   Delta_{a,b}(c x| s) = (c_(1,a) x| b s) (x) (c_(2,b) x| s),
/// counit (c x| s) -> counit(c).
GroupCoalgebra build_smash(const GroupCoalgebra& c);

/// A right comodule over the smash coproduct of a base G-coalgebra, all
/// group components at once: coactions[b] realizes
/// rho_b: M -> M (x) (C_b x| kG) as an (m * d_b * |G| x m) matrix.
struct SmashComodule {
    std::size_t dim = 0;
    std::vector<Matrix> coactions;

    bool operator==(const SmashComodule& o) const = default;
};

/// Counit law and the defining square
///   (M (x) Delta_{a,b}) o rho_{ab} = (rho_a (x) (C_b x| kG)) o rho_b.
Report verify_smash_comodule(const GroupCoalgebra& base, const SmashComodule& m);

/// Total space sum_a M_a with rho_b(m) = m_[0, s b^-1] (x) (m_[1,b] x| s^-1)
/// for m in the grade-s summand.
SmashComodule to_smash_comodule(const GroupCoalgebra& base, const GComodule& m);

/// Grade projections computed from the kG-coaction (M (x) p_e) o rho_e with
/// p_e(c x| s) = counit(c) s^-1: m sits in grade s iff rho_e(m) is tagged
/// s^-1. Throws NotGradable when the projections do not sum to the identity.
std::vector<Matrix> grade_decomposition(const GroupCoalgebra& base, const SmashComodule& m);

/// Inverse of to_smash_comodule: grades the total space, asserts the support
/// claims (each rho_b maps grade ab into grade a tagged (ab)^-1; throws
/// SupportViolation otherwise) and strips the group tag to recover the
/// group-comodule coactions. The component bases are the canonical column
/// bases of the grade projections.
GComodule from_smash_comodule(const GroupCoalgebra& base, const SmashComodule& m);

struct FPrimeGPrimeResult {
    bool counit_iso = false;        // F'(G'(N)) ~ N via the counit
    std::vector<bool> unit_bijective;  // per suspension, through the smash picture
    bool strong_equivalent = false;    // all units bijective
    Report report;
};

/// The induced adjunction between comodules over the smash coproduct and
/// comodules over the identity component: builds G'(N) on sum_a N box C_a,
/// applies F' (the grade-e part) and checks the counit isomorphism onto N;
/// unit bijectivity is evaluated across the suspension family, where it
/// holds for every suspension exactly when the base is strong.
FPrimeGPrimeResult fprime_gprime_check(const GroupCoalgebra& base, const RightComodule& n);

}  // namespace gcoalg
