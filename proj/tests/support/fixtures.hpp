#pragma once

#include <cstdint>
#include <random>

#include "gcoalg/group_coalgebra.hpp"

namespace gcoalg::fixtures {

inline Field f3() { return Field::prime(3); }
inline Field f5() { return Field::prime(5); }

/// Symmetric group on three letters; table generated from permutation
/// composition (fg)(x) = f(g(x)).
FiniteGroup s3();

/// Two-dimensional group-like coalgebra (basis g1, g2) over the given field.
Coalgebra c2gl(const Field& f = f3());

/// k<Z2> over F3: every component one-dimensional, every Delta the identity.
GroupCoalgebra kg2();

/// k<S3> over Q.
GroupCoalgebra ks3();

/// cofree(C2GL, Z2) over F3.
GroupCoalgebra c2gl_z2();

/// C_e one-dimensional group-like over F3, C_sigma = 0; passes the axioms
/// but is not strong.
GroupCoalgebra trunc();

/// C2GL x|_eps k<Z2> with the swap action and trivial factor set (a smash
/// coproduct in disguise).
GroupCoalgebra crossed1();

/// k x|_f k<Z2> over F3 with f(sigma, sigma) = -1: strong, cocleft, but not
/// of smash type.
GroupCoalgebra neg();

/// All seven fixtures in the order used by the acceptance suite.
std::vector<std::pair<std::string, GroupCoalgebra>> all();

/// Deterministic pseudo-random group comodule over a strong base: a
/// suspension conjugated by random invertible component maps.
GComodule random_comodule(const GroupCoalgebra& c, std::mt19937_64& rng);

/// Random strong group coalgebra over F5 for round-trip tests: cofree over a
/// group-like coalgebra of dimension 1..3, G in {Z2, Z3}.
GroupCoalgebra random_strong_base(std::mt19937_64& rng);

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng);

}  // namespace gcoalg::fixtures
