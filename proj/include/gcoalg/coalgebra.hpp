#pragma once

#include <vector>

#include "gcoalg/matrix.hpp"
#include "gcoalg/report.hpp"

namespace gcoalg {

/// A finite-dimensional coalgebra as structure constants: comult is the
/// (d*d x d) matrix whose column j holds Delta(e_j) in tensor coordinates,
/// counit the (1 x d) row of counit values.
struct Coalgebra {
    Field field;
    std::size_t dim = 0;
    Matrix comult;
    Matrix counit;

    Coalgebra() = default;
    Coalgebra(Field f, std::size_t d, Matrix delta, Matrix eps);

    /// The ground field as a one-dimensional coalgebra.
    static Coalgebra ground(const Field& f);
    /// Group-like coalgebra on d basis vectors: Delta(g_i) = g_i (x) g_i,
    /// counit(g_i) = 1.
    static Coalgebra group_like(const Field& f, std::size_t d);
    /// Comatrix coalgebra on n x n basis e_ij: Delta(e_ij) = sum_k e_ik (x) e_kj.
    static Coalgebra comatrix(const Field& f, std::size_t n);

    bool operator==(const Coalgebra& o) const = default;
};

/// Checks coassociativity and both counit laws; failures carry a witness
/// basis index.
Report verify_coalgebra(const Coalgebra& c);

bool is_cocommutative(const Coalgebra& c);

/// Unital associative algebra as structure constants: mult is (d x d*d)
/// acting on coordinate columns of x (x) y, unit a (d x 1) column.
struct DualAlgebra {
    Field field;
    std::size_t dim = 0;
    Matrix mult;
    Matrix unit;
};

/// Convolution algebra on C*: product of functionals u, v is (u (x) v) o Delta.
/// Associativity and the unit laws hold by coassociativity/counit of c.
DualAlgebra dual_algebra(const Coalgebra& c);

/// Associativity and unit laws of an algebra structure, as matrix identities.
Report verify_algebra(const DualAlgebra& a);

/// Functionals on C are (1 x d) coordinate rows throughout.
Matrix convolve(const Coalgebra& c, const Matrix& u, const Matrix& v);

/// Convolution inverse: solves the left-inverse system in the dual algebra
/// and checks two-sidedness. nullopt when no inverse exists.
std::optional<Matrix> convolution_inverse(const Coalgebra& c, const Matrix& u);

/// Right comodule over a coalgebra: coaction rho: M -> M (x) C as an
/// (m*d x m) matrix.
struct RightComodule {
    std::size_t dim = 0;
    Matrix coaction;

    /// C over itself via Delta.
    static RightComodule regular(const Coalgebra& c) { return {c.dim, c.comult}; }
};

/// Left comodule: coaction lambda: M -> C (x) M as a (d*m x m) matrix.
struct LeftComodule {
    std::size_t dim = 0;
    Matrix coaction;

    static LeftComodule regular(const Coalgebra& c) { return {c.dim, c.comult}; }
};

Report verify_right_comodule(const Coalgebra& c, const RightComodule& m);
Report verify_left_comodule(const Coalgebra& c, const LeftComodule& m);

/// Cotensor product N box M inside N (x) M: the inclusion matrix
/// (dim N * dim M x k) whose columns are the canonical kernel basis of
/// rho_N (x) M - N (x) lambda_M.
Matrix cotensor(const Coalgebra& c, const RightComodule& n, const LeftComodule& m);

/// Basis of the space of right-colinear maps M -> N, each as an
/// (dim N x dim M) matrix.
std::vector<Matrix> comodule_hom_space(const Coalgebra& c, const RightComodule& m,
                                       const RightComodule& n);

}  // namespace gcoalg
