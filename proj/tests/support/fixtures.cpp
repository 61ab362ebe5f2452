#include "fixtures.hpp"

#include <array>

namespace gcoalg::fixtures {

namespace {

std::array<std::size_t, 3> compose(const std::array<std::size_t, 3>& f,
                                   const std::array<std::size_t, 3>& g) {
    return {f[g[0]], f[g[1]], f[g[2]]};
}

}  // namespace

FiniteGroup s3() {
    // e, (12), (13), (23), (123), (132) as images of the points 0,1,2
    std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            auto prod = compose(perms[i], perms[j]);
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k] == prod) table[i][j] = k;
        }
    return FiniteGroup::from_table(table);
}

Coalgebra c2gl(const Field& f) { return Coalgebra::group_like(f, 2); }

GroupCoalgebra kg2() { return cofree(Coalgebra::ground(f3()), FiniteGroup::cyclic(2)); }

GroupCoalgebra ks3() { return cofree(Coalgebra::ground(Field::rationals()), s3()); }

GroupCoalgebra c2gl_z2() { return cofree(c2gl(), FiniteGroup::cyclic(2)); }

GroupCoalgebra trunc() {
    Field f = f3();
    std::vector<std::size_t> dims = {1, 0};
    std::vector<Matrix> delta = {
        Matrix::of_ints(f, 1, 1, {1}),  // (e,e)
        Matrix::zero(f, 0, 0),          // (e,s)
        Matrix::zero(f, 0, 0),          // (s,e)
        Matrix::zero(f, 0, 1),          // (s,s)
    };
    return GroupCoalgebra(f, FiniteGroup::cyclic(2), dims, delta, Matrix::of_ints(f, 1, 1, {1}));
}

GroupCoalgebra crossed1() {
    Field f = f3();
    // delta_{a,b}(g_i) = g_i (x) lambda_a(g_i) with lambda_e = id, lambda_s = swap
    Matrix d_id = Matrix::of_ints(f, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
    Matrix d_swap = Matrix::of_ints(f, 4, 2, {0, 0, 1, 0, 0, 1, 0, 0});
    std::vector<Matrix> delta = {d_id, d_id, d_swap, d_swap};
    return GroupCoalgebra(f, FiniteGroup::cyclic(2), {2, 2}, delta,
                          Matrix::row_of_ints(f, {1, 1}));
}

GroupCoalgebra neg() {
    Field f = f3();
    Matrix one = Matrix::of_ints(f, 1, 1, {1});
    Matrix minus_one = Matrix::of_ints(f, 1, 1, {2});
    std::vector<Matrix> delta = {one, one, one, minus_one};
    return GroupCoalgebra(f, FiniteGroup::cyclic(2), {1, 1}, delta, one);
}

std::vector<std::pair<std::string, GroupCoalgebra>> all() {
    return {{"KG2", kg2()},           {"kS3", ks3()},   {"C2GL<Z2>", c2gl_z2()},
            {"CROSSED1", crossed1()}, {"NEG", neg()},   {"TRUNC", trunc()}};
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
    if (n == 0) return Matrix::zero(f, 0, 0);
    std::uint64_t p = f.is_prime_field() ? f.modulus() : 11;
    while (true) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Scalar::of_int(f, static_cast<long>(rng() % p));
        if (rank(m) == n) return m;
    }
}

GroupCoalgebra random_strong_base(std::mt19937_64& rng) {
    std::size_t dim = 1 + rng() % 3;
    FiniteGroup g = FiniteGroup::cyclic(2 + rng() % 2);
    return cofree(Coalgebra::group_like(f5(), dim), g);
}

GComodule random_comodule(const GroupCoalgebra& c, std::mt19937_64& rng) {
    std::size_t ord = c.group.order();
    GComodule m = suspension(c, rng() % ord);
    std::vector<Matrix> u(ord), u_inv(ord);
    for (std::size_t a = 0; a < ord; ++a) {
        u[a] = random_invertible(c.field, m.dims[a], rng);
        u_inv[a] = *inverse(u[a]);
    }
    GComodule twisted = m;
    for (std::size_t a = 0; a < ord; ++a)
        for (std::size_t b = 0; b < ord; ++b) {
            std::size_t ab = c.group.mul(a, b);
            twisted.coactions[a * ord + b] =
                kronecker(u[a], Matrix::identity(c.field, c.dims[b])) * m.rho(a, b, ord) * u_inv[ab];
        }
    return twisted;
}

}  // namespace gcoalg::fixtures
