// Writes the fixture library under a target directory. Run from the repo
// root after changing any fixture definition; the io test compares these
// files against their programmatic builders.

#include <array>
#include <iostream>

#include "gcoalg/io.hpp"

using namespace gcoalg;

namespace {

FiniteGroup s3() {
    std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [](const std::array<std::size_t, 3>& f, const std::array<std::size_t, 3>& g) {
        return std::array<std::size_t, 3>{f[g[0]], f[g[1]], f[g[2]]};
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            auto prod = compose(perms[i], perms[j]);
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k] == prod) table[i][j] = k;
        }
    return FiniteGroup::from_table(table);
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    Field f3 = Field::prime(3);
    FiniteGroup z2 = FiniteGroup::cyclic(2);

    save_json_file(dir + "/z2.json", group_to_json(z2));
    save_json_file(dir + "/z3.json", group_to_json(FiniteGroup::cyclic(3)));
    save_json_file(dir + "/s3.json", group_to_json(s3()));

    Coalgebra ground_f3 = Coalgebra::ground(f3);
    Coalgebra c2gl = Coalgebra::group_like(f3, 2);
    save_json_file(dir + "/k_f3.json", coalgebra_to_json(ground_f3));
    save_json_file(dir + "/c2gl.json", coalgebra_to_json(c2gl));

    GroupCoalgebra kg2 = build_kG(f3, z2);
    save_json_file(dir + "/kg2.json", group_coalgebra_to_json(kg2));
    save_json_file(dir + "/ks3.json",
                   group_coalgebra_to_json(build_kG(Field::rationals(), s3())));
    save_json_file(dir + "/c2gl_z2.json", group_coalgebra_to_json(cofree(c2gl, z2)));
    save_json_file(dir + "/smash_c2gl_z2.json",
                   group_coalgebra_to_json(build_smash(cofree(c2gl, z2))));

    // TRUNC: one-dimensional identity component, zero sigma component
    {
        std::vector<Matrix> delta = {Matrix::of_ints(f3, 1, 1, {1}), Matrix::zero(f3, 0, 0),
                                     Matrix::zero(f3, 0, 0), Matrix::zero(f3, 0, 1)};
        GroupCoalgebra trunc(f3, z2, {1, 0}, delta, Matrix::of_ints(f3, 1, 1, {1}));
        save_json_file(dir + "/trunc.json", group_coalgebra_to_json(trunc));
    }

    // CROSSED1 = C2GL x|_eps k<Z2> with the swap action
    WeakAction swap = WeakAction::trivial(c2gl, z2);
    swap.maps[1] = Matrix::of_ints(f3, 2, 2, {0, 1, 1, 0});
    FactorSet trivial_fs = FactorSet::trivial(c2gl, z2);
    GroupCoalgebra crossed1 = build_crossed(c2gl, z2, swap, trivial_fs);
    save_json_file(dir + "/crossed1.json", group_coalgebra_to_json(crossed1));
    save_json_file(dir + "/crossed1_action.json", weak_action_to_json(c2gl, swap));
    save_json_file(dir + "/crossed1_factorset.json", factor_set_to_json(c2gl, z2, trivial_fs));

    // NEG = k x|_f k<Z2> with f(s,s) = -1
    WeakAction trivial_action = WeakAction::trivial(ground_f3, z2);
    FactorSet neg_fs = FactorSet::trivial(ground_f3, z2);
    neg_fs.f[3] = Matrix::of_ints(f3, 1, 1, {2});
    neg_fs.g[3] = Matrix::of_ints(f3, 1, 1, {2});
    GroupCoalgebra neg = build_crossed(ground_f3, z2, trivial_action, neg_fs);
    save_json_file(dir + "/neg.json", group_coalgebra_to_json(neg));
    save_json_file(dir + "/neg_action.json", weak_action_to_json(ground_f3, trivial_action));
    save_json_file(dir + "/neg_factorset.json", factor_set_to_json(ground_f3, z2, neg_fs));

    // cocleft data and morphism families used by the CLI walkthroughs
    Matrix one = Matrix::of_ints(f3, 1, 1, {1});
    PartnerResult neg_partner = solve_convolution_partner(neg, {one, one});
    save_json_file(dir + "/neg_cocleft.json", cocleft_data_to_json(neg, *neg_partner.data));

    Matrix eps2 = Matrix::row_of_ints(f3, {1, 1});
    save_json_file(dir + "/crossed1_eps_family.json",
                   dual_family_to_json(crossed1, {eps2, eps2}));
    save_json_file(dir + "/kg2_u0.json", dual_family_to_json(kg2, {one, one}));
    save_json_file(dir + "/kg2_u1.json",
                   dual_family_to_json(kg2, {one, Matrix::of_ints(f3, 1, 1, {2})}));

    // a non-normalized factor set over k/F3 (constant 2) for the normalize demo
    FactorSet constant2 = FactorSet::trivial(ground_f3, z2);
    for (std::size_t i = 0; i < 4; ++i) {
        constant2.f[i] = Matrix::of_ints(f3, 1, 1, {2});
        constant2.g[i] = Matrix::of_ints(f3, 1, 1, {2});
    }
    save_json_file(dir + "/const2_factorset.json", factor_set_to_json(ground_f3, z2, constant2));

    // the sign 2-cochain and the trivial one, as cohomology inputs
    {
        std::vector<Matrix> rows(4, ground_f3.counit);
        rows[3] = Matrix::of_ints(f3, 1, 1, {2});
        TwoCochain negc = make_two_cochain(ground_f3, rows);
        save_json_file(dir + "/neg_cochain.json", two_cochain_to_json(ground_f3, z2, negc));
        TwoCochain triv = trivial_two_cochain(ground_f3, z2);
        save_json_file(dir + "/trivial_cochain.json", two_cochain_to_json(ground_f3, z2, triv));
    }

    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
