#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "gcoalg/cohomology.hpp"
#include "gcoalg/smash.hpp"

namespace gcoalg {

using nlohmann::json;

/// Structure-constant matrices serialize as flat arrays in column-major
/// order (column j = image of basis vector j); scalars as strings. Shapes
/// are implied by the surrounding object and checked on load.
json matrix_to_flat(const Matrix& m);
Matrix matrix_from_flat(const Field& f, std::size_t rows, std::size_t cols, const json& j);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j);  // verified; ValidationError on failure

json group_coalgebra_to_json(const GroupCoalgebra& c);
GroupCoalgebra group_coalgebra_from_json(const json& j);

json g_comodule_to_json(const GroupCoalgebra& base, const GComodule& m);
GComodule g_comodule_from_json(const GroupCoalgebra& base, const json& j);

json smash_comodule_to_json(const GroupCoalgebra& base, const SmashComodule& m,
                            const std::string& base_name = "");
SmashComodule smash_comodule_from_json(const GroupCoalgebra& base, const json& j);

json weak_action_to_json(const Coalgebra& c, const WeakAction& a);
WeakAction weak_action_from_json(const Coalgebra& c, const json& j);

json factor_set_to_json(const Coalgebra& c, const FiniteGroup& g, const FactorSet& f);
FactorSet factor_set_from_json(const Coalgebra& c, const FiniteGroup& g, const json& j);

json cocleft_data_to_json(const GroupCoalgebra& base, const CocleftData& d);
CocleftData cocleft_data_from_json(const GroupCoalgebra& base, const json& j);

/// A bare family of functionals u_a on C_a (morphism candidates).
json dual_family_to_json(const GroupCoalgebra& base, const std::vector<Matrix>& u);
std::vector<Matrix> dual_family_from_json(const GroupCoalgebra& base, const json& j);

json one_cochain_to_json(const Coalgebra& c, const FiniteGroup& g, const OneCochain& h);
OneCochain one_cochain_from_json(const Coalgebra& c, const FiniteGroup& g, const json& j);

json two_cochain_to_json(const Coalgebra& c, const FiniteGroup& g, const TwoCochain& f);
TwoCochain two_cochain_from_json(const Coalgebra& c, const FiniteGroup& g, const json& j);

json graded_dual_to_json(const GradedDualAlgebra& r);

json report_to_json(const Report& r);

json load_json_file(const std::string& path);  // ParseError on bad syntax or missing file
void save_json_file(const std::string& path, const json& j);

/// Loads and caches named objects, runs each module's verifier before
/// handing an object out, and insists that every scalar-carrying object in
/// one computation lives over the same field.
class Workspace {
  public:
    FiniteGroup group(const std::string& path);
    Coalgebra coalgebra(const std::string& path);
    GroupCoalgebra group_coalgebra(const std::string& path);
    GComodule g_comodule(const std::string& path, const GroupCoalgebra& base);
    SmashComodule smash_comodule(const std::string& path, const GroupCoalgebra& base);
    WeakAction weak_action(const std::string& path, const Coalgebra& c);
    FactorSet factor_set(const std::string& path, const Coalgebra& c, const FiniteGroup& g);
    CocleftData cocleft_data(const std::string& path, const GroupCoalgebra& base);
    std::vector<Matrix> dual_family(const std::string& path, const GroupCoalgebra& base);
    TwoCochain two_cochain(const std::string& path, const Coalgebra& c, const FiniteGroup& g);

  private:
    const json& raw(const std::string& path, const std::string& expected_kind);
    void note_field(const Field& f);

    std::map<std::string, json> cache_;
    std::optional<Field> field_;
};

}  // namespace gcoalg
