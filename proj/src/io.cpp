#include "gcoalg/io.hpp"

#include <fstream>

namespace gcoalg {

namespace {

std::string pair_key(std::size_t a, std::size_t b) {
    return std::to_string(a) + "," + std::to_string(b);
}

std::string elem_key(std::size_t a) { return std::to_string(a); }

Scalar scalar_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) return Scalar::of_int(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

const json& expect(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

void expect_kind(const json& j, const std::string& kind) {
    if (j.contains("kind") && j.at("kind").get<std::string>() != kind)
        throw ParseError("expected kind \"" + kind + "\" but found \"" +
                         j.at("kind").get<std::string>() + "\"");
}

void check_report(const Report& report, const std::string& what) {
    if (!report.ok())
        throw ValidationError(what + " fails verification: " + report.summary(), report);
}

// per-element counts {"0": d0, ...}
std::vector<std::size_t> dims_from_json(const json& j, std::size_t order) {
    std::vector<std::size_t> dims(order, 0);
    for (std::size_t a = 0; a < order; ++a) dims[a] = expect(j, elem_key(a).c_str()).get<std::size_t>();
    return dims;
}

json dims_to_json(const std::vector<std::size_t>& dims) {
    json j = json::object();
    for (std::size_t a = 0; a < dims.size(); ++a) j[elem_key(a)] = dims[a];
    return j;
}

}  // namespace

json matrix_to_flat(const Matrix& m) {
    json out = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.at(i, j).str());
    return out;
}

Matrix matrix_from_flat(const Field& f, std::size_t rows, std::size_t cols, const json& j) {
    if (!j.is_array() || j.size() != rows * cols)
        throw ParseError("expected " + std::to_string(rows * cols) + " matrix entries, got " +
                         std::to_string(j.size()));
    Matrix m(f, rows, cols);
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols; ++col)
        for (std::size_t row = 0; row < rows; ++row) m.at(row, col) = scalar_from_json(f, j[k++]);
    return m;
}

json field_to_json(const Field& f) { return f.name(); }

Field field_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("field spec must be a string like \"Q\" or \"F3\"");
    return Field::parse(j.get<std::string>());
}

json group_to_json(const FiniteGroup& g) {
    return {{"kind", "finite_group"}, {"order", g.order()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const json& j) {
    expect_kind(j, "finite_group");
    auto table = expect(j, "table").get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        throw ParseError("declared order does not match the table");
    try {
        return FiniteGroup::from_table(table);
    } catch (const NotAGroup& e) {
        throw ValidationError(std::string("not a group: ") + e.what());
    }
}

json coalgebra_to_json(const Coalgebra& c) {
    return {{"kind", "coalgebra"},
            {"field", field_to_json(c.field)},
            {"dim", c.dim},
            {"comult", matrix_to_flat(c.comult)},
            {"counit", matrix_to_flat(c.counit)}};
}

Coalgebra coalgebra_from_json(const json& j) {
    expect_kind(j, "coalgebra");
    Field f = field_from_json(expect(j, "field"));
    std::size_t d = expect(j, "dim").get<std::size_t>();
    Coalgebra c(f, d, matrix_from_flat(f, d * d, d, expect(j, "comult")),
                matrix_from_flat(f, 1, d, expect(j, "counit")));
    check_report(verify_coalgebra(c), "coalgebra");
    return c;
}

json group_coalgebra_to_json(const GroupCoalgebra& c) {
    std::size_t n = c.group.order();
    json comult = json::object();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) comult[pair_key(a, b)] = matrix_to_flat(c.delta(a, b));
    return {{"kind", "group_coalgebra"}, {"field", field_to_json(c.field)},
            {"group", group_to_json(c.group)}, {"dims", dims_to_json(c.dims)},
            {"comult", comult},               {"counit", matrix_to_flat(c.counit)}};
}

GroupCoalgebra group_coalgebra_from_json(const json& j) {
    expect_kind(j, "group_coalgebra");
    Field f = field_from_json(expect(j, "field"));
    FiniteGroup g = group_from_json(expect(j, "group"));
    std::size_t n = g.order();
    std::vector<std::size_t> dims = dims_from_json(expect(j, "dims"), n);
    const json& comult = expect(j, "comult");
    std::vector<Matrix> delta(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            delta[a * n + b] = matrix_from_flat(f, dims[a] * dims[b], dims[g.mul(a, b)],
                                                expect(comult, pair_key(a, b).c_str()));
    GroupCoalgebra c(f, g, dims, delta,
                     matrix_from_flat(f, 1, dims[g.identity()], expect(j, "counit")));
    check_report(verify_group_coalgebra(c), "group coalgebra");
    return c;
}

json g_comodule_to_json(const GroupCoalgebra& base, const GComodule& m) {
    std::size_t n = base.group.order();
    json coaction = json::object();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            coaction[pair_key(a, b)] = matrix_to_flat(m.rho(a, b, n));
    return {{"kind", "g_comodule"},
            {"field", field_to_json(base.field)},
            {"dims", dims_to_json(m.dims)},
            {"coaction", coaction}};
}

GComodule g_comodule_from_json(const GroupCoalgebra& base, const json& j) {
    expect_kind(j, "g_comodule");
    Field f = field_from_json(expect(j, "field"));
    if (f != base.field) throw ValidationError("comodule field disagrees with its base");
    std::size_t n = base.group.order();
    GComodule m;
    m.dims = dims_from_json(expect(j, "dims"), n);
    m.coactions.resize(n * n);
    const json& coaction = expect(j, "coaction");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m.coactions[a * n + b] =
                matrix_from_flat(f, m.dims[a] * base.dims[b], m.dims[base.group.mul(a, b)],
                                 expect(coaction, pair_key(a, b).c_str()));
    check_report(verify_g_comodule(base, m), "group comodule");
    return m;
}

json smash_comodule_to_json(const GroupCoalgebra& base, const SmashComodule& m,
                            const std::string& base_name) {
    std::size_t n = base.group.order();
    json coactions = json::object();
    for (std::size_t b = 0; b < n; ++b) coactions[elem_key(b)] = matrix_to_flat(m.coactions[b]);
    json out = {{"kind", "smash_comodule"},
                {"field", field_to_json(base.field)},
                {"dim", m.dim},
                {"coactions", coactions}};
    if (!base_name.empty()) out["base"] = base_name;
    return out;
}

SmashComodule smash_comodule_from_json(const GroupCoalgebra& base, const json& j) {
    expect_kind(j, "smash_comodule");
    Field f = field_from_json(expect(j, "field"));
    if (f != base.field) throw ValidationError("smash comodule field disagrees with its base");
    std::size_t n = base.group.order();
    SmashComodule m;
    m.dim = expect(j, "dim").get<std::size_t>();
    m.coactions.resize(n);
    const json& coactions = expect(j, "coactions");
    for (std::size_t b = 0; b < n; ++b)
        m.coactions[b] = matrix_from_flat(f, m.dim * base.dims[b] * n, m.dim,
                                          expect(coactions, elem_key(b).c_str()));
    check_report(verify_smash_comodule(base, m), "smash comodule");
    return m;
}

json weak_action_to_json(const Coalgebra& c, const WeakAction& a) {
    json maps = json::object();
    for (std::size_t i = 0; i < a.maps.size(); ++i) maps[elem_key(i)] = matrix_to_flat(a.maps[i]);
    return {{"kind", "weak_action"},
            {"field", field_to_json(c.field)},
            {"dim", c.dim},
            {"maps", maps}};
}

WeakAction weak_action_from_json(const Coalgebra& c, const json& j) {
    expect_kind(j, "weak_action");
    Field f = field_from_json(expect(j, "field"));
    if (f != c.field) throw ValidationError("action field disagrees with the coalgebra");
    const json& maps = expect(j, "maps");
    WeakAction a;
    for (std::size_t i = 0; i < maps.size(); ++i)
        a.maps.push_back(matrix_from_flat(f, c.dim, c.dim, expect(maps, elem_key(i).c_str())));
    check_report(verify_weak_action(c, a), "weak action");
    return a;
}

json factor_set_to_json(const Coalgebra& c, const FiniteGroup& g, const FactorSet& fset) {
    std::size_t n = g.order();
    json f = json::object(), ginv = json::object();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            f[pair_key(a, b)] = matrix_to_flat(fset.at(a, b, n));
            ginv[pair_key(a, b)] = matrix_to_flat(fset.inv_at(a, b, n));
        }
    return {{"kind", "factor_set"},
            {"field", field_to_json(c.field)},
            {"dim", c.dim},
            {"f", f},
            {"g", ginv}};
}

FactorSet factor_set_from_json(const Coalgebra& c, const FiniteGroup& g, const json& j) {
    expect_kind(j, "factor_set");
    Field f = field_from_json(expect(j, "field"));
    if (f != c.field) throw ValidationError("factor set field disagrees with the coalgebra");
    std::size_t n = g.order();
    FactorSet out;
    out.f.resize(n * n);
    out.g.resize(n * n);
    const json& jf = expect(j, "f");
    const json& jg = expect(j, "g");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            out.f[a * n + b] = matrix_from_flat(f, 1, c.dim, expect(jf, pair_key(a, b).c_str()));
            out.g[a * n + b] = matrix_from_flat(f, 1, c.dim, expect(jg, pair_key(a, b).c_str()));
        }
    check_report(verify_factor_set(c, out), "factor set");
    return out;
}

json cocleft_data_to_json(const GroupCoalgebra& base, const CocleftData& d) {
    std::size_t n = base.group.order();
    json u = json::object(), v = json::object();
    for (std::size_t a = 0; a < n; ++a) {
        u[elem_key(a)] = matrix_to_flat(d.u[a]);
        v[elem_key(a)] = matrix_to_flat(d.v[a]);
    }
    return {{"kind", "cocleft_data"}, {"field", field_to_json(base.field)}, {"u", u}, {"v", v}};
}

CocleftData cocleft_data_from_json(const GroupCoalgebra& base, const json& j) {
    expect_kind(j, "cocleft_data");
    Field f = field_from_json(expect(j, "field"));
    if (f != base.field) throw ValidationError("cocleft data field disagrees with its base");
    std::size_t n = base.group.order();
    CocleftData d;
    d.u.resize(n);
    d.v.resize(n);
    const json& ju = expect(j, "u");
    const json& jv = expect(j, "v");
    for (std::size_t a = 0; a < n; ++a) {
        d.u[a] = matrix_from_flat(f, 1, base.dims[a], expect(ju, elem_key(a).c_str()));
        d.v[a] =
            matrix_from_flat(f, 1, base.dims[base.group.inv(a)], expect(jv, elem_key(a).c_str()));
    }
    check_report(verify_cocleft_data(base, d), "cocleft data");
    return d;
}

json dual_family_to_json(const GroupCoalgebra& base, const std::vector<Matrix>& u) {
    json maps = json::object();
    for (std::size_t a = 0; a < u.size(); ++a) maps[elem_key(a)] = matrix_to_flat(u[a]);
    return {{"kind", "dual_family"}, {"field", field_to_json(base.field)}, {"maps", maps}};
}

std::vector<Matrix> dual_family_from_json(const GroupCoalgebra& base, const json& j) {
    expect_kind(j, "dual_family");
    Field f = field_from_json(expect(j, "field"));
    if (f != base.field) throw ValidationError("dual family field disagrees with its base");
    std::size_t n = base.group.order();
    std::vector<Matrix> u(n);
    const json& maps = expect(j, "maps");
    for (std::size_t a = 0; a < n; ++a)
        u[a] = matrix_from_flat(f, 1, base.dims[a], expect(maps, elem_key(a).c_str()));
    return u;
}

json one_cochain_to_json(const Coalgebra& c, const FiniteGroup& g, const OneCochain& h) {
    json jh = json::object(), jinv = json::object();
    for (std::size_t a = 0; a < g.order(); ++a) {
        jh[elem_key(a)] = matrix_to_flat(h.h[a]);
        jinv[elem_key(a)] = matrix_to_flat(h.hinv[a]);
    }
    return {{"kind", "one_cochain"}, {"field", field_to_json(c.field)},
            {"dim", c.dim},          {"h", jh},
            {"hinv", jinv}};
}

OneCochain one_cochain_from_json(const Coalgebra& c, const FiniteGroup& g, const json& j) {
    expect_kind(j, "one_cochain");
    Field f = field_from_json(expect(j, "field"));
    if (f != c.field) throw ValidationError("cochain field disagrees with the coalgebra");
    std::vector<Matrix> h(g.order());
    const json& jh = expect(j, "h");
    for (std::size_t a = 0; a < g.order(); ++a)
        h[a] = matrix_from_flat(f, 1, c.dim, expect(jh, elem_key(a).c_str()));
    OneCochain out = make_one_cochain(c, std::move(h));
    if (j.contains("hinv")) {
        for (std::size_t a = 0; a < g.order(); ++a) {
            Matrix declared =
                matrix_from_flat(f, 1, c.dim, expect(j.at("hinv"), elem_key(a).c_str()));
            if (convolve(c, out.h[a], declared) != c.counit)
                throw ValidationError("declared cochain inverse is wrong at " + elem_key(a));
        }
    }
    return out;
}

json two_cochain_to_json(const Coalgebra& c, const FiniteGroup& g, const TwoCochain& f) {
    std::size_t n = g.order();
    json jf = json::object(), jinv = json::object();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            jf[pair_key(a, b)] = matrix_to_flat(f.at(a, b, n));
            jinv[pair_key(a, b)] = matrix_to_flat(f.finv[a * n + b]);
        }
    return {{"kind", "two_cochain"}, {"field", field_to_json(c.field)},
            {"dim", c.dim},          {"f", jf},
            {"finv", jinv}};
}

TwoCochain two_cochain_from_json(const Coalgebra& c, const FiniteGroup& g, const json& j) {
    expect_kind(j, "two_cochain");
    Field f = field_from_json(expect(j, "field"));
    if (f != c.field) throw ValidationError("cochain field disagrees with the coalgebra");
    std::size_t n = g.order();
    std::vector<Matrix> rows(n * n);
    const json& jf = expect(j, "f");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            rows[a * n + b] = matrix_from_flat(f, 1, c.dim, expect(jf, pair_key(a, b).c_str()));
    return make_two_cochain(c, std::move(rows));
}

json graded_dual_to_json(const GradedDualAlgebra& r) {
    std::size_t n = r.group.order();
    json mult = json::object();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mult[pair_key(a, b)] = matrix_to_flat(r.product(a, b));
    return {{"kind", "graded_dual_algebra"},
            {"field", field_to_json(r.field)},
            {"group", group_to_json(r.group)},
            {"dims", dims_to_json(r.dims)},
            {"mult", mult},
            {"unit", matrix_to_flat(r.unit)},
            {"strongly_graded", is_strongly_graded(r)}};
}

json report_to_json(const Report& r) {
    json issues = json::array();
    for (const auto& issue : r.issues)
        issues.push_back({{"check", issue.check}, {"where", issue.where}, {"detail", issue.detail}});
    return {{"ok", r.ok()}, {"issues", issues}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

const json& Workspace::raw(const std::string& path, const std::string& expected_kind) {
    auto it = cache_.find(path);
    if (it == cache_.end()) it = cache_.emplace(path, load_json_file(path)).first;
    if (!expected_kind.empty() && it->second.contains("kind") &&
        it->second.at("kind").get<std::string>() != expected_kind)
        throw ParseError(path + " holds a \"" + it->second.at("kind").get<std::string>() +
                         "\" but a \"" + expected_kind + "\" was expected");
    return it->second;
}

void Workspace::note_field(const Field& f) {
    if (!field_) {
        field_ = f;
        return;
    }
    if (*field_ != f)
        throw ValidationError("field mismatch in workspace: " + field_->name() + " vs " + f.name());
}

FiniteGroup Workspace::group(const std::string& path) {
    return group_from_json(raw(path, "finite_group"));
}

Coalgebra Workspace::coalgebra(const std::string& path) {
    Coalgebra c = coalgebra_from_json(raw(path, "coalgebra"));
    note_field(c.field);
    return c;
}

GroupCoalgebra Workspace::group_coalgebra(const std::string& path) {
    GroupCoalgebra c = group_coalgebra_from_json(raw(path, "group_coalgebra"));
    note_field(c.field);
    return c;
}

GComodule Workspace::g_comodule(const std::string& path, const GroupCoalgebra& base) {
    return g_comodule_from_json(base, raw(path, "g_comodule"));
}

SmashComodule Workspace::smash_comodule(const std::string& path, const GroupCoalgebra& base) {
    return smash_comodule_from_json(base, raw(path, "smash_comodule"));
}

WeakAction Workspace::weak_action(const std::string& path, const Coalgebra& c) {
    return weak_action_from_json(c, raw(path, "weak_action"));
}

FactorSet Workspace::factor_set(const std::string& path, const Coalgebra& c,
                                const FiniteGroup& g) {
    return factor_set_from_json(c, g, raw(path, "factor_set"));
}

CocleftData Workspace::cocleft_data(const std::string& path, const GroupCoalgebra& base) {
    return cocleft_data_from_json(base, raw(path, "cocleft_data"));
}

std::vector<Matrix> Workspace::dual_family(const std::string& path, const GroupCoalgebra& base) {
    return dual_family_from_json(base, raw(path, "dual_family"));
}

TwoCochain Workspace::two_cochain(const std::string& path, const Coalgebra& c,
                                  const FiniteGroup& g) {
    return two_cochain_from_json(c, g, raw(path, "two_cochain"));
}

}  // namespace gcoalg
