// Python bindings for the main operations: exact matrices, groups,
// (group) coalgebras, smash and crossed coproducts, and the cohomology
// decision procedures. Structured objects also move through the JSON file
// format via loads/dumps helpers.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcoalg/io.hpp"

namespace py = pybind11;
using namespace gcoalg;

namespace {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "inconclusive";
    }
}

Scalar scalar_from_handle(const Field& f, const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Scalar::of_int(f, h.cast<long>());
    return Scalar::parse(f, h.cast<std::string>());
}

Matrix matrix_from_rows(const Field& f, const py::sequence& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : py::cast<py::sequence>(rows[0]).size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = py::cast<py::sequence>(rows[i]);
        if (row.size() != c) throw ShapeMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar_from_handle(f, row[j]);
    }
    return m;
}

std::vector<std::vector<std::string>> matrix_to_rows(const Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).str();
    return rows;
}

py::dict report_to_dict(const Report& r) {
    py::dict d;
    d["ok"] = r.ok();
    py::list issues;
    for (const auto& issue : r.issues) {
        py::dict item;
        item["check"] = issue.check;
        item["where"] = issue.where;
        item["detail"] = issue.detail;
        issues.append(item);
    }
    d["issues"] = issues;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gcoalg, m) {
    m.doc() = "exact structure-constant computations for group coalgebras";

    py::register_exception<Error>(m, "GcoalgError");

    py::class_<Field>(m, "Field")
        .def_static("rationals", &Field::rationals)
        .def_static("prime", &Field::prime, py::arg("p"))
        .def_static("parse", &Field::parse, py::arg("text"))
        .def_property_readonly("name", &Field::name)
        .def_property_readonly("is_prime_field", &Field::is_prime_field)
        .def(py::self == py::self)
        .def("__repr__", [](const Field& f) { return "Field(" + f.name() + ")"; });

    py::class_<Matrix>(m, "Matrix")
        .def_static("from_rows", &matrix_from_rows, py::arg("field"), py::arg("rows"))
        .def_static("identity", &Matrix::identity, py::arg("field"), py::arg("n"))
        .def_static("zero", &Matrix::zero, py::arg("field"), py::arg("rows"), py::arg("cols"))
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def_property_readonly("field", &Matrix::field)
        .def("entry", [](const Matrix& m, std::size_t i, std::size_t j) { return m.at(i, j).str(); })
        .def("to_rows", &matrix_to_rows)
        .def(py::self == py::self)
        .def("__repr__", &Matrix::str);

    m.def("kernel_basis", &kernel_basis);
    m.def("rank", &rank);
    m.def("kronecker", &kronecker);
    m.def("solve_right", [](const Matrix& a, const Matrix& b) -> py::object {
        auto x = solve_right(a, b);
        return x ? py::cast(*x) : py::none();
    });
    m.def("inverse", [](const Matrix& a) -> py::object {
        auto x = inverse(a);
        return x ? py::cast(*x) : py::none();
    });

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_static("cyclic", &FiniteGroup::cyclic, py::arg("n"))
        .def_static("from_table", &FiniteGroup::from_table, py::arg("table"))
        .def_static("direct_product", &FiniteGroup::direct_product)
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("identity", &FiniteGroup::identity)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def_property_readonly("table", &FiniteGroup::table)
        .def(py::self == py::self);

    py::class_<Coalgebra>(m, "Coalgebra")
        .def(py::init<Field, std::size_t, Matrix, Matrix>(), py::arg("field"), py::arg("dim"),
             py::arg("comult"), py::arg("counit"))
        .def_static("ground", &Coalgebra::ground)
        .def_static("group_like", &Coalgebra::group_like)
        .def_static("comatrix", &Coalgebra::comatrix)
        .def_readonly("field", &Coalgebra::field)
        .def_readonly("dim", &Coalgebra::dim)
        .def_readonly("comult", &Coalgebra::comult)
        .def_readonly("counit", &Coalgebra::counit)
        .def(py::self == py::self);

    m.def("verify_coalgebra", [](const Coalgebra& c) { return report_to_dict(verify_coalgebra(c)); });
    m.def("is_cocommutative", &is_cocommutative);
    m.def("convolve", &convolve);
    m.def("convolution_inverse", [](const Coalgebra& c, const Matrix& u) -> py::object {
        auto v = convolution_inverse(c, u);
        return v ? py::cast(*v) : py::none();
    });

    py::class_<RightComodule>(m, "RightComodule")
        .def(py::init([](std::size_t dim, const Matrix& coaction) {
                 return RightComodule{dim, coaction};
             }),
             py::arg("dim"), py::arg("coaction"))
        .def_static("regular", &RightComodule::regular)
        .def_readonly("dim", &RightComodule::dim)
        .def_readonly("coaction", &RightComodule::coaction);

    py::class_<GroupCoalgebra>(m, "GroupCoalgebra")
        .def_readonly("field", &GroupCoalgebra::field)
        .def_readonly("group", &GroupCoalgebra::group)
        .def_readonly("dims", &GroupCoalgebra::dims)
        .def_readonly("counit", &GroupCoalgebra::counit)
        .def("delta",
             [](const GroupCoalgebra& c, std::size_t a, std::size_t b) { return c.delta(a, b); })
        .def(py::self == py::self);

    m.def("cofree", &cofree);
    m.def("build_kG", &build_kG, py::arg("field"), py::arg("group"));
    m.def("kg_antipode", &kg_antipode);
    m.def("verify_group_coalgebra",
          [](const GroupCoalgebra& c) { return report_to_dict(verify_group_coalgebra(c)); });
    m.def("component_e", &component_e);

    auto strong_to_dict = [](const StrongResult& r) {
        py::dict d;
        d["strong"] = r.strong;
        d["witnesses"] = r.witnesses;
        return d;
    };
    m.def("is_strong", [=](const GroupCoalgebra& c) { return strong_to_dict(is_strong(c)); });
    m.def("strong_via_all_pairs",
          [=](const GroupCoalgebra& c) { return strong_to_dict(strong_via_all_pairs(c)); });
    m.def("strong_via_suspensions",
          [=](const GroupCoalgebra& c) { return strong_to_dict(strong_via_suspensions(c)); });

    py::class_<GComodule>(m, "GComodule")
        .def_readonly("dims", &GComodule::dims)
        .def("rho", [](const GComodule& m, std::size_t a, std::size_t b,
                       std::size_t order) { return m.rho(a, b, order); })
        .def(py::self == py::self);

    m.def("suspension", &suspension);
    m.def("verify_g_comodule",
          [](const GroupCoalgebra& c, const GComodule& mod) {
              return report_to_dict(verify_g_comodule(c, mod));
          });
    m.def("functor_F", &functor_F);
    m.def("functor_G", [](const GroupCoalgebra& c, const RightComodule& n) {
        CotensorComodule g = functor_G(c, n);
        return py::make_tuple(g.comodule, g.inclusions);
    });
    m.def("adjunction_check", [](const GroupCoalgebra& c, const GComodule& mod) {
        AdjunctionResult r = adjunction_check(c, mod);
        py::dict d;
        d["report"] = report_to_dict(r.report);
        d["unit_bijective"] = r.unit_bijective;
        d["all_units_bijective"] = r.all_units_bijective;
        return d;
    });
    m.def("corestriction_iso_check", [](const GroupCoalgebra& c) {
        CorestrictionResult r = corestriction_iso_check(c);
        py::dict d;
        d["report"] = report_to_dict(r.report);
        d["all_iso"] = r.all_iso;
        d["agrees_with_strong"] = r.agrees_with_strong;
        return d;
    });
    m.def("zero_propagation", [](const GroupCoalgebra& c, const GComodule& mod) {
        return report_to_dict(zero_propagation(c, mod));
    });

    py::class_<GradedDualAlgebra>(m, "GradedDualAlgebra")
        .def_readonly("dims", &GradedDualAlgebra::dims)
        .def("product", [](const GradedDualAlgebra& r, std::size_t a, std::size_t b) {
            return r.product(a, b);
        });
    m.def("dual_graded_algebra", &dual_graded_algebra);
    m.def("is_strongly_graded", &is_strongly_graded);

    py::class_<SmashComodule>(m, "SmashComodule")
        .def_readonly("dim", &SmashComodule::dim)
        .def_readonly("coactions", &SmashComodule::coactions)
        .def(py::self == py::self);

    m.def("build_smash", &build_smash);
    m.def("to_smash_comodule", &to_smash_comodule);
    m.def("from_smash_comodule", &from_smash_comodule);
    m.def("grade_decomposition", &grade_decomposition);
    m.def("verify_smash_comodule", [](const GroupCoalgebra& base, const SmashComodule& sm) {
        return report_to_dict(verify_smash_comodule(base, sm));
    });
    m.def("fprime_gprime_check", [](const GroupCoalgebra& base, const RightComodule& n) {
        FPrimeGPrimeResult r = fprime_gprime_check(base, n);
        py::dict d;
        d["counit_iso"] = r.counit_iso;
        d["unit_bijective"] = r.unit_bijective;
        d["strong_equivalent"] = r.strong_equivalent;
        d["report"] = report_to_dict(r.report);
        return d;
    });

    py::class_<WeakAction>(m, "WeakAction")
        .def(py::init([](std::vector<Matrix> maps) { return WeakAction{std::move(maps)}; }),
             py::arg("maps"))
        .def_static("trivial", &WeakAction::trivial)
        .def_readonly("maps", &WeakAction::maps);

    py::class_<FactorSet>(m, "FactorSet")
        .def(py::init([](std::vector<Matrix> f, std::vector<Matrix> g) {
                 return FactorSet{std::move(f), std::move(g)};
             }),
             py::arg("f"), py::arg("g"))
        .def_static("trivial", &FactorSet::trivial)
        .def_readonly("f", &FactorSet::f)
        .def_readonly("g", &FactorSet::g);

    m.def("verify_weak_action", [](const Coalgebra& c, const WeakAction& a) {
        return report_to_dict(verify_weak_action(c, a));
    });
    m.def("verify_factor_set", [](const Coalgebra& c, const FactorSet& f) {
        return report_to_dict(verify_factor_set(c, f));
    });
    m.def("validate_crossed_data",
          [](const Coalgebra& c, const FiniteGroup& g, const WeakAction& a, const FactorSet& f) {
              return report_to_dict(validate_crossed_data(c, g, a, f));
          });
    m.def("build_crossed", &build_crossed);
    m.def("normalize_factor_set",
          [](const Coalgebra& c, const FiniteGroup& g, const WeakAction& a, const FactorSet& f) {
              NormalizedCrossed n = normalize_factor_set(c, g, a, f);
              py::dict d;
              d["action"] = n.action;
              d["factorset"] = n.fset;
              d["iso"] = n.iso;
              d["before"] = n.before;
              d["after"] = n.after;
              return d;
          });

    py::class_<CocleftData>(m, "CocleftData")
        .def(py::init([](std::vector<Matrix> u, std::vector<Matrix> v) {
                 return CocleftData{std::move(u), std::move(v)};
             }),
             py::arg("u"), py::arg("v"))
        .def_readonly("u", &CocleftData::u)
        .def_readonly("v", &CocleftData::v);

    m.def("verify_cocleft_data", [](const GroupCoalgebra& c, const CocleftData& d) {
        return report_to_dict(verify_cocleft_data(c, d));
    });
    m.def("solve_convolution_partner",
          [](const GroupCoalgebra& c, const std::vector<Matrix>& u) -> py::object {
              PartnerResult r = solve_convolution_partner(c, u);
              if (!r.data) return py::none();
              return py::cast(*r.data);
          });

    py::class_<CrossedExtraction>(m, "CrossedExtraction")
        .def_readonly("action", &CrossedExtraction::action)
        .def_readonly("factorset", &CrossedExtraction::fset)
        .def_readonly("iso", &CrossedExtraction::iso)
        .def_readonly("iso_inv", &CrossedExtraction::iso_inv)
        .def_readonly("crossed", &CrossedExtraction::crossed);

    m.def("crossed_from_cocleft", &crossed_from_cocleft);
    m.def("is_cocleft",
          [](const GroupCoalgebra& c, std::uint64_t seed) {
              SearchPolicy policy;
              policy.seed = seed;
              CocleftDecision d = is_cocleft(c, policy);
              py::dict out;
              out["verdict"] = verdict_name(d.verdict);
              out["cocleft"] = d.verdict == Verdict::yes;
              out["witnesses"] = d.witnesses;
              out["witness"] = d.witness ? py::cast(*d.witness) : py::none().cast<py::object>();
              out["note"] = d.note;
              return out;
          },
          py::arg("c"), py::arg("seed") = 0);
    m.def("smash_type_check", [](const GroupCoalgebra& c, const std::vector<Matrix>& u) {
        SmashTypeResult r = smash_type_check(c, u);
        py::dict d;
        d["report"] = report_to_dict(r.report);
        d["decomposition"] =
            r.decomposition ? py::cast(*r.decomposition) : py::none().cast<py::object>();
        return d;
    });
    m.def("trivial_action_check", [](const GroupCoalgebra& c, const CocleftData& d) {
        return report_to_dict(trivial_action_check(c, d));
    });
    m.def("enumerate_kg_morphisms", &enumerate_kg_morphisms, py::arg("c"),
          py::arg("bound") = 1'000'000);

    py::class_<GModuleAlgebra>(m, "GModuleAlgebra")
        .def_readonly("coalg", &GModuleAlgebra::coalg)
        .def_readonly("action", &GModuleAlgebra::action)
        .def("act", &GModuleAlgebra::act);
    m.def("g_module_algebra", &g_module_algebra);
    m.def("check_right_g_action", [](const Coalgebra& c, const FiniteGroup& g, const WeakAction& a) {
        return report_to_dict(check_right_g_action(c, g, a));
    });

    py::class_<OneCochain>(m, "OneCochain")
        .def_readonly("h", &OneCochain::h)
        .def_readonly("hinv", &OneCochain::hinv)
        .def(py::self == py::self);
    py::class_<TwoCochain>(m, "TwoCochain")
        .def_readonly("f", &TwoCochain::f)
        .def_readonly("finv", &TwoCochain::finv)
        .def(py::self == py::self);
    m.def("make_one_cochain", &make_one_cochain);
    m.def("make_two_cochain", &make_two_cochain);
    m.def("trivial_one_cochain", &trivial_one_cochain);
    m.def("trivial_two_cochain", &trivial_two_cochain);
    m.def("to_two_cochain", &to_two_cochain);
    m.def("to_factor_set", &to_factor_set);

    m.def("is_2cocycle", [](const GModuleAlgebra& mm, const TwoCochain& f) {
        return report_to_dict(is_2cocycle(mm, f));
    });
    m.def("is_1cocycle", [](const GModuleAlgebra& mm, const OneCochain& t) {
        return report_to_dict(is_1cocycle(mm, t));
    });
    m.def("delta1", &delta1);
    m.def("cohomologous", [](const GModuleAlgebra& mm, const TwoCochain& f, const TwoCochain& f2) {
        CohomologousResult r = cohomologous(mm, f, f2);
        py::dict d;
        d["verdict"] = verdict_name(r.verdict);
        d["equal_class"] = r.verdict == Verdict::yes;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none().cast<py::object>();
        return d;
    });
    m.def("crossed_iso_criterion", [](const GModuleAlgebra& mm, const TwoCochain& f,
                                      const TwoCochain& f2, const Matrix& phi) {
        IsoCriterionResult r = crossed_iso_criterion(mm, f, f2, phi);
        py::dict d;
        d["verdict"] = verdict_name(r.verdict);
        d["isomorphic"] = r.verdict == Verdict::yes;
        d["iso"] = r.iso;
        d["iso_verified"] = r.iso_verified;
        return d;
    });
    m.def("verify_kg_morphism", [](const GroupCoalgebra& c, const std::vector<Matrix>& u) {
        return report_to_dict(verify_kg_morphism(c, u));
    });
    m.def("omega_module_algebra", &omega_module_algebra);
    m.def("theta_from_morphisms", &theta_from_morphisms);
    m.def("morphism_from_theta", &morphism_from_theta);
    m.def("omega_equivalence", [](const GroupCoalgebra& c, const std::vector<Matrix>& u,
                                  const std::vector<Matrix>& u2) {
        OmegaEquivalenceResult r = omega_equivalence(c, u, u2);
        py::dict d;
        d["verdict"] = verdict_name(r.verdict);
        d["equivalent"] = r.verdict == Verdict::yes;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none().cast<py::object>();
        return d;
    });
    m.def("action_independence_check",
          [](const GroupCoalgebra& c, const CocleftData& d1, const CocleftData& d2) {
              return report_to_dict(action_independence_check(c, d1, d2));
          });
    m.def("classify_h2", [](const GModuleAlgebra& mm, std::uint64_t bound) {
        Classification cls = classify_h2(mm, bound);
        py::dict d;
        d["z2_count"] = cls.cocycles.size();
        d["b2_count"] = cls.coboundary_count;
        d["h2_count"] = cls.classes.size();
        d["z1_count"] = cls.one_cocycles.size();
        d["b1_count"] = cls.one_coboundary_count;
        d["classes"] = cls.classes;
        d["cocycles"] = cls.cocycles;
        return d;
    }, py::arg("m"), py::arg("bound") = 1'000'000);

    // JSON file-format bridge
    m.def("load_group_coalgebra", [](const std::string& text) {
        return group_coalgebra_from_json(json::parse(text));
    });
    m.def("load_group_coalgebra_file",
          [](const std::string& path) { return group_coalgebra_from_json(load_json_file(path)); });
    m.def("dump_group_coalgebra",
          [](const GroupCoalgebra& c) { return group_coalgebra_to_json(c).dump(2); });
    m.def("load_coalgebra_file",
          [](const std::string& path) { return coalgebra_from_json(load_json_file(path)); });
    m.def("dump_coalgebra", [](const Coalgebra& c) { return coalgebra_to_json(c).dump(2); });
}
