#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ustar/algebra.hpp"
#include "ustar/config.hpp"
#include "ustar/group.hpp"
#include "ustar/involution.hpp"
#include "ustar/oracle.hpp"
#include "ustar/render.hpp"
#include "ustar/structure.hpp"
#include "ustar/suite.hpp"

namespace py = pybind11;
using namespace ustar;

PYBIND11_MODULE(ustar, m) {
  m.doc() =
      "Bases and invariants of the unitary and symmetric unit groups of a "
      "modular group algebra F_p[G] under an involutory automorphism";

  py::register_exception<GroupMismatch>(m, "GroupMismatchError", PyExc_ValueError);
  py::register_exception<AugmentationZero>(m, "AugmentationZeroError", PyExc_ValueError);
  py::register_exception<NotNormalized>(m, "NotNormalizedError", PyExc_ValueError);
  py::register_exception<NotWellDefined>(m, "NotWellDefinedError", PyExc_ValueError);
  py::register_exception<NotInvolutory>(m, "NotInvolutoryError", PyExc_ValueError);
  py::register_exception<NotAGroup>(m, "NotAGroupError", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLargeError", PyExc_RuntimeError);

  py::class_<PrimePower>(m, "PrimePower")
      .def_readonly("base", &PrimePower::base)
      .def_readonly("exponent", &PrimePower::exponent)
      .def("small_value", &PrimePower::small_value)
      .def("__str__", &PrimePower::str)
      .def("__repr__", &PrimePower::str)
      .def(py::self == py::self)
      .def(py::self * py::self);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init<std::int64_t, std::vector<std::int64_t>, std::int64_t>(),
           py::arg("p"), py::arg("orders"),
           py::arg("size_guard") = GroupSpec::kDefaultSizeGuard)
      .def_property_readonly("p", &GroupSpec::p)
      .def_property_readonly("orders", &GroupSpec::orders)
      .def_property_readonly("rank", &GroupSpec::rank)
      .def_property_readonly("size", &GroupSpec::size)
      .def_property_readonly("exponent", &GroupSpec::exponent)
      .def("power_subgroup_size", &GroupSpec::power_subgroup_size, py::arg("i"))
      .def("index_of", &GroupSpec::index_of)
      .def("element_at", &GroupSpec::element_at)
      .def("mul", &GroupSpec::mul)
      .def("inverse", &GroupSpec::inverse)
      .def("power", &GroupSpec::power)
      .def("square_root", &GroupSpec::square_root)
      .def("element_order", &GroupSpec::element_order)
      .def("describe", &GroupSpec::describe)
      .def(py::self == py::self)
      .def("__repr__", [](const GroupSpec& g) {
        return "GroupSpec(p=" + std::to_string(g.p()) + ", " + g.describe() + ")";
      });

  py::class_<InvolutionSpec>(m, "InvolutionSpec")
      .def(py::init<GroupSpec, std::vector<ExponentTuple>>(), py::arg("group"),
           py::arg("images"))
      .def_static("identity", &InvolutionSpec::identity)
      .def_static("canonical", &InvolutionSpec::canonical)
      .def_static("swap_generators", &InvolutionSpec::swap_generators, py::arg("group"),
                  py::arg("i"), py::arg("j"))
      .def_static("parse", &parse_involution, py::arg("group"), py::arg("text"))
      .def_property_readonly("group", &InvolutionSpec::group)
      .def_property_readonly("images", &InvolutionSpec::images)
      .def("apply", &InvolutionSpec::apply)
      .def("is_identity_map", &InvolutionSpec::is_identity_map)
      .def("__str__", &render_involution)
      .def(py::self == py::self);

  py::class_<EigenSplit>(m, "EigenSplit")
      .def_readonly("fixed", &EigenSplit::fixed)
      .def_readonly("inverted", &EigenSplit::inverted);
  m.def("eigensplit", &eigensplit, py::arg("g"), py::arg("eta"));

  py::class_<DiagonalForm>(m, "DiagonalForm")
      .def_property_readonly("involution", &DiagonalForm::involution)
      .def_property_readonly("original_group", &DiagonalForm::original_group)
      .def_property_readonly("group", &DiagonalForm::group)
      .def_property_readonly("inverted_count", &DiagonalForm::inverted_count)
      .def_property_readonly("rank", &DiagonalForm::rank)
      .def_property_readonly("generators_in_original", &DiagonalForm::generators_in_original)
      .def_property_readonly("original_in_diagonal", &DiagonalForm::original_in_diagonal)
      .def("to_original", &DiagonalForm::to_original)
      .def("to_diagonal", &DiagonalForm::to_diagonal)
      .def("diagonal_involution", &DiagonalForm::diagonal_involution)
      .def("power_subgroup_size", &DiagonalForm::power_subgroup_size, py::arg("i"))
      .def("fixed_power_subgroup_size", &DiagonalForm::fixed_power_subgroup_size,
           py::arg("i"))
      .def("fixed_subgroup_size", &DiagonalForm::fixed_subgroup_size)
      .def("to_json", [](const DiagonalForm& d) { return diagonal_form_to_json(d).dump(); });
  m.def("diagonalize", &diagonalize, py::arg("eta"));

  py::class_<AlgebraElement>(m, "AlgebraElement")
      .def_static("zero", &AlgebraElement::zero)
      .def_static("one", &AlgebraElement::one)
      .def_static("group_element", &AlgebraElement::group_element)
      .def_static("from_coefficients", &AlgebraElement::from_coefficients)
      .def_property_readonly("group", &AlgebraElement::group)
      .def_property_readonly("coefficients", &AlgebraElement::coefficients)
      .def("is_zero", &AlgebraElement::is_zero)
      .def("is_one", &AlgebraElement::is_one)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const AlgebraElement& x) { return element_string(x, "g"); })
      .def("__repr__", [](const AlgebraElement& x) { return element_string(x, "g"); });

  m.def("augmentation", &augmentation);
  m.def("inv_unit", &inv_unit);
  m.def("power", &power, py::arg("x"), py::arg("k"));
  m.def("frobenius", &frobenius);
  m.def("frobenius_power", &frobenius_power, py::arg("x"), py::arg("i"));
  m.def("unit_order", &unit_order);
  m.def("apply_involution", &apply_involution, py::arg("x"), py::arg("eta"));
  m.def("supported_on_power_subgroup", &supported_on_power_subgroup, py::arg("x"),
        py::arg("i"));

  py::enum_<IndexLabel>(m, "IndexLabel")
      .value("L0", IndexLabel::L0)
      .value("L1", IndexLabel::L1)
      .value("L2", IndexLabel::L2);

  py::class_<IndexClass>(m, "IndexClass")
      .def_readonly("alpha", &IndexClass::alpha)
      .def_readonly("weight", &IndexClass::weight)
      .def_readonly("head", &IndexClass::head)
      .def_readonly("label", &IndexClass::label)
      .def("__repr__", [](const IndexClass& ic) {
        std::string s = "IndexClass(alpha=[";
        for (std::size_t i = 0; i < ic.alpha.size(); ++i)
          s += (i ? "," : "") + std::to_string(ic.alpha[i]);
        return s + "], " + label_name(ic.label) + ")";
      });

  m.def("enumerate_indices", &enumerate_indices, py::arg("diagonal"));
  m.def("basis_unit", &basis_unit, py::arg("diagonal"), py::arg("alpha"));
  m.def("unitarize", &unitarize, py::arg("x"), py::arg("eta"));
  m.def("symmetrize", &symmetrize, py::arg("x"), py::arg("eta"));
  m.def("predicted_unit_order", &predicted_unit_order, py::arg("diagonal"),
        py::arg("alpha"));
  m.def("to_original_coordinates", &to_original_coordinates, py::arg("diagonal"),
        py::arg("x"));

  py::class_<BasisElement>(m, "BasisElement")
      .def_readonly("index", &BasisElement::index)
      .def_readonly("element", &BasisElement::element)
      .def_readonly("order", &BasisElement::order);

  m.def("unitary_basis", &unitary_basis, py::arg("diagonal"));
  m.def("symmetric_basis", &symmetric_basis, py::arg("diagonal"));
  m.def("symmetric_invariant", &symmetric_invariant, py::arg("diagonal"), py::arg("i"));
  m.def("unitary_invariant", &unitary_invariant, py::arg("diagonal"), py::arg("i"));
  m.def("symmetric_invariants", &symmetric_invariants, py::arg("diagonal"));
  m.def("unitary_invariants", &unitary_invariants, py::arg("diagonal"));
  m.def("symmetric_rank", &symmetric_rank, py::arg("diagonal"));
  m.def("unitary_rank", &unitary_rank, py::arg("diagonal"));
  m.def("order_V", &order_V, py::arg("diagonal"));
  m.def("order_symmetric", &order_symmetric, py::arg("diagonal"));
  m.def("order_unitary", &order_unitary, py::arg("diagonal"));

  py::class_<StructureReport>(m, "StructureReport")
      .def_readonly("order_V", &StructureReport::order_V)
      .def_readonly("order_symmetric", &StructureReport::order_symmetric)
      .def_readonly("order_unitary", &StructureReport::order_unitary)
      .def_readonly("f_symmetric", &StructureReport::f_symmetric)
      .def_readonly("f_unitary", &StructureReport::f_unitary)
      .def_readonly("rank_symmetric", &StructureReport::rank_symmetric)
      .def_readonly("rank_unitary", &StructureReport::rank_unitary)
      .def_readonly("symmetric_basis", &StructureReport::symmetric_basis)
      .def_readonly("unitary_basis", &StructureReport::unitary_basis)
      .def("to_json", [](const StructureReport& r) {
        return report_to_json(r, true).dump();
      });
  m.def("structure_report", &structure_report, py::arg("diagonal"));

  py::class_<UnitSet>(m, "UnitSet")
      .def(py::init<GroupSpec>())
      .def_property_readonly("group", &UnitSet::group)
      .def("insert", &UnitSet::insert)
      .def("contains", &UnitSet::contains)
      .def_property_readonly("elements", &UnitSet::elements)
      .def("set_equals", &UnitSet::set_equals)
      .def("__len__", [](const UnitSet& s) { return s.size(); })
      .def("__contains__", [](const UnitSet& s, const AlgebraElement& x) {
        return s.contains(x);
      });

  py::enum_<UnitKind>(m, "UnitKind")
      .value("ALL", UnitKind::All)
      .value("SYMMETRIC", UnitKind::Symmetric)
      .value("UNITARY", UnitKind::Unitary);

  m.def("enumerate_units", &enumerate_units, py::arg("kind"), py::arg("group"),
        py::arg("eta"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("closure", &closure, py::arg("group"), py::arg("generators"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("is_group", &is_group);
  m.def("abelian_invariants", &abelian_invariants);

  py::class_<CheckResult> check(m, "CheckResult");
  py::enum_<CheckResult::Status>(check, "Status")
      .value("PASS", CheckResult::Status::Pass)
      .value("FAIL", CheckResult::Status::Fail)
      .value("SKIP", CheckResult::Status::Skip);
  check.def_readonly("name", &CheckResult::name)
      .def_readonly("status", &CheckResult::status)
      .def_readonly("detail", &CheckResult::detail)
      .def("passed", &CheckResult::passed)
      .def("__repr__", [](const CheckResult& r) {
        return "CheckResult(" + r.name + ": " + status_name(r.status) + ")";
      });

  m.def("verify_basis", &verify_basis, py::arg("name"), py::arg("claimed"),
        py::arg("target"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("verify_decomposition", &verify_decomposition, py::arg("diagonal"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("verify_epimorphisms", &verify_epimorphisms, py::arg("diagonal"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("verify_power_subgroup", &verify_power_subgroup, py::arg("diagonal"), py::arg("i"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("independence_mod_p", &independence_mod_p, py::arg("claimed"),
        py::arg("cap") = kDefaultCombinatorialCap);

  py::class_<SuiteOptions>(m, "SuiteOptions")
      .def(py::init<>())
      .def_readwrite("enumeration_cap", &SuiteOptions::enumeration_cap)
      .def_readwrite("combinatorial_cap", &SuiteOptions::combinatorial_cap)
      .def_readwrite("max_power_index", &SuiteOptions::max_power_index);
  m.def("verification_suite", &verification_suite, py::arg("diagonal"),
        py::arg("options") = SuiteOptions{});
  m.def("all_passed", &all_passed);

  m.def("parse_involution", &parse_involution, py::arg("group"), py::arg("text"));
  m.def("render_involution", &render_involution, py::arg("eta"));
}
