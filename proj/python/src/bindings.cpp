#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "mvs/dimension.hpp"
#include "mvs/errors.hpp"
#include "mvs/independence.hpp"
#include "mvs/linalg.hpp"
#include "mvs/mvspace.hpp"
#include "mvs/scalar.hpp"
#include "mvs/space_file.hpp"

namespace py = pybind11;
using namespace mvs;

namespace {

// Entries may be ints, strings such as "-3/4", or anything whose str() parses.
Scalar to_scalar(Field field, const py::handle& h) {
  return Scalar::parse(field, py::str(h).cast<std::string>());
}

Vector to_vector(Field field, const py::sequence& coords) {
  std::vector<Scalar> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(to_scalar(field, c));
  return Vector(field, std::move(out));
}

std::vector<std::string> coords_of(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& s : v.coords()) out.push_back(s.to_string());
  return out;
}

LinearMap map_from_rows(Field field, std::size_t domain, const std::vector<py::sequence>& rows) {
  Matrix a(field, rows.size(), domain);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != domain) throw DimensionMismatch("row length differs from the domain dimension");
    for (std::size_t c = 0; c < domain; ++c) a(r, c) = to_scalar(field, rows[r][c]);
  }
  return LinearMap(std::move(a));
}

py::list index_pairs(const MultiIndex& idx) {
  py::list out;
  for (const auto& e : idx.entries) out.append(py::make_tuple(e.count, e.multiplicity));
  return out;
}

}  // namespace

PYBIND11_MODULE(_mvspace, m) {
  m.doc() = "Exact multi vector spaces over Q and GF(p).";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<FieldMismatch>(m, "FieldMismatch", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<Field>(m, "Field")
      .def_static("rational", &Field::rational)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("is_rational", &Field::is_rational)
      .def(py::self == py::self)
      .def("__str__", &Field::to_string)
      .def("__repr__", [](Field f) { return "Field(" + f.to_string() + ")"; });

  py::class_<Vector>(m, "Vector")
      .def(py::init(&to_vector), py::arg("field"), py::arg("coords"))
      .def_static("parse", &Vector::parse, py::arg("field"), py::arg("text"))
      .def_property_readonly("field", &Vector::field)
      .def("coords", &coords_of)
      .def("is_zero", &Vector::is_zero)
      .def("__len__", &Vector::size)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__str__", &Vector::to_string)
      .def("__repr__", [](const Vector& v) { return "Vector" + v.to_string(); });

  py::class_<Subspace>(m, "Subspace")
      .def_static("zero", &Subspace::zero, py::arg("field"), py::arg("ambient"))
      .def_static("full", &Subspace::full, py::arg("field"), py::arg("ambient"))
      .def_static(
          "span",
          [](Field field, std::size_t ambient, const std::vector<Vector>& gens) {
            return subspace_from_generators(field, ambient, gens);
          },
          py::arg("field"), py::arg("ambient"), py::arg("generators"))
      .def_property_readonly("field", &Subspace::field)
      .def_property_readonly("ambient", &Subspace::ambient)
      .def_property_readonly("rank", &Subspace::rank)
      .def("rows", &Subspace::rows)
      .def("contains", &Subspace::contains, py::arg("x"))
      .def("__contains__", &Subspace::contains)
      .def("__add__", &subspace_sum)
      .def("__and__", &subspace_intersection)
      .def("__le__", &is_subspace_of)
      .def(py::self == py::self)
      .def("__str__", &Subspace::to_string);

  py::class_<LinearMap>(m, "LinearMap")
      .def(py::init(&map_from_rows), py::arg("field"), py::arg("domain"), py::arg("rows"))
      .def_static("identity", &LinearMap::identity, py::arg("field"), py::arg("n"))
      .def_static("zero", &LinearMap::zero, py::arg("field"), py::arg("domain"), py::arg("codomain"))
      .def_property_readonly("domain_dim", &LinearMap::domain_dim)
      .def_property_readonly("codomain_dim", &LinearMap::codomain_dim)
      .def("__call__", &LinearMap::operator(), py::arg("x"))
      .def("kernel", &kernel)
      .def("image", &image);

  py::class_<MVSpace>(m, "MVSpace")
      .def(py::init([](Field field, std::size_t ambient, unsigned omega,
                       const std::vector<std::pair<unsigned, Subspace>>& levels) {
             std::vector<Level> chain;
             for (const auto& [n, s] : levels) chain.push_back(Level{n, s});
             return MVSpace::canonical(field, ambient, omega, std::move(chain));
           }),
           py::arg("field"), py::arg("ambient"), py::arg("omega"), py::arg("levels"),
           "Levels are (count, subspace) pairs in any order.")
      .def_static("constant", &MVSpace::constant, py::arg("omega"), py::arg("n"), py::arg("subspace"))
      .def_property_readonly("field", &MVSpace::field)
      .def_property_readonly("ambient", &MVSpace::ambient)
      .def_property_readonly("omega", &MVSpace::omega)
      .def("chain",
           [](const MVSpace& v) {
             py::list out;
             for (const auto& l : v.chain()) out.append(py::make_tuple(l.count, l.subspace));
             return out;
           })
      .def("count", &MVSpace::count, py::arg("x"))
      .def("level", &MVSpace::level, py::arg("n"))
      .def("support", &MVSpace::support)
      .def("nonzero_count_range", &MVSpace::nonzero_count_range)
      .def(py::self == py::self)
      .def("__str__", [](const MVSpace& v) { return to_string(v); });

  py::class_<IndependenceResult>(m, "IndependenceResult")
      .def_readonly("independent", &IndependenceResult::independent)
      .def_readonly("linearly_dependent", &IndependenceResult::linearly_dependent)
      .def_readonly("min_count", &IndependenceResult::min_count)
      .def_readonly("witness_count", &IndependenceResult::witness_count)
      .def_property_readonly("witness",
                             [](const IndependenceResult& r) -> py::object {
                               if (!r.witness) return py::none();
                               py::list out;
                               for (const auto& s : *r.witness) out.append(s.to_string());
                               return out;
                             })
      .def("__bool__", [](const IndependenceResult& r) { return r.independent; });

  m.def("scale", [](py::handle lambda, const MVSpace& v) { return scale(to_scalar(v.field(), lambda), v); },
        py::arg("scalar"), py::arg("space"));
  m.def("sum", &sum, py::arg("v"), py::arg("w"));
  m.def("intersect", &intersect, py::arg("v"), py::arg("w"));
  m.def("restrict_to", &restrict_to, py::arg("space"), py::arg("carrier"));

  m.def(
      "is_multi_linearly_independent",
      [](const MVSpace& v, const std::vector<Vector>& xs) { return is_multi_linearly_independent(v, xs); },
      py::arg("space"), py::arg("vectors"));
  m.def(
      "is_hereditarily_multi_independent",
      [](const MVSpace& v, const std::vector<Vector>& xs) { return is_hereditarily_multi_independent(v, xs); },
      py::arg("space"), py::arg("vectors"));
  m.def(
      "find_mbasis", [](const MVSpace& v) { return find_mbasis(v).vectors(); }, py::arg("space"));
  m.def(
      "is_mbasis", [](const MVSpace& v, const std::vector<Vector>& b) { return is_mbasis(v, b); },
      py::arg("space"), py::arg("basis"));
  m.def(
      "multi_index", [](const MVSpace& v) { return index_pairs(multi_index(v)); }, py::arg("space"));
  m.def(
      "basis_index",
      [](const MVSpace& v, const std::vector<Vector>& b) { return index_pairs(basis_index(v, b)); },
      py::arg("space"), py::arg("basis"));

  m.def(
      "mdim", [](const MVSpace& v) { return mdim(v); }, py::arg("space"));
  m.def(
      "basis_count_sum", [](const MVSpace& v, const std::vector<Vector>& b) { return basis_count_sum(v, b); },
      py::arg("space"), py::arg("basis"));
  m.def("theta_dominance", &theta_dominance, py::arg("v"), py::arg("w"));
  m.def("common_mbasis", &common_mbasis, py::arg("v"), py::arg("w"));
  m.def(
      "modular_dimension_check",
      [](const MVSpace& v, const MVSpace& w) {
        const DimensionCheck d = modular_dimension_check(v, w);
        return py::make_tuple(d.lhs, d.rhs);
      },
      py::arg("v"), py::arg("w"));
  m.def("map_image", &map_image, py::arg("f"), py::arg("space"));
  m.def(
      "kernel_mdim", [](const LinearMap& f, const MVSpace& v) { return mdim(ker_restrict(f, v)); }, py::arg("f"),
      py::arg("space"));
  m.def(
      "image_mdim", [](const LinearMap& f, const MVSpace& v) { return mdim(im_restrict(f, v)); }, py::arg("f"),
      py::arg("space"));
  m.def(
      "rank_nullity_check",
      [](const LinearMap& f, const MVSpace& v) {
        const DimensionCheck d = rank_nullity_check(f, v);
        return py::make_tuple(d.lhs, d.rhs);
      },
      py::arg("f"), py::arg("space"));

  m.def(
      "parse_space_file",
      [](const std::string& text) {
        const SpaceFile file = parse_space_file(text);
        py::dict out;
        for (const auto& s : file.spaces) out[py::str(s.name)] = s.space;
        return out;
      },
      py::arg("text"), "Maps each space name to its MVSpace, in file order.");
  m.def("serialize_space", &serialize_space, py::arg("name"), py::arg("space"));
}
