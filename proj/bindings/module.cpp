// Python bindings. Rationals cross the boundary as fractions.Fraction (or
// int / "p/q" strings on the way in); vectors and matrices as (nested) lists.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mihull/concmin.hpp"
#include "mihull/generators.hpp"
#include "mihull/hull.hpp"
#include "mihull/instance_io.hpp"
#include "mihull/lp.hpp"
#include "mihull/mihull.hpp"

namespace py = pybind11;
using namespace mihull;

namespace {

bool load_rat(py::handle src, Rat& out) {
  try {
    if (PyLong_Check(src.ptr())) {
      out = Rat(Int(py::str(src).cast<std::string>()));
      return true;
    }
    if (py::isinstance<py::str>(src)) {
      out = parse_rat(src.cast<std::string>());
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      Int num(py::str(src.attr("numerator")).cast<std::string>());
      Int den(py::str(src.attr("denominator")).cast<std::string>());
      out = make_rat(num, den);
      return true;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

py::object rat_to_fraction(const Rat& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rat(v));
}

bool load_ratvec(py::handle src, RatVec& out) {
  if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
  std::vector<Rat> entries;
  for (py::handle item : src.cast<py::sequence>()) {
    Rat q;
    if (!load_rat(item, q)) return false;
    entries.push_back(std::move(q));
  }
  out = RatVec(std::move(entries));
  return true;
}

py::list ratvec_to_list(const RatVec& v) {
  py::list out;
  for (const Rat& q : v) out.append(rat_to_fraction(q));
  return out;
}

}  // namespace

namespace pybind11 {
namespace detail {

template <>
struct type_caster<Int> {
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Int(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Int& v, return_value_policy, handle) {
    return handle(PyLong_FromString(v.str().c_str(), nullptr, 10));
  }
};

template <>
struct type_caster<Rat> {
  PYBIND11_TYPE_CASTER(Rat, const_name("Fraction"));

  bool load(handle src, bool) { return load_rat(src, value); }

  static handle cast(const Rat& v, return_value_policy, handle) {
    return rat_to_fraction(v).release();
  }
};

template <>
struct type_caster<RatVec> {
  PYBIND11_TYPE_CASTER(RatVec, const_name("list[Fraction]"));

  bool load(handle src, bool) { return load_ratvec(src, value); }

  static handle cast(const RatVec& v, return_value_policy, handle) {
    return ratvec_to_list(v).release();
  }
};

template <>
struct type_caster<RatMat> {
  PYBIND11_TYPE_CASTER(RatMat, const_name("list[list[Fraction]]"));

  bool load(handle src, bool) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    std::vector<RatVec> rows;
    std::size_t cols = 0;
    for (handle item : src.cast<py::sequence>()) {
      RatVec row;
      if (!load_ratvec(item, row)) return false;
      if (!rows.empty() && row.size() != cols) return false;
      cols = row.size();
      rows.push_back(std::move(row));
    }
    value = RatMat::from_rows(rows, cols);
    return true;
  }

  static handle cast(const RatMat& m, return_value_policy, handle) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(ratvec_to_list(m.row(i)));
    return out.release();
  }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mixed-integer hulls of rational polyhedra";

  py::register_exception<Error>(m, "MihullError");

  py::class_<MixedSpace>(m, "MixedSpace")
      .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
      .def_readonly("n", &MixedSpace::n)
      .def_readonly("d", &MixedSpace::d)
      .def("dim", &MixedSpace::dim)
      .def("__repr__", [](const MixedSpace& s) {
        return "MixedSpace(n=" + std::to_string(s.n) + ", d=" + std::to_string(s.d) + ")";
      });

  py::class_<HRep>(m, "HRep")
      .def(py::init<MixedSpace, RatMat, RatVec>(), py::arg("space"), py::arg("A"), py::arg("b"))
      .def_readonly("space", &HRep::space)
      .def_readonly("A", &HRep::A)
      .def_readonly("b", &HRep::b)
      .def("rows", &HRep::rows)
      .def("contains", &HRep::contains);

  py::class_<VRep>(m, "VRep")
      .def(py::init<MixedSpace, std::vector<RatVec>, std::vector<RatVec>>(), py::arg("space"),
           py::arg("points"), py::arg("rays") = std::vector<RatVec>{})
      .def_readonly("space", &VRep::space)
      .def_readonly("points", &VRep::points)
      .def_readonly("rays", &VRep::rays);

  py::class_<Triangulation>(m, "Triangulation")
      .def_readonly("points", &Triangulation::points)
      .def_readonly("cells", &Triangulation::cells);

  py::class_<IntegerHull>(m, "IntegerHull").def_readonly("vertices", &IntegerHull::vertices);

  py::class_<MixedIntegerHull>(m, "MixedIntegerHull")
      .def_readonly("space", &MixedIntegerHull::space)
      .def_readonly("vertices", &MixedIntegerHull::vertices)
      .def_readonly("rays", &MixedIntegerHull::rays);

  py::class_<ScaleReport>(m, "ScaleReport")
      .def_readonly("t", &ScaleReport::t)
      .def_readonly("bases_considered", &ScaleReport::bases_considered)
      .def_readonly("max_abs_det", &ScaleReport::max_abs_det)
      .def_readonly("hadamard_bound", &ScaleReport::hadamard_bound)
      .def_readonly("hadamard_ok", &ScaleReport::hadamard_ok)
      .def_readonly("subsets_m_plus_n", &ScaleReport::subsets_m_plus_n)
      .def_readonly("subsets_m_plus_2n", &ScaleReport::subsets_m_plus_2n);

  py::class_<Reduction>(m, "Reduction")
      .def_readonly("polytope", &Reduction::polytope)
      .def_readonly("rays", &Reduction::rays);

  py::class_<PiecewiseAffineConcave>(m, "PiecewiseAffineConcave")
      .def(py::init([](const std::vector<std::pair<RatVec, Rat>>& pieces) {
             PiecewiseAffineConcave f;
             f.pieces = pieces;
             return f;
           }),
           py::arg("pieces"))
      .def_readonly("pieces", &PiecewiseAffineConcave::pieces);

  py::class_<MinResult>(m, "MinResult")
      .def_readonly("point", &MinResult::point)
      .def_readonly("value", &MinResult::value);

  py::class_<ShearedCube>(m, "ShearedCube")
      .def_readonly("hrep", &ShearedCube::hrep)
      .def_readonly("vrep", &ShearedCube::vrep)
      .def_readonly("shear", &ShearedCube::shear)
      .def_readonly("inv_shear", &ShearedCube::inv_shear);

  // Exact linear algebra.
  m.def("mat_det", &mat_det);
  m.def("mat_solve", &mat_solve);
  m.def("mat_rank", &mat_rank);
  m.def("encoding_size", [](const Rat& q) { return encoding_size(q); });
  m.def("encoding_size_vec", [](const RatVec& v) { return encoding_size(v); });

  // Representations and conversions.
  m.def("normalize_rays", &normalize_rays);
  m.def("hrep_to_vrep", &hrep_to_vrep);
  m.def("vrep_to_hrep", &vrep_to_hrep);
  m.def("project_x", &project_x);
  m.def("fiber_slice", &fiber_slice);
  m.def("minkowski_sum_points", &minkowski_sum_points);
  m.def("affine_dim", &affine_dim);

  // Convexity predicates.
  m.def("point_in_hull", &point_in_hull);
  m.def("is_extreme_point", &is_extreme_point);
  m.def("is_bounded", &is_bounded);

  // Hulls and triangulations.
  m.def("hull_vertices", &hull_vertices);
  m.def("lift_points", &lift_points);
  m.def("delaunay_triangulate", &delaunay_triangulate);
  m.def("lattice_points", &lattice_points);
  m.def("integer_hull_oracle", &integer_hull_oracle);
  m.def("integer_hull_from_vertices", &integer_hull_from_vertices);
  m.def("integer_hull_vertex_bound", &integer_hull_vertex_bound, py::arg("n"), py::arg("nu"),
        py::arg("num_points"), py::arg("simplex") = false);

  // Mixed-integer hulls.
  m.def("reduce_to_polytope", &reduce_to_polytope);
  m.def("mixed_feasible_bounded", &mixed_feasible_bounded);
  m.def("compute_scale_factor", &compute_scale_factor);
  m.def("scale_polytope", &scale_polytope);
  m.def("mih_from_hrep", &mih_from_hrep);
  m.def("mih_from_vrep", &mih_from_vrep);
  m.def("mih_oracle", &mih_oracle);
  m.def("candidate_subsets", &candidate_subsets);
  m.def("fiber_vertices_in_simplex", &fiber_vertices_in_simplex, py::arg("simplex"),
        py::arg("xhat"), py::arg("n"));
  m.def("vertex_bound_hrep", &vertex_bound_hrep, py::arg("m"), py::arg("n"), py::arg("d"),
        py::arg("phi"));
  m.def("vertex_bound_vrep", &vertex_bound_vrep, py::arg("n"), py::arg("nu"),
        py::arg("num_points"));

  // Concave minimization.
  m.def("evaluate", &evaluate);
  m.def("minimize_over_mih",
        [](const VRep& v, const PiecewiseAffineConcave& f) { return minimize_over_mih(v, f); });
  m.def("minimize_over_mih_callback",
        [](const VRep& v, const std::function<Rat(const RatVec&)>& f) {
          return minimize_over_mih(v, f);
        });

  // Instance files and generators.
  m.def("parse_instance", &parse_instance);
  m.def("format_instance", &format_instance);
  m.def("parse_objective", &parse_objective);
  m.def("format_objective", &format_objective);
  m.def("gen_example1", &gen_example1, py::arg("d"), py::arg("b") = std::vector<Int>{});
  m.def("gen_knapsack", &gen_knapsack, py::arg("m"), py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("gen_random_vrep", &gen_random_vrep, py::arg("n"), py::arg("d"), py::arg("max_points"),
        py::arg("max_num"), py::arg("max_den"), py::arg("seed"),
        py::arg("require_mixed_feasible") = true);
}
