#include <pybind11/eigen.h>
#include <pybind11/iostream.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spaceform/dual.hpp"
#include "spaceform/forms.hpp"
#include "spaceform/groups.hpp"
#include "spaceform/hull.hpp"
#include "spaceform/metric.hpp"
#include "spaceform/rigidity.hpp"
#include "spaceform/scene.hpp"

#include <iostream>

namespace py = pybind11;
using namespace spaceform;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polyhedral invariant surfaces in constant-curvature space forms";

  // --- quadratic forms and model spaces -------------------------------------
  py::class_<FormSpace>(m, "FormSpace")
      .def_readonly("name", &FormSpace::name)
      .def_readonly("dim", &FormSpace::dim)
      .def_readonly("signature", &FormSpace::signature)
      .def_readonly("model_constant", &FormSpace::model_constant)
      .def("__repr__", [](const FormSpace& s) { return "<FormSpace " + s.name + ">"; });

  m.def("euclidean3", &euclidean3);
  m.def("sphere3", &sphere3);
  m.def("hyperbolic3", &hyperbolic3);
  m.def("minkowski21", &minkowski21);
  m.def("de_sitter3", &de_sitter3);
  m.def("anti_de_sitter3", &anti_de_sitter3);
  m.def("hyperbolic2", &hyperbolic2);

  m.def("form_eval", &form_eval, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("on_model", &on_model, py::arg("space"), py::arg("x"), py::arg("tol") = kEpsGeom);
  m.def("geodesic_distance", &geodesic_distance, py::arg("space"), py::arg("a"),
        py::arg("b"));
  m.def("klein_project", &klein_project, py::arg("p"));
  m.def("klein_lift", &klein_lift, py::arg("k"));
  m.def("hilbert_distance", &hilbert_distance, py::arg("x"), py::arg("y"));
  m.def("halfspace_to_hyperboloid", &halfspace_to_hyperboloid, py::arg("u"), py::arg("v"),
        py::arg("h"));
  m.def("halfspace_to_klein", &halfspace_to_klein, py::arg("u"), py::arg("v"),
        py::arg("h"));

  // --- discrete groups -------------------------------------------------------
  py::class_<Isometry>(m, "Isometry")
      .def_readonly("matrix", &Isometry::matrix)
      .def_readonly("space", &Isometry::space)
      .def_readonly("label", &Isometry::label);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def_readonly("generators", &GroupSpec::generators)
      .def_readonly("kind", &GroupSpec::kind);

  py::class_<OrbitPoint>(m, "OrbitPoint")
      .def_readonly("coords", &OrbitPoint::coords)
      .def_readonly("word", &OrbitPoint::word);

  m.def("octagon_fuchsian_generators", &octagon_fuchsian_generators);
  m.def("octagon_relation_word", &octagon_relation_word);
  m.def("parabolic_square_generators", &parabolic_square_generators);
  m.def("invert_word", &invert_word, py::arg("word"));
  m.def("word_isometry", &word_isometry, py::arg("spec"), py::arg("word"));
  m.def("form_preservation_residual", &form_preservation_residual, py::arg("g"));
  m.def("orbit", &orbit, py::arg("spec"), py::arg("p"), py::arg("depth"));

  // --- convex hulls ----------------------------------------------------------
  py::enum_<Chart>(m, "Chart")
      .value("Euclidean", Chart::Euclidean)
      .value("Minkowski", Chart::Minkowski)
      .value("Klein", Chart::Klein)
      .value("DeSitter", Chart::DeSitter);

  py::class_<SurfaceEdge>(m, "SurfaceEdge")
      .def_readonly("v0", &SurfaceEdge::v0)
      .def_readonly("v1", &SurfaceEdge::v1)
      .def_readonly("f0", &SurfaceEdge::f0)
      .def_readonly("f1", &SurfaceEdge::f1);

  py::class_<PolyhedralSurface>(m, "PolyhedralSurface")
      .def_readonly("chart", &PolyhedralSurface::chart)
      .def_readonly("vertices", &PolyhedralSurface::vertices)
      .def_readonly("words", &PolyhedralSurface::words)
      .def_readonly("faces", &PolyhedralSurface::faces)
      .def_readonly("edges", &PolyhedralSurface::edges)
      .def_readonly("stable_mask", &PolyhedralSurface::stable_mask)
      .def_readonly("closed", &PolyhedralSurface::closed)
      .def_readonly("doubly_covered", &PolyhedralSurface::doubly_covered)
      .def("__repr__", [](const PolyhedralSurface& s) {
        return "<PolyhedralSurface " + chart_name(s.chart) + " V=" +
               std::to_string(s.vertices.size()) + " F=" + std::to_string(s.faces.size()) +
               ">";
      });

  m.def("chart_name", &chart_name, py::arg("chart"));
  m.def("convex_hull", &convex_hull, py::arg("points"), py::arg("chart"),
        py::arg("words") = std::vector<std::string>{}, py::arg("depth") = -1);
  m.def("lower_hull_fuchsian", &lower_hull_fuchsian, py::arg("orbit"), py::arg("depth"));
  m.def("face_unit_normal", &face_unit_normal, py::arg("surface"), py::arg("face"));
  m.def("face_plane_offset", &face_plane_offset, py::arg("surface"), py::arg("face"));
  m.def("face_space_like", &face_space_like, py::arg("surface"), py::arg("face"));

  py::class_<EquivarianceReport>(m, "EquivarianceReport")
      .def_readonly("checked_faces", &EquivarianceReport::checked_faces)
      .def_readonly("violations", &EquivarianceReport::violations);

  m.def("equivariance_check", &equivariance_check, py::arg("surface"), py::arg("spec"));

  // --- cone metrics ----------------------------------------------------------
  py::class_<FaceGeometry>(m, "FaceGeometry")
      .def_readonly("edge_lengths", &FaceGeometry::edge_lengths)
      .def_readonly("angles", &FaceGeometry::angles)
      .def_readonly("area", &FaceGeometry::area);

  py::class_<ConePoint>(m, "ConePoint")
      .def_readonly("vertex", &ConePoint::vertex)
      .def_readonly("theta", &ConePoint::theta)
      .def_readonly("k", &ConePoint::k);

  py::class_<CellCounts>(m, "CellCounts")
      .def_readonly("vertices", &CellCounts::vertices)
      .def_readonly("edges", &CellCounts::edges)
      .def_readonly("faces", &CellCounts::faces);

  py::class_<ConeMetricReport>(m, "ConeMetricReport")
      .def_readonly("curvature", &ConeMetricReport::curvature)
      .def_readonly("epsilon", &ConeMetricReport::epsilon)
      .def_readonly("genus", &ConeMetricReport::genus)
      .def_readonly("cone_points", &ConeMetricReport::cone_points)
      .def_readonly("total_area", &ConeMetricReport::total_area)
      .def_readonly("gb_residual", &ConeMetricReport::gb_residual)
      .def_readonly("has_large_flag", &ConeMetricReport::has_large_flag)
      .def_readonly("large_flag", &ConeMetricReport::large_flag)
      .def_readonly("cells", &ConeMetricReport::cells)
      .def_readonly("euler_characteristic", &ConeMetricReport::euler_characteristic);

  m.def("face_geometry", &face_geometry, py::arg("surface"), py::arg("face"));
  m.def("cone_angles", &cone_angles, py::arg("surface"));
  m.def("surface_metric", &surface_metric, py::arg("surface"));
  m.def("quotient_metric", &quotient_metric, py::arg("surface"), py::arg("spec"),
        py::arg("depth"));
  m.def("classify", &classify, py::arg("report"));
  m.def("classify_description", &classify_description, py::arg("row"));

  // --- polar duality ---------------------------------------------------------
  m.def("polar_poles", &polar_poles, py::arg("surface"));
  m.def("polar_dual", &polar_dual, py::arg("surface"));
  m.def("dual_metric", &dual_metric, py::arg("dual"));
  m.def("dihedral_angle", &dihedral_angle, py::arg("surface"), py::arg("edge"));
  m.def("involution_residual", &involution_residual, py::arg("surface"));

  py::enum_<VertexClass>(m, "VertexClass")
      .value("Finite", VertexClass::Finite)
      .value("Ideal", VertexClass::Ideal)
      .value("Hyperideal", VertexClass::Hyperideal);

  py::class_<TruncationPlane>(m, "TruncationPlane")
      .def_readonly("vertex", &TruncationPlane::vertex)
      .def_readonly("normal", &TruncationPlane::normal)
      .def_readonly("offset", &TruncationPlane::offset);

  py::class_<GeneralizedVertexReport>(m, "GeneralizedVertexReport")
      .def_readonly("classes", &GeneralizedVertexReport::classes)
      .def_readonly("finite_count", &GeneralizedVertexReport::finite_count)
      .def_readonly("ideal_count", &GeneralizedVertexReport::ideal_count)
      .def_readonly("hyperideal_count", &GeneralizedVertexReport::hyperideal_count)
      .def_readonly("truncations", &GeneralizedVertexReport::truncations);

  m.def("truncate_and_classify", &truncate_and_classify, py::arg("vertices"));
  m.def("vertex_class_name", &vertex_class_name, py::arg("vertex_class"));

  // --- rigidity --------------------------------------------------------------
  py::class_<RigidityReport>(m, "RigidityReport")
      .def_readonly("face_count", &RigidityReport::face_count)
      .def_readonly("interior_edge_count", &RigidityReport::interior_edge_count)
      .def_readonly("matrix_rows", &RigidityReport::matrix_rows)
      .def_readonly("matrix_cols", &RigidityReport::matrix_cols)
      .def_readonly("rank", &RigidityReport::rank)
      .def_readonly("kernel_dim", &RigidityReport::kernel_dim)
      .def_readonly("singular_tail", &RigidityReport::singular_tail);

  py::class_<ProjectiveInvarianceReport>(m, "ProjectiveInvarianceReport")
      .def_readonly("base_dim", &ProjectiveInvarianceReport::base_dim)
      .def_readonly("trials", &ProjectiveInvarianceReport::trials)
      .def_readonly("min_dim", &ProjectiveInvarianceReport::min_dim)
      .def_readonly("max_dim", &ProjectiveInvarianceReport::max_dim)
      .def_readonly("invariant", &ProjectiveInvarianceReport::invariant);

  m.def("deformation_space", &deformation_space, py::arg("surface"));
  m.def("apply_projective_map", &apply_projective_map, py::arg("surface"), py::arg("map"));
  m.def("projective_invariance_check", &projective_invariance_check, py::arg("surface"),
        py::arg("trials"), py::arg("seed"));

  // --- scenes ----------------------------------------------------------------
  py::class_<SceneConfig>(m, "SceneConfig")
      .def(py::init<>())
      .def_readwrite("scene", &SceneConfig::scene)
      .def_readwrite("depth", &SceneConfig::depth)
      .def_readwrite("base_point", &SceneConfig::base_point)
      .def_readwrite("seed", &SceneConfig::seed)
      .def_readwrite("export_obj", &SceneConfig::export_obj)
      .def_readwrite("export_json", &SceneConfig::export_json)
      .def_readwrite("out_dir", &SceneConfig::out_dir)
      .def_readwrite("preset", &SceneConfig::preset);

  m.def("scene_names", &scene_names);
  m.def("generalized_presets", &generalized_presets);
  m.def(
      "run_scene",
      [](const SceneConfig& cfg) {
        const SceneResult res = run_scene(cfg);
        return py::make_tuple(res.report.dump(2), res.written_files, res.elapsed_ms);
      },
      py::arg("config"),
      "Run a scene; returns (report_json, written_files, elapsed_ms).");
  m.def(
      "verify_all",
      [](uint64_t seed, double tolerance_scale, const std::string& out_dir) {
        py::scoped_ostream_redirect redirect(std::cout, py::module_::import("sys").attr("stdout"));
        return verify_all(seed, tolerance_scale, out_dir, std::cout);
      },
      py::arg("seed") = 0, py::arg("tolerance_scale") = 1.0, py::arg("out_dir") = "out",
      "Run the acceptance criteria; returns 0 when all pass.");
}
