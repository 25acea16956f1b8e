import json
import math

import pytest

import spaceformpoly as sp


def cube_points(s):
    return [
        (sx * s, sy * s, sz * s)
        for sx in (-1, 1)
        for sy in (-1, 1)
        for sz in (-1, 1)
    ]


def test_forms_roundtrip():
    h3 = sp.hyperbolic3()
    assert h3.name == "H3"
    assert h3.signature == [1, 1, 1, -1]
    lifted = sp.klein_lift([0.2, -0.1, 0.4])
    assert sp.on_model(h3, lifted)
    assert sp.hilbert_distance([0, 0, 0], [0.5, 0, 0]) == pytest.approx(math.atanh(0.5))


def test_orbit_counts_and_relation():
    spec = sp.octagon_fuchsian_generators()
    assert [g.label for g in spec.generators] == ["a", "b", "c", "d"]
    pts = sp.orbit(spec, [0.0, 0.0, 1.0], 2)
    assert len(pts) == 65
    assert pts[0].word == ""
    rel = sp.word_isometry(spec, sp.octagon_relation_word())
    assert abs(rel.matrix - [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).max() < 1e-9


def test_hull_and_metric():
    hull = sp.convex_hull(cube_points(0.5), sp.Chart.Euclidean)
    assert len(hull.vertices) == 8
    assert len(hull.faces) == 6
    report = sp.surface_metric(hull)
    assert report.euler_characteristic == 2
    assert len(report.cone_points) == 8
    assert report.cone_points[0].k == pytest.approx(math.pi / 2)
    assert sp.classify(report) == 2


def test_polar_dual_row4():
    hull = sp.convex_hull(cube_points(0.6 / math.sqrt(3)), sp.Chart.Klein)
    dual = sp.polar_dual(hull)
    assert dual.chart == sp.Chart.DeSitter
    report = sp.dual_metric(dual)
    assert all(c.theta > 2 * math.pi for c in report.cone_points)
    assert report.cone_points[0].theta == pytest.approx(6.917418429730386)
    assert sp.classify(report) == 4
    assert sp.involution_residual(hull) < 1e-12


def test_truncation():
    rep = sp.truncate_and_classify(cube_points(0.65))
    assert rep.hyperideal_count == 8
    assert len(rep.truncations) == 8
    with pytest.raises(Exception):
        sp.truncate_and_classify(cube_points(0.9))


def test_rigidity():
    hull = sp.convex_hull(cube_points(1.0), sp.Chart.Euclidean)
    rep = sp.deformation_space(hull)
    assert rep.kernel_dim == 6
    assert rep.rank == rep.matrix_cols - 6


def test_scene_runs_in_memory(tmp_path):
    cfg = sp.SceneConfig()
    cfg.scene = "parabolic-torus"
    cfg.depth = 3
    cfg.out_dir = str(tmp_path)
    report_json, written, elapsed = sp.run_scene(cfg)
    report = json.loads(report_json)
    assert report["scene"] == "parabolic-torus"
    assert report["metric"]["classification_row"] == 5
    assert report["metric"]["cone_points"][0]["theta"] == pytest.approx(
        4.5115411308850311
    )
    assert any(name.endswith("report.json") for name in written)
    assert elapsed > 0
