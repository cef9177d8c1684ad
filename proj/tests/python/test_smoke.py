"""End-to-end smoke checks for the Python bindings."""

import json

import pytest

import spheredeg as sd


def theta():
    return sd.GenusGraph(
        [sd.GraphVertex(0, basepoint=True), sd.GraphVertex(1)],
        [sd.GraphEdge(0, 0, 1), sd.GraphEdge(1, 0, 1), sd.GraphEdge(2, 0, 1)],
    )


def interval_disk_map():
    target = sd.additive_weight_filtration(
        sd.SimplicialComplex.from_facets([["a", "b", "c"]]),
        {"a": 0, "b": 1, "c": 0},
    )
    disk = sd.SimplicialComplex.from_facets([["p0", "p1"], ["p1", "p2"]])
    return sd.DiskMap(disk, 1, target, {"p0": "a", "p1": "b", "p2": "c"})


def test_graph_degree_and_collapse():
    g = theta()
    assert sd.validate_graph(g) == []
    assert sd.degree(g) == 1
    assert sorted(sd.pillar_edges(g)) == [0, 1, 2]
    collapsed = sd.collapse_edge(g, 0)
    assert sd.degree(collapsed) == 0  # pillar collapse strictly lowers
    assert sd.graph_stats(collapsed)["n"] == sd.graph_stats(g)["n"]
    assert sd.is_pillar(sd.pillar_graph(g))


def test_canonical_form_round_trip():
    g = theta()
    form = sd.canonical_form(g)
    assert sd.canonical_form(sd.graph_from_canonical(form)) == form


def test_enumeration_counts():
    assert len(sd.enumerate_types(1, 1)) == 1
    assert len(sd.enumerate_types(2, 1)) == 7


def test_verify_suite_passes():
    report = sd.verify_suite("degree-zero-roses", 3, 0)
    assert report.passed
    assert report.counterexamples == []


def test_homology_of_sphere_and_circle():
    circle = sd.SimplicialComplex.from_facets([["a", "b"], ["b", "c"], ["a", "c"]])
    assert sd.reduced_homology(circle) == [(0, []), (1, [])]
    sphere = sd.boundary_complex(
        sd.SimplicialComplex.from_facets([["a", "b", "c", "d"]]), 3
    )
    assert sd.is_combinatorial_sphere(sphere, 2) == sd.Recognition.Yes
    assert sd.reduced_homology(sphere) == [(0, []), (0, []), (1, [])]


def test_filtration_from_graph_matches_degree():
    g = theta()
    f = sd.DegreeFilteredComplex.from_graph(g)
    assert f.deg(["0", "1", "2"]) == sd.degree(g)
    assert sd.validate_filtration(f) == []
    assert sd.derived_pillar(f, ["0", "1", "2"]) == ["0", "1", "2"]


def test_surgery_descent_on_interval():
    f = interval_disk_map()
    assert sd.validate_disk_map(f) == []
    bads = sd.bad_simplices(f, 0)
    assert [(b.simplex, b.image, b.deg) for b in bads] == [(["p1"], ["b"], 1)]
    result = sd.surgery_descent(f, 0)
    assert len(result.trace) == 1
    assert list(result.final_measure) == [0, -1, 0]
    assert result.final_map.disk.facets == [["p0", "p2"]]


def test_planted_descents_pass():
    report = sd.run_planted_descents(8)
    assert report.passed
    assert report.instances_checked == 8


def test_json_round_trip():
    g = theta()
    text = sd.graph_to_json(g)
    parsed = json.loads(text)
    assert {v["id"] for v in parsed["vertices"]} == {0, 1}
    back = sd.graph_from_json(text)
    assert sd.canonical_form(back) == sd.canonical_form(g)

    f = interval_disk_map()
    back_map = sd.disk_map_from_json(sd.disk_map_to_json(f))
    assert back_map.vertex_map == f.vertex_map


def test_errors_are_python_exceptions():
    with pytest.raises(sd.SchemaError):
        sd.SimplicialComplex.from_facets([])
    with pytest.raises(sd.Error):
        sd.graph_from_json("{}")
    bad = sd.GenusGraph([], [])
    assert any(rule == "no-vertices" for rule, _ in sd.validate_graph(bad))


def test_run_command_in_process(tmp_path):
    out = tmp_path / "census.json"
    report = sd.run_command(
        "enumerate", n=2, max_degree=1, output_path=str(out)
    )
    assert report["exit_code"] == 0
    summary = json.loads(report["summary"])
    assert summary["count"] == 7
    assert json.loads(out.read_text())["summary"]["count"] == 7
