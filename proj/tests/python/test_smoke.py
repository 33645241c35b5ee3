"""Smoke tests for the python bindings."""

import pytest

try:
    import augcheck as ag
except ImportError:
    import _augcheck as ag


def test_path_graph_is_simple_with_oracle_agreement():
    built = ag.construct({"kind": "graph", "vertices": 3, "edges": [[0, 1], [1, 2]]})
    assert built["degree"] == 3
    report = ag.check(built["degree"], built["generators"], field="gf:2", oracle=True)
    assert report["final"] == "simple"
    assert report["agreement"] is True
    assert report["oracle"]["ran"] is True


def test_power_set_monoid_fails_the_rank_condition():
    built = ag.construct({"kind": "boolean-lattice", "set_size": 2})
    report = ag.check(built["degree"], built["generators"], field="q")
    assert report["final"] == "not-simple"
    assert report["conditions"]["c4_incidence_rank"]["status"] == "fails"


def test_rook_monoid_goes_through_the_sink_path():
    built = ag.construct({"kind": "inverse", "n": 3})
    assert built["partial_with_sink"] is True
    report = ag.check(built["degree"], built["generators"], field="gf:3", oracle=True)
    assert report["path"] == "zero-transitive"
    assert report["final"] == "simple"
    assert report["agreement"] is True


def test_green_summary_counts_j_classes():
    summary = ag.green_summary(3, [[1, 2, 0], [1, 0, 2], [0, 0, 2]])
    assert summary["size"] == 27
    assert summary["counts"]["j_classes"] == 3


def test_matrix_rank_is_exact():
    rows = [[1, 1], [1, 0], [0, 1], [0, 0]]
    assert ag.matrix_rank(rows, field="q") == 2
    assert ag.matrix_rank([[1, 0, 1], [1, 1, 0], [0, 1, 1]], field="gf:2") == 2
    assert ag.matrix_rank([[1, 0, 1], [1, 1, 0], [0, 1, 1]], field="q") == 3


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ag.AugcheckError):
        ag.construct({"kind": "graph", "vertices": 4, "edges": [[0, 1], [2, 3]]})
    with pytest.raises(ag.AugcheckError):
        ag.check(3, [[1, 2, 0]], field="gf:4")
