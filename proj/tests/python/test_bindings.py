import math

import pytest

import dlbf


def test_filter_round_trip():
    f = dlbf.DeletableBloomFilter(m=240, r=24, k=5, seed=42)
    assert f.params.data_bits == 216
    assert f.params.region_width == 9
    assert not f.query("x")
    f.insert("x")
    assert "x" in f
    assert f.indices("x") == [80, 142, 185, 16, 176]
    assert f.bit_counts() == (5, 0)
    blob = f.serialize()
    assert len(blob) == 26 + 3 + 27
    assert dlbf.DeletableBloomFilter.deserialize(blob) == f
    assert f.remove("x") == dlbf.RemoveOutcome.Deleted
    assert not f.query("x")
    assert f.remove("x") == dlbf.RemoveOutcome.NotPresent


def test_bytes_elements_match_str():
    f = dlbf.DeletableBloomFilter(m=240, r=24, k=5, seed=42)
    f.insert(b"x")
    assert f.query("x")


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        dlbf.DeletableBloomFilter(m=16, r=16, k=2)
    with pytest.raises(dlbf.ParseError):
        dlbf.DeletableBloomFilter.deserialize(b"XXXX")
    with pytest.raises(IndexError):
        dlbf.DeletableBloomFilter(m=240, r=24, k=5).region_of(216)
    with pytest.raises(ValueError):
        dlbf.fpr_sbf(m=0, k=5, n=1)


def test_model_values():
    p0, p1, pc = dlbf.cell_probabilities(216, 5, 22)
    assert math.isclose(p0 + p1 + pc, 1.0, abs_tol=1e-12)
    assert math.isclose(dlbf.deletability_probability(m=240, r=24, k=5, n=22), 0.932499, abs_tol=1e-6)
    assert math.isclose(dlbf.fpr_dlbf(m=240, r=24, k=5, n=22), 0.0102105, abs_tol=1e-7)
    row = dlbf.model(m=240, r=24, k=5, n=0)
    assert row["pd"] == 1.0 and row["density"] is None
    curve = dlbf.deletability_curve(m=240, ratios=[10, 20], k=5, densities=[8, 16, 24])
    assert len(curve) == 6


def test_simulation_is_deterministic():
    a = dlbf.run_experiment(trials=200, threads=1)
    b = dlbf.run_experiment(trials=200, threads=3)
    assert a == b
    assert 0.7 < a["deletable"]["mean"] < 0.9
    sbf = dlbf.run_sbf_baseline(trials=200)
    assert sbf["fpr_before"]["mean"] <= a["fpr_before"]["mean"]


def test_figure_dataset():
    rows = dlbf.figure_dataset("fig3", trials=20, n_values=[10, 30], r_values=[24])
    assert [r["n"] for r in rows] == [10, 30]
    with pytest.raises(ValueError):
        dlbf.figure_dataset("fig9")


def test_oracle_agrees_with_filter():
    params = dlbf.FilterParams(32, 4, 3, seed=7)
    f = dlbf.DeletableBloomFilter(params)
    o = dlbf.ReferenceOracle(params)
    for e in ("x", "y", "z"):
        f.insert(e)
        o.insert(e)
    assert f.collision_bitmap == o.marked_regions
    for e in ("x", "y", "z"):
        assert o.classify(e) == dlbf.DeletableBloomFilter.deserialize(f.serialize()).remove(e)
