import json
from pathlib import Path

import pandas as pd
import pytest

from optbench import registry
from optbench.exceptions import DimensionMismatch, UnknownFunction
from optbench.registry import (
    Bounds,
    Continuity,
    Differentiability,
    Fixed,
    FunctionId,
    Modality,
    OptimumStatus,
    PropertyFlags,
    Scalability,
    Scalable,
    Separability,
    catalog_export,
    get_catalog,
    lookup,
)

GOLDEN_HEADERS = Path(__file__).parent.parent / "golden" / "headers.csv"


def test_catalog_has_175_entries_in_order():
    catalog = get_catalog()
    assert len(catalog) == 175
    assert [s.index for s in catalog] == list(range(1, 176))
    assert len({s.slug for s in catalog}) == 175


def test_headers_match_golden_transcription():
    golden = pd.read_csv(GOLDEN_HEADERS)
    assert list(golden["index"]) == list(range(1, 176))
    mismatches = []
    for row in golden.itertuples():
        expected = PropertyFlags.from_header(row.header)
        if lookup(int(row.index)).flags != expected:
            mismatches.append((row.index, row.header, lookup(int(row.index)).flags.as_dict()))
    assert mismatches == []


def test_header_parsing():
    flags = PropertyFlags.from_header("Continuous, Differentiable, Non-Separable, Scalable, Multimodal")
    assert flags == PropertyFlags(
        Continuity.continuous, Differentiability.differentiable, Separability.non_separable, Scalability.scalable, Modality.multimodal
    )
    # missing comma and partial headers
    assert PropertyFlags.from_header("Continuous, Differentiable, Separable Scalable, Unimodal").scalability == Scalability.scalable
    partial = PropertyFlags.from_header("Non-separable")
    assert partial.separability == Separability.non_separable
    assert partial.continuity == Continuity.unstated
    assert PropertyFlags.from_header("Continuous, Differentiable, Separable?, Non-Scalable, Multimodal").separability == Separability.unstated
    with pytest.raises(ValueError):
        PropertyFlags.from_header("Continuous, Smooth")


def test_lookup_by_index_slug_and_id():
    assert lookup(137).slug == "sphere"
    assert lookup("f137").index == 137
    assert lookup("137").index == 137
    assert lookup("Sphere").index == 137
    assert lookup(FunctionId(10, "beale")).index == 10
    spec = lookup("egg-holder")
    assert lookup(spec) is spec
    for bad in ("no-such-function", 0, 176, FunctionId(10, "sphere"), 1.5):
        with pytest.raises(UnknownFunction):
            lookup(bad)


def test_function_id_validation():
    with pytest.raises(ValueError):
        FunctionId(0, "zero")
    with pytest.raises(ValueError):
        FunctionId(1, "Not A Slug")


def test_dimension_rules():
    assert Fixed(2).accepts(2) and not Fixed(2).accepts(3)
    rule = Scalable(2, 1, 10)
    assert rule.accepts(1) and rule.accepts(10) and not rule.accepts(11)
    assert lookup("langerman-5").dimension == Scalable(2, 1, 10)
    assert lookup("rosenbrock").dimension.min_n == 2
    with pytest.raises(DimensionMismatch):
        lookup("beale").check_dimension(3)
    with pytest.raises(ValueError):
        Scalable(1, 2)


def test_block_structured_dimension_rule():
    powell = lookup("powell-singular")
    assert powell.dimension.accepts(4) and powell.dimension.accepts(8)
    assert not powell.dimension.accepts(5)
    assert "multiple of 4" in powell.dimension.describe()
    assert powell.dimension.as_dict()["multiple_of"] == 4
    with pytest.raises(DimensionMismatch):
        powell.check_dimension(5)
    # the sliding-window variant is defined for any D >= 4
    assert lookup("powell-singular-2").dimension.accepts(5)
    at_five = [s.index for s in registry.filter(accepts=5)]
    assert 91 not in at_five and 92 in at_five
    with pytest.raises(ValueError):
        Scalable(6, 4, multiple_of=4)


def test_bounds():
    adjiman = lookup("adjiman").bounds
    lo, hi = adjiman.arrays(2)
    assert lo.tolist() == [-1, -1] and hi.tolist() == [2, 1]
    assert adjiman.contains((2, 1)) and not adjiman.contains((2.1, 0))
    assert adjiman.clamp((5, -5)).tolist() == [2, -1]
    sphere = lookup("sphere").bounds
    assert sphere.arrays(5)[1].tolist() == [10] * 5
    with pytest.raises(ValueError):
        Bounds.uniform(1, -1)


def test_known_bounds_transcription():
    assert lookup("sphere").bounds == Bounds.uniform(0, 10)
    assert lookup("egg-holder").bounds == Bounds.uniform(-512, 512)
    assert lookup("stepint").bounds == Bounds.uniform(-5.12, 5.12)
    assert lookup("branin-rcos").bounds == Bounds.per_coordinate((-5, 10), (0, 15))


def test_stochastic_entries():
    assert [s.index for s in registry.filter(stochastic=True)] == [100, 169]


def test_filter_step_family():
    found = registry.filter(modality=Modality.unimodal, separability=Separability.separable)
    indices = [s.index for s in found]
    assert {138, 139, 140, 141} <= set(indices)
    assert indices == sorted(indices)
    assert all(s.flags.modality == Modality.unimodal for s in found)


def test_filter_by_dimension():
    fixed_three = registry.filter(dimension=Fixed(3))
    assert all(s.dimension == Fixed(3) for s in fixed_three)
    assert 116 in [s.index for s in fixed_three]
    usable_at_ten = registry.filter(accepts=10)
    assert 137 in [s.index for s in usable_at_ten]
    assert 10 not in [s.index for s in usable_at_ten]


def test_optima_statuses():
    trecanni = lookup("trecanni")
    assert trecanni.optima[0].status == OptimumStatus.corrected
    assert trecanni.optima[0].points(2) == [(0.0, 0.0), (-2.0, 0.0)]
    assert lookup("alpine-2").optima[0].value_at(3) == pytest.approx(2.808**3)
    assert not lookup("powell-sum").concrete_optima


def test_catalog_export_json():
    text = catalog_export("json")
    records = json.loads(text)
    assert len(records) == 175
    assert [r["index"] for r in records] == list(range(1, 176))
    assert records[136]["slug"] == "sphere"
    assert records[136]["bounds"] == {"lower": [0.0, 0.0], "upper": [10.0, 10.0]}
    assert "evaluator" not in records[0]
    assert catalog_export("json") == text


def test_catalog_export_csv():
    text = catalog_export("csv")
    lines = text.split("\n")
    assert lines[0] == ",".join(registry.CSV_COLUMNS)
    assert len([line for line in lines if line]) == 176
    assert "\r" not in text
    with pytest.raises(ValueError):
        catalog_export("xml")
