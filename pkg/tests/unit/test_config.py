import json

import pytest

from optbench.api.config import DEParams, NelderMeadParams
from optbench.config import check_manifest, load_manifest
from optbench.exceptions import ManifestException


def test_minimal_manifest_defaults():
    manifest = check_manifest({"functions": [137], "optimizers": ["random_search"]})
    assert [s.slug for s in manifest.functions] == ["sphere"]
    assert manifest.budget == 1000
    assert manifest.seeds == [0]
    assert manifest.dimensions is None
    assert manifest.dimensions_for(manifest.functions[0]) == [2]


def test_optimizer_aliases_and_params():
    manifest = check_manifest(
        {
            "functions": ["beale"],
            "optimizers": ["nelder-mead", {"name": "de", "params": {"f": 0.7, "cr": "0.5", "population_factor": 5.0}}, "Random-Search"],
        }
    )
    names = [o.name for o in manifest.optimizers]
    assert names == ["nelder_mead", "differential_evolution", "random_search"]
    assert manifest.optimizers[0].params == NelderMeadParams()
    assert manifest.optimizers[1].params == DEParams(f=0.7, cr=0.5, population_factor=5)
    assert manifest.optimizers[1].as_dict()["params"]["population_factor"] == 5


def test_all_problems_reported_together():
    with pytest.raises(ManifestException) as exc:
        check_manifest(
            {
                "functions": ["no-such-function", "beale"],
                "optimizers": ["simulated-annealing", {"name": "de", "params": {"f": "fast"}}, {"name": "random_search", "params": {"x": 1}}],
                "budget": 0,
                "seeds": [-1],
                "colour": "blue",
            }
        )
    errors = exc.value.errors
    assert len(errors) >= 6
    joined = "\n".join(errors)
    for fragment in ("colour", "no-such-function", "simulated-annealing", "'f'", "takes no parameters", "budget", "seeds"):
        assert fragment in joined
    assert "ManifestException" in exc.value.pretty_print_str()


def test_dimension_rules_checked():
    with pytest.raises(ManifestException) as exc:
        check_manifest({"functions": ["beale"], "optimizers": ["random_search"], "dimensions": [3]})
    assert "accepts none of the dimensions" in exc.value.errors[0]
    manifest = check_manifest({"functions": ["sphere", "beale"], "optimizers": [], "dimensions": [2, 4]})
    assert manifest.dimensions_for(manifest.functions[0]) == [2, 4]
    assert manifest.dimensions_for(manifest.functions[1]) == [2]


def test_divisibility_rule_checked():
    with pytest.raises(ManifestException) as exc:
        check_manifest({"functions": ["powell-singular", "sphere"], "optimizers": ["random_search"], "dimensions": [5], "budget": 10})
    assert len(exc.value.errors) == 1
    assert "f91" in exc.value.errors[0]
    manifest = check_manifest({"functions": ["powell-singular", "powell-singular-2"], "optimizers": ["random_search"], "dimensions": [4, 5], "budget": 10})
    assert manifest.dimensions_for(manifest.functions[0]) == [4]
    assert manifest.dimensions_for(manifest.functions[1]) == [4, 5]


def test_differential_evolution_budget_covers_population():
    with pytest.raises(ManifestException) as exc:
        check_manifest({"functions": ["sphere"], "optimizers": ["de"], "dimensions": [5], "budget": 40})
    assert "DE population 50" in exc.value.errors[0]


def test_type_checks():
    for raw in ([], {"budget": True}, {"budget": 1.5}, {"seeds": "0"}, {"thresholds": {"beale": "low"}}, {"functions": "beale"}):
        with pytest.raises(ManifestException):
            check_manifest(raw)


def test_thresholds_by_any_key():
    manifest = check_manifest({"thresholds": {"beale": 0.01, "137": 1, "f5": -2}})
    assert manifest.thresholds == {10: 0.01, 137: 1.0, 5: -2.0}


def test_load_manifest(tmp_path):
    path = tmp_path / "suite.json"
    path.write_text(json.dumps({"functions": ["booth"], "optimizers": ["random_search"], "budget": 10, "seeds": [1, 2]}))
    manifest = load_manifest(path)
    assert manifest.seeds == [1, 2]
    with pytest.raises(ManifestException):
        load_manifest(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(ManifestException):
        load_manifest(broken)
