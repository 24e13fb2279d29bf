import math
import os

import pytest

import fincomp

FIXTURE = os.environ.get("FINCOMP_FIXTURE")


def test_version():
    assert fincomp.__version__ == "0.1.0"


def test_normalize():
    assert fincomp.normalize_positive([2, 4, 6]) == [0.0, 0.5, 1.0]
    assert fincomp.normalize_inverse([2, 4, 6]) == [1.0, 0.5, 0.0]
    assert fincomp.normalize_inverse([2, 4, 6], mode="paper-literal") == [0.0, -0.5, -1.0]


def test_cdf_and_entropy():
    cdf = fincomp.estimate_cdf([0.1, 0.3, 0.5, 0.7, 0.9])
    assert cdf.values[0] == 0.0
    assert cdf.values[-1] == 1.0
    assert cdf.sample_size == 5
    assert cdf.bandwidth > 0
    h = fincomp.continuous_entropy(cdf)
    assert 0.0 <= h <= 1.0 / math.e + 1e-12
    assert h == fincomp.column_entropy([0.1, 0.3, 0.5, 0.7, 0.9])


def test_discrete_entropy():
    assert fincomp.discrete_entropy([0.5, 0.5], 1.0 / math.log(2)) == pytest.approx(1.0)
    assert fincomp.column_entropy([1, 1, 1, 1], method="discrete") == pytest.approx(1.0)


def test_weights():
    w = fincomp.entropy_weights([1.0, 3.0])
    assert w == pytest.approx([0.25, 0.75])
    w = fincomp.entropy_weights([0.2, 0.6], rule="classic", method="discrete")
    assert sum(w) == pytest.approx(1.0)


def test_describe_and_pearson():
    d = fincomp.describe([1.0, 2.0, 3.0, 4.0])
    assert d["mean"] == 2.5
    assert d["median"] == 2.5
    assert d["obs"] == 4
    assert d["kurtosis"] == pytest.approx(-1.2)
    assert fincomp.pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)
    m = fincomp.pearson_matrix([[1, 2, 3], [3, 1, 2]], ["a", "b"])
    assert m["ids"] == ["a", "b"]
    assert m["values"][0][0] == 1.0
    assert m["values"][0][1] == m["values"][1][0]


def test_errors_are_typed():
    with pytest.raises(fincomp.FincompError):
        fincomp.normalize_positive([3.0, 3.0, 3.0])
    with pytest.raises(fincomp.FincompError):
        fincomp.discrete_entropy([0.5, 0.6], 1.0)


@pytest.mark.skipif(FIXTURE is None, reason="fixture path not provided")
def test_analyze_pipeline():
    result = fincomp.analyze(FIXTURE)
    rows = result["scores"]["rows"]
    assert len(rows) == 50
    assert rows[0]["rank"] == 1
    assert rows[0]["score"] >= rows[-1]["score"]
    weights = result["weights"]["entries"]
    assert len(weights) == 44
    assert sum(e["weight"] for e in weights) == pytest.approx(1.0, abs=1e-12)
    assert result["stats"]["obs"] == 50
    assert result["diagnostics"]["tool_version"] == fincomp.__version__


def test_registry():
    reg = fincomp.default_registry()
    assert len(reg) == 44
    assert sum(1 for s in reg if s["direction"] == "Inverse") == 10
    assert reg[0]["id"] == "opm"
