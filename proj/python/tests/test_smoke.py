from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import preproj

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def fixture(name):
    return preproj.load(FIXTURES / f"{name}.alg")


def test_compute_round_trip():
    r = preproj.compute(fixture("a4_ab_bc"))
    assert r["global-dimension"] == "3"
    assert r["new-arrow.1"] == "alpha.beta.gamma^v : 4 -> 1"
    again = preproj.normalize(r.text())
    assert again == r.presentation


def test_classify_and_status():
    assert preproj.classify(fixture("kronecker"))["classification"] == "d-RI (certified to 8)"
    r = preproj.classify(fixture("beilinson"), bound=30, dim_cap=3000)
    assert r.status == 3


def test_certify_type_a():
    r = preproj.certify(preproj.typea(2, 3).text())
    assert r["almost-koszul"] == "(2,3)"
    assert r["self-injective"] == "yes"


def test_jacobi_order_range():
    with pytest.raises(ValueError):
        preproj.jacobi(fixture("a4_ab_bc"), 9)


def test_parse_error():
    with pytest.raises(ValueError, match="line 2"):
        preproj.compute("vertices 1 2\narrow a : 1 -> 3\n")


def test_field_change():
    q = preproj.graded_dims(fixture("beilinson"), 6)
    f = preproj.graded_dims(fixture("beilinson"), 6, p=101)
    assert q == f
    with pytest.raises(ValueError):
        preproj.compute(fixture("a2"), p=9)


def linear_quiver(n, zero_relations):
    lines = ["vertices " + " ".join(str(i) for i in range(1, n + 1))]
    lines += [f"arrow a{i} : {i} -> {i + 1}" for i in range(1, n)]
    lines += [f"relation a{i}*a{i + 1}" for i in zero_relations]
    return "\n".join(lines) + "\n"


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=7).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(min_value=1, max_value=max(1, n - 2))))))
def test_linear_quivers(case):
    n, zeros = case
    zeros = {i for i in zeros if i + 1 < n}
    text = linear_quiver(n, zeros)
    dims = preproj.graded_dims(text, 20)
    # a path survives unless it passes through a zero relation
    paths = [0] * n
    for s in range(1, n + 1):
        for t in range(s, n + 1):
            if not any(s <= i and i + 2 <= t for i in zeros):
                paths[t - s] += 1
    while paths and paths[-1] == 0:
        paths.pop()
    assert dims == paths
    r = preproj.compute(text)
    # every monomial quadratic algebra on a line is Koszul, with one new arrow per top generator
    assert r["koszul"] == "yes"
    assert int(r["global-dimension"]) >= 1
