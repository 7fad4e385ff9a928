import pytest
from fastapi.testclient import TestClient

from hooklab import __version__
from hooklab.exact import PolyQ
from hooklab.service import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": __version__}


def test_partitions_endpoint():
    response = client.get("/partitions/4")
    assert response.status_code == 200
    body = response.json()
    assert body["n"] == 4
    assert body["count"] == 5
    assert body["partitions"] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_partitions_zero():
    body = client.get("/partitions/0").json()
    assert body["count"] == 1
    assert body["partitions"] == [[]]


def test_partitions_rejects_bad_input():
    assert client.get("/partitions/-1").status_code == 400
    response = client.get("/partitions/51")
    assert response.status_code == 400
    assert "capped" in response.json()["detail"]
    assert client.get("/partitions/xyz").status_code == 422


def test_value_endpoint():
    body = {
        "expression": "e[1](x)*e[1](y)",
        "alphabets": {"x": "contents", "y": "contents"},
        "n": 3,
    }
    response = client.post("/value", json=body)
    assert response.status_code == 200
    assert response.json() == {"expression": "e[1](x)*e[1](y)", "n": 3, "value": "3"}


def test_value_returns_exact_rationals():
    body = {"expression": "p[2](y)", "alphabets": {"y": "parts"}, "n": 3}
    assert client.post("/value", json=body).json()["value"] == "16/3"


def test_value_error_paths():
    bad_kind = {"expression": "e[1](x)", "alphabets": {"x": "rows"}, "n": 2}
    response = client.post("/value", json=bad_kind)
    assert response.status_code == 400
    assert "unknown alphabet kind" in response.json()["detail"]

    unbound = {"expression": "e[1](x)", "alphabets": {}, "n": 2}
    assert client.post("/value", json=unbound).status_code == 400

    unparsable = {"expression": "e[", "alphabets": {"x": "contents"}, "n": 2}
    assert client.post("/value", json=unparsable).status_code == 400

    negative = {"expression": "e[1](x)", "alphabets": {"x": "contents"}, "n": -1}
    assert client.post("/value", json=negative).status_code == 422


def test_fit_endpoint():
    body = {"expression": "e[1,1](x)", "alphabets": {"x": "contents"}, "degree_hint": None}
    response = client.post("/fit", json=body)
    assert response.status_code == 200
    assert response.json() == {
        "polynomial": ["0", "-1/2", "1/2"],
        "degree": 2,
        "samples": [0, 1, 2],
        "verified": True,
    }


def test_fit_reports_non_polynomial():
    body = {"expression": "p[2](y)", "alphabets": {"y": "parts"}}
    payload = client.post("/fit", json=body).json()
    assert payload["verified"] is False
    assert payload["degree"] == 12


def test_tables_endpoint():
    response = client.get("/tables/nmu")
    assert response.status_code == 200
    body = response.json()
    assert body["name"] == "nmu"
    assert len(body["entries"]) == 11
    by_index = {tuple(e["index"]): e for e in body["entries"]}
    assert by_index[(1, 1)]["polynomial"] == ["0", "-1/2", "1/2"]
    assert by_index[(1, 1)]["pretty"] == "(n^2 - n)/2"
    assert by_index[(1, 1)]["degree"] == 2

    hooks = client.get("/tables/phimu").json()
    assert len(hooks["entries"]) == 6
    assert client.get("/tables/bogus").status_code == 404


def test_tables_surface_golden_mismatch_as_500(monkeypatch):
    import hooklab.goldens as goldens

    broken = dict(goldens.content_elementary_reference)
    broken[(1, 1)] = PolyQ((1,))
    monkeypatch.setattr(goldens, "content_elementary_reference", broken)
    response = client.get("/tables/nmu")
    assert response.status_code == 500
    assert "mismatch" in response.json()["detail"]


def test_series_endpoint():
    response = client.get("/series/cno-rhs", params={"truncation": 4})
    assert response.status_code == 200
    body = response.json()
    assert body == {
        "name": "cno-rhs",
        "truncation": 4,
        "coeffs": [
            ["1"],
            ["0", "1"],
            ["0", "1/2", "1/2"],
            ["0", "1/3", "1/2", "1/6"],
            ["0", "1/4", "11/24", "1/4", "1/24"],
        ],
    }
    default = client.get("/series/no-lhs").json()
    assert default["truncation"] == 10
    assert len(default["coeffs"]) == 11


def test_series_error_paths():
    assert client.get("/series/unknown").status_code == 404
    response = client.get("/series/cno-lhs", params={"truncation": 31})
    assert response.status_code == 400
    assert client.get("/series/cno-lhs", params={"truncation": "x"}).status_code == 422


def test_verify_endpoint():
    response = client.post("/verify", json={"checks": ["mset"], "max_n": 6})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert len(body["results"]) == 1
    result = body["results"][0]
    assert result["name"] == "mset"
    assert result["passed"] is True
    assert result["failures"] == []
    assert "mset" in body["elapsed_seconds"]


def test_verify_stable_across_jobs():
    request = {"checks": ["mset", "cauchy"], "max_n": 4, "seed": 5}
    one = client.post("/verify", json={**request, "jobs": 1}).json()
    four = client.post("/verify", json={**request, "jobs": 4}).json()
    assert one["results"] == four["results"]
    assert one["passed"] == four["passed"]


def test_verify_error_paths():
    assert client.post("/verify", json={"checks": ["nope"]}).status_code == 400
    assert client.post("/verify", json={"checks": ["mset"], "jobs": 0}).status_code == 422
