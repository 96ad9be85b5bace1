from app.core.config import settings

API = settings.API_V1_STR


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["api"] == API


def test_parse_shape(client, ten_grid):
    response = client.post(f"{API}/shape/parse", json={"grid": ten_grid})
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["cells"] == 12
    assert data["shape_class"] == "moon"


def test_parse_shape_rejects_gaps(client):
    response = client.post(f"{API}/shape/parse", json={"grid": "#.#"})
    assert response.status_code == 422
    assert "row" in response.json()["detail"]


def test_enumerate_shapes_pages(client):
    params = {"max_rows": 1, "max_cols": 3, "limit": 2}
    response = client.get(f"{API}/shape/enumerate", params=params)
    page = response.json()["data"]
    assert page["total"] == 3
    assert len(page["items"]) == 2
    assert page["next_skip"] == 2


def test_enumerate_fillings(client, ten_grid):
    response = client.post(f"{API}/filling/enumerate", json={"grid": ten_grid, "k": 1})
    assert response.status_code == 200
    assert response.json()["data"]["total"] == 10


def test_extremes(client, ten_grid):
    response = client.post(f"{API}/filling/extremes", json={"grid": ten_grid, "k": 1})
    data = response.json()["data"]
    assert data["permutation"] == "1,2,6,4,5,3"
    assert data["d_top"]["grid"] != data["d_bot"]["grid"]


def test_rc(client):
    response = client.get(f"{API}/pipedream/rc/1,4,3,2")
    assert response.json()["data"]["total"] == 5


def test_bb(client):
    data = client.get(f"{API}/pipedream/bb/1,3,2").json()["data"]
    assert data["top"]["crosses"] == [[1, 2]]
    assert data["bottom"]["crosses"] == [[2, 1]]


def test_bad_permutation(client):
    response = client.get(f"{API}/pipedream/rc/1,1,2")
    assert response.status_code == 422


def test_lattice(client):
    data = client.get(f"{API}/chute/lattice/w0(3)").json()["data"]
    assert data["is_lattice"]
    assert data["size"] == 1


def test_interval(client, ten_grid):
    body = {"grid": ten_grid, "k": 1}
    data = client.post(f"{API}/chute/interval", json=body).json()["data"]
    assert data["holds"]
    assert data["interval_size"] == 10


def test_schubert(client):
    data = client.get(f"{API}/schubert/1,3,2", params={"oracle": True}).json()["data"]
    assert data["text"] == "x1 + x2"
    assert data["oracle_agrees"] is True


def test_count(client):
    params = {"n": 8, "k": 2, "method": "determinant"}
    data = client.get(f"{API}/schubert/count", params=params).json()["data"]
    assert data["value"] == 84


def test_count_too_small(client):
    response = client.get(f"{API}/schubert/count", params={"n": 4, "k": 2})
    assert response.status_code == 422


def test_counterexample(client):
    data = client.get(f"{API}/eg/counterexample").json()["data"]
    assert data["p"] == [[3, 4, 5], [5]]
    assert data["witness_between"] and not data["witness_in_image"]


def test_eg_pairs(client, ten_grid):
    response = client.post(f"{API}/eg/pair", json={"grid": ten_grid, "k": 1})
    assert len(response.json()["data"]) == 10


def test_diagonals(client):
    grid = "1111\n111\n11\n1"
    response = client.post(f"{API}/bijection/diagonals", json={"grid": grid, "k": 1})
    # the all-ones filling holds crossing diagonals
    data = response.json()["data"]
    assert data["n"] == 5
    assert len(data["diagonals"]) == 5
    assert not data["is_triangulation"]


def test_fan(client):
    grid = "110\n.11\n..1"
    data = client.post(f"{API}/bijection/fan", json={"grid": grid, "k": 1}).json()["data"]
    assert data["paths"] == ["UDUD"]
