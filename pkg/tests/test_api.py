"""HTTP surface: health, suite listing and run endpoints."""
import pytest
from fastapi.testclient import TestClient

from chevlab.main import app


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c


class TestService:
    def test_health(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"

    def test_suites(self, client):
        listed = client.get("/api/suites").json()
        assert len(listed) == 8
        assert {s["command"] for s in listed} >= {"ring-info", "k2", "suite"}

    def test_not_initialized(self):
        assert TestClient(app).get("/api/suites").status_code == 503


class TestRuns:
    def test_ring_info(self, client):
        response = client.post("/api/run/ring-info", json={"ring": "Z/12"})
        assert response.status_code == 200
        body = response.json()
        assert body["command"] == "ring-info"
        assert body["counts"]["units"] == 4
        assert body["passed"] is True

    def test_enumerate(self, client):
        body = client.post("/api/run/enumerate", json={"ring": "F2"}).json()
        assert body["counts"]["order"] == 168

    def test_unknown_command(self, client):
        assert client.post("/api/run/solve", json={}).status_code == 404

    def test_report_error(self, client):
        response = client.post("/api/run/k2", json={"phi": "G2", "ring": "Z/6"})
        assert response.status_code == 400
        assert "NicePairViolation" in response.json()["detail"]

    def test_invalid_config(self, client):
        assert client.post("/api/run/filtration", json={"level": 0}).status_code == 422
