"""Settings from CHEVLAB_* variables and their use as run-config defaults."""
from chevlab.config import Settings, settings
from chevlab.runner.models import Command, RunConfig


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("CHEVLAB_BUDGET_COSETS", raising=False)
        fresh = Settings(_env_file=None)
        assert fresh.budget_cosets == 5_000_000
        assert fresh.max_presentation_ring == 8

    def test_environment_prefix(self, monkeypatch):
        monkeypatch.setenv("CHEVLAB_BUDGET_BFS", "1234")
        monkeypatch.setenv("CHEVLAB_MAX_PRESENTATION_RING", "4")
        fresh = Settings(_env_file=None)
        assert fresh.budget_bfs == 1234
        assert fresh.max_presentation_ring == 4

    def test_run_config_reads_budgets(self, monkeypatch):
        monkeypatch.setattr(settings, "budget_cosets", 777)
        assert RunConfig(command=Command.K2).budget_cosets == 777
        assert RunConfig(command=Command.K2, budget_cosets=5).budget_cosets == 5
