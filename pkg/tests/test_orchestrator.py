"""Dispatch of run configs to suites and the combined acceptance run."""
import pytest

from chevlab.runner.models import Command, Report, RunConfig
from chevlab.runner.orchestrator import ACCEPTANCE, SuiteOrchestrator


@pytest.fixture(scope="module")
def orchestrator():
    return SuiteOrchestrator()


class TestDispatch:
    def test_every_command_has_a_suite(self, orchestrator):
        assert set(orchestrator.suites) == set(Command) - {Command.SUITE}
        assert len(orchestrator.describe()) == len(Command)

    def test_verify(self, orchestrator):
        report = orchestrator.run(RunConfig(command=Command.VERIFY, phi="G2", ring="Z/7"))
        assert report.passed, [c.name for c in report.checks if not c.passed]
        assert report.counts["dimension"] == 14
        assert report.tables["realization"] == "adjoint"

    def test_errors_become_reports(self, orchestrator):
        report = orchestrator.run(RunConfig(command=Command.RING_INFO, ring="Z/1"))
        assert not report.passed
        assert report.error.startswith("InvalidSpec")

    def test_runs_are_counted(self):
        fresh = SuiteOrchestrator()
        fresh.run(RunConfig(command=Command.RING_INFO, ring="Z/2"))
        assert fresh.runs == 1

    def test_identical_configs_give_identical_reports(self, orchestrator):
        config = RunConfig(command=Command.FILTRATION, ring="F3[x]/(x^3)", sample_pairs=10, seed=3)
        first, second = orchestrator.run(config), orchestrator.run(config)
        assert first.model_dump(exclude={"timings"}) == second.model_dump(exclude={"timings"})
        assert first.tables["quotient_check"].startswith("skipped")

    def test_levi_is_opt_in(self, orchestrator):
        config = RunConfig(command=Command.FILTRATION, ring="F2[x]/(x^2)", levi=True,
                           sample_pairs=5, equivariance_samples=5)
        report = orchestrator.run(config)
        assert report.counts["levi_order"] == 43008
        assert report.passed

    def test_k2_non_local_ring(self, orchestrator):
        report = orchestrator.run(RunConfig(command=Command.K2, ring="Z/2 x Z/2"))
        assert report.counts["k2_order"] == 1
        assert report.tables["symbol_generation"].startswith("skipped")
        assert report.passed


class TestReport:
    def test_passed_needs_no_error(self):
        assert Report(command="verify").passed
        assert not Report(command="verify", error="boom").passed

    def test_check_truncates_counterexamples(self):
        report = Report(command="verify")
        report.check("x", False, counterexamples=[{"i": i} for i in range(9)])
        assert len(report.checks[0].counterexamples) == 5
        assert not report.passed


class TestAcceptance:
    def test_instances(self):
        assert sum(len(instances) for _, _, instances in ACCEPTANCE) == 21

    @pytest.mark.slow
    def test_full_run(self, orchestrator):
        report = orchestrator.run(RunConfig(command=Command.SUITE))
        assert len(report.tables["runs"]) == 21
        assert report.passed, [c.name for c in report.checks if not c.passed]
