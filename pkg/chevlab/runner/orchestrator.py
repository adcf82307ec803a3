"""
Suite Orchestrator — dispatches one RunConfig to its suite and, for the
`suite` command, runs the acceptance instances in order:
1. VERIFY    — (R1)/(R2), h-multiplicativity and transport signs
2. WORDS     — ring reconstruction and B2/G2 transport maps
3. ENUMERATE — G(R)⁺ = G(R) against the direct SL3 count
4. BIGCELL   — census over SL3(F2)
5. K2        — coset enumeration, symbols, local product
6. FILTRATION — congruence quotients and commutator levels
"""
import logging
import time
from typing import Dict, List, Tuple

from chevlab.algebra.errors import ChevlabError
from chevlab.config import settings
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites import all_suites

logger = logging.getLogger(__name__)

FIVE = [("A2", "Z/5"), ("A2", "Z/4"), ("A2", "F3[x]/(x^2)"), ("B2", "Z/5"), ("G2", "Z/7")]

ACCEPTANCE: List[Tuple[str, Command, List[dict]]] = [
    ("VERIFY", Command.VERIFY, [{"phi": phi, "ring": ring} for phi, ring in FIVE]),
    ("WORDS", Command.WORDS, [{"phi": phi, "ring": ring} for phi, ring in FIVE]),
    ("ENUMERATE", Command.ENUMERATE, [{"phi": "A2", "ring": r} for r in ("F2", "F3", "Z/4", "Z/6")]),
    ("BIGCELL", Command.BIGCELL, [{"phi": "A2", "ring": "F2"}]),
    ("K2", Command.K2, [{"phi": "A2", "ring": r} for r in ("F2", "F3", "Z/4", "Z/6")]),
    ("FILTRATION", Command.FILTRATION, [
        {"phi": "A2", "ring": "F3[x]/(x^2)", "level": 1},
        {"phi": "A2", "ring": "F3[x]/(x^3)", "level": 1, "s": 1, "t": 1},
    ]),
]


class SuiteOrchestrator:
    """Runs suites and turns chevlab errors into failed reports."""

    def __init__(self):
        self.suites = all_suites()
        self.runs = 0

    def describe(self) -> List[dict]:
        listed = [suite.status() for suite in self.suites.values()]
        listed.append({"name": "suite", "command": Command.SUITE.value,
                       "description": "All acceptance instances in one combined report."})
        return listed

    def run(self, config: RunConfig) -> Report:
        self.runs += 1
        if config.command == Command.SUITE:
            return self.run_acceptance(config)
        suite = self.suites[config.command]
        logger.info(f"{'=' * 60}")
        logger.info(f"🚀 {config.command.value} {config.phi} over {config.ring} (seed {config.seed})")
        logger.info(f"{'=' * 60}")
        started = time.perf_counter()
        try:
            report = suite.run(config)
        except ChevlabError as e:
            logger.error(f"❌ {config.command.value}: {type(e).__name__}: {e}")
            report = Report(command=config.command.value, inputs=config.inputs(),
                            error=f"{type(e).__name__}: {e}")
        seconds = time.perf_counter() - started
        if settings.include_timings:
            report.timings = {"total_seconds": round(seconds, 3)}
        failed = [c.name for c in report.checks if not c.passed]
        logger.info(f"{'✅' if report.passed else '❌'} {config.command.value} finished in {seconds:.2f}s"
                    + (f"; failed: {', '.join(failed)}" if failed else ""))
        return report

    def run_acceptance(self, config: RunConfig) -> Report:
        """Every acceptance instance in order, merged into one report."""
        combined = Report(command=Command.SUITE.value, inputs=config.inputs())
        runs: List[Dict[str, object]] = []
        timings: Dict[str, float] = {}
        for step, (title, command, instances) in enumerate(ACCEPTANCE, start=1):
            # ── STEP n ──────────────────────────────────────
            logger.info(f"📐 Step {step}: {title} — {len(instances)} instance(s)")
            for overrides in instances:
                sub = config.model_copy(update={"command": command, "out": None, "dump": None, **overrides})
                started = time.perf_counter()
                report = self.run(sub)
                tag = f"{command.value} {sub.phi} {sub.ring}"
                timings[tag] = round(time.perf_counter() - started, 3)
                for check in report.checks:
                    combined.checks.append(check.model_copy(update={"name": f"{tag}: {check.name}"}))
                for key, value in report.counts.items():
                    combined.counts[f"{tag}: {key}"] = value
                runs.append({"command": command.value, "phi": sub.phi, "ring": sub.ring,
                             "passed": report.passed, "error": report.error})
                if report.error:
                    combined.check(f"{tag}: completed", False, report.error)
        combined.tables["runs"] = runs
        if settings.include_timings:
            combined.timings = timings
        logger.info(f"{'✅' if combined.passed else '❌'} acceptance: "
                    f"{sum(r['passed'] for r in runs)}/{len(runs)} runs passed")
        return combined
