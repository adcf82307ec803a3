"""
Big cell — factor one given matrix, or run the census over all of G(R)⁺.
"""
import numpy as np

from chevlab.algebra.bigcell import NotInCell, bigcell_factor, cell_census, reassemble
from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.enumeration import enumerate_elementary
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class BigCellSuite(BaseSuite):
    """Ω = U⁻ T U⁺ membership and factorization."""

    command = Command.BIGCELL

    def __init__(self):
        super().__init__("bigcell")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        phi, ring = self.load(config)
        group = chevalley_group(phi, ring)

        if config.element is not None:
            matrix = group.ops.parse(config.element)
            outcome = bigcell_factor(group, matrix)
            if isinstance(outcome, NotInCell):
                report.tables["factorization"] = outcome.describe()
                self.logger.info(f"🔎 element is outside the big cell: {outcome.reason}")
            else:
                report.tables["factorization"] = outcome.describe(group)
                rebuilt = reassemble(group, outcome)
                report.check("factorization round trip", np.array_equal(rebuilt.matrix, matrix),
                             "ω⁻(u⁻) ω(t) ω⁺(u⁺) reproduces the input",
                             [] if np.array_equal(rebuilt.matrix, matrix) else [{"rebuilt": rebuilt.format()}])
            return report

        enumeration = enumerate_elementary(group, budget=config.budget_bfs)
        counts, checks = cell_census(group, enumeration.elements)
        report.counts = counts
        report.extend(checks)

        # simple reflections have a zero pivot
        outside = []
        for alpha in phi.simple_roots:
            w = group.w(alpha, ring.one)
            if not isinstance(bigcell_factor(group, w), NotInCell):
                outside.append({"root": alpha.label, "element": w.format()})
        report.check("simple reflections lie outside the big cell", not outside,
                     f"w_α(1) for {phi.rank} simple roots", outside)
        identity = bigcell_factor(group, group.identity)
        trivial = (not isinstance(identity, NotInCell)
                   and not any(identity.uminus) and not any(identity.uplus)
                   and all(t == ring.one for t in identity.torus))
        report.check("identity has the trivial factorization", trivial, "u⁻ = 0, t = 1, u⁺ = 0")
        return report
