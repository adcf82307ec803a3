"""
Filtration — congruence subgroups G(S, J^k) of a local ring: orders, the
quotients against copies of the Lie algebra, commutator levels and,
on request, the Levi decomposition.
"""
from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.congruence import (
    commutator_filtration_check,
    filtration_quotient_check,
    levi_check,
    lie_dimension,
)
from chevlab.algebra.finring import radical_filtration
from chevlab.config import settings
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class FiltrationSuite(BaseSuite):
    """Congruence filtration of G(S) for local S."""

    command = Command.FILTRATION

    def __init__(self):
        super().__init__("filtration")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        phi, ring = self.load(config)
        group = chevalley_group(phi, ring)
        filtration = radical_filtration(ring)
        q, d = filtration.residue_order, filtration.nilpotency
        dim = lie_dimension(group)
        report.tables["radical_chain"] = [{"k": level.k, "s_k": level.s} for level in filtration.levels]
        report.counts = {"residue_order": q, "nilpotency": d, "lie_dimension": dim}

        # |G(S, J^k)| = q^(dim · Σ_{i >= k} s_i)
        expected = q ** (dim * sum(level.s for level in filtration.levels[config.level - 1:]))
        if config.level < d and expected <= min(config.budget_bfs, settings.max_quotient_check_order):
            counts, checks = filtration_quotient_check(group, config.level, config.budget_bfs,
                                                       config.equivariance_samples, config.seed)
            report.counts.update(counts)
            report.extend(checks)
        else:
            reason = (f"level {config.level} is not below {d}" if config.level >= d
                      else f"|G(S, J^{config.level})| = {expected:,} exceeds the enumeration limit")
            report.tables["quotient_check"] = f"skipped: {reason}"
            self.logger.info(f"quotient check skipped: {reason}")

        report.extend([commutator_filtration_check(group, config.s, config.t, config.sample_pairs, config.seed)])

        if config.levi:
            counts, checks = levi_check(group, config.budget_bfs)
            report.counts.update({f"levi_{k}": v for k, v in counts.items()})
            report.extend(checks)
        return report
