"""
K2 — |St(Φ,R)| by coset enumeration against |G(R)⁺| by closure, with the
symbol calculus and the local-factor product when R is not local.
"""
from pathlib import Path

from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.finring import local_decomposition, unit_generated_subring
from chevlab.algebra.steinberg import (
    k2_local_product_check,
    k2_order,
    pi_S,
    presentation_soundness,
    symbol,
    symbol_generation_check,
    symbol_root,
)
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class K2Suite(BaseSuite):
    """Steinberg group order, K2 and Steinberg symbols."""

    command = Command.K2

    def __init__(self):
        super().__init__("k2")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        phi, ring = self.load(config)
        result = k2_order(phi, ring, config.subgroup, config.budget_cosets, config.budget_bfs)
        pres = result.presentation
        group = chevalley_group(phi, ring)

        report.extend([presentation_soundness(pres, group)])
        report.check("coset table closed", result.table.closed and result.table.relators_hold(),
                     f"{result.table.index:,} cosets, {result.table.defined:,} definitions")
        report.check("|St| is a multiple of |G⁺|", result.divides,
                     f"|St| = {result.st_order:,} = {result.table.index:,} · {result.subgroup_order:,}; "
                     f"|G⁺| = {result.group_order:,}")
        report.counts = result.counts()

        alpha = symbol_root(phi)
        generated = unit_generated_subring(ring).equals_whole
        if config.symbols and result.divides and generated:
            counts, checks = symbol_generation_check(result)
            report.counts.update(counts)
            report.extend(checks)
        else:
            if not generated:
                report.tables["symbol_generation"] = f"skipped: {ring.name} is not generated by its units"
            units = [u for u in ring.elements() if ring.is_unit(u)]
            outside = [
                {"u": ring.format(u), "v": ring.format(v)}
                for u in units for v in units
                if not pi_S(pres, group, symbol(pres, alpha, u, v)).is_identity()
            ]
            report.check("symbols lie in ker π_S", not outside,
                         f"{{u, v}}_{alpha.label} over {len(units) ** 2} unit pairs", outside)
        report.tables["symbol_root"] = alpha.label
        report.tables["generating_symbols"] = [
            {"u": ring.format(u), "v": ring.format(v)} for u, v in result.symbols
        ]

        if len(local_decomposition(ring).factors) > 1:
            counts, checks = k2_local_product_check(phi, ring, config.subgroup, config.budget_cosets,
                                                    config.budget_bfs, whole=result)
            report.counts.update({k: v for k, v in counts.items() if k not in report.counts})
            report.extend(checks)

        if config.dump:
            Path(f"{config.dump}.presentation.txt").write_text(pres.export())
            Path(f"{config.dump}.cosets.tsv").write_text(result.table.dump())
            self.logger.info(f"💾 presentation and coset table written to {config.dump}.*")
        return report
