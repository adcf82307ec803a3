"""
Enumerate — |G(R)⁺| by closure of the root elements, compared with an
independent count of the full matrix group where one exists (Matsumoto),
and with the product over local factors.
"""
from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.enumeration import count_special_linear, enumerate_elementary, local_product_check
from chevlab.algebra.finring import local_decomposition
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class EnumerateSuite(BaseSuite):
    """Order of the elementary subgroup."""

    command = Command.ENUMERATE

    def __init__(self):
        super().__init__("enumerate")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        phi, ring = self.load(config)
        group = chevalley_group(phi, ring)
        enumeration = enumerate_elementary(group, budget=config.budget_bfs)
        report.counts = {"order": enumeration.order, "generators": enumeration.generator_count}

        if phi.label == "A2" and group.rep.kind == "natural":
            full = count_special_linear(ring, config.budget_bfs)
            report.counts["sl3_order"] = full
            report.check("G(R)⁺ = G(R)", enumeration.order == full,
                         f"closure {enumeration.order:,}, direct count of SL3({ring.name}) {full:,}")
        else:
            self.logger.info(f"no independent count for {phi.label} {group.rep.kind}; order only")

        if len(local_decomposition(ring).factors) > 1:
            counts, check = local_product_check(group, config.budget_bfs)
            report.counts.update({k: v for k, v in counts.items() if k != "order"})
            report.extend([check])
        return report
