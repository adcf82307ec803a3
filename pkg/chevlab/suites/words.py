"""
Words — rebuild a ring from the root subgroup of a Chevalley group,
using only matrix products and the calibrated word maps.
"""
from chevlab.algebra.finring import make_ring
from chevlab.algebra.rootsys import parse_root_system
from chevlab.algebra.words import make_harness, reconstruct_ring, word_maps
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class WordsSuite(BaseSuite):
    """Ring reconstruction through word maps."""

    command = Command.WORDS

    def __init__(self):
        super().__init__("words")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        phi = parse_root_system(config.phi)
        target = make_ring(config.ring)
        source = make_ring(config.source_ring) if config.source_ring else target
        harness = make_harness(phi, source, target, config.images)
        self.logger.info(f"📐 {phi.label}: {source.name} -> {target.name}")

        counts, tables, checks = reconstruct_ring(harness)
        report.counts = counts
        report.tables = tables
        report.tables["word_maps"] = [m.describe(phi) for m in word_maps(phi, harness.group.rep.kind).values()]
        report.extend(checks)
        if not tables.get("f_injective", True):
            self.logger.warning(f"⚠️ {source.name} -> {target.name} has a kernel of size {counts['kernel_size']}")
        return report
