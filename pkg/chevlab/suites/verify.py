"""
Verify — (R1) and (R2) for every root pair and every ring pair, plus
h-multiplicativity, the invariant form and transport-word signs.
"""
from chevlab.algebra.chevmatrix import (
    chevalley_group,
    check_h_multiplicative,
    check_invariant_form,
    verify_steinberg_relations,
)
from chevlab.algebra.finring import is_nice_pair
from chevlab.algebra.words import transport_word, verify_transport
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class VerifySuite(BaseSuite):
    """Exhaustive Steinberg relation check in the matrix realization."""

    command = Command.VERIFY

    def __init__(self):
        super().__init__("verify")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        phi, ring = self.load(config)
        nice = is_nice_pair(phi, ring)
        group = chevalley_group(phi, ring)
        self.logger.info(f"📐 {group!r}, dim {group.rep.dim}, nice pair: {nice.ok}")

        report.extend(verify_steinberg_relations(group))
        report.extend([check_h_multiplicative(group), check_invariant_form(group)])

        # one transport word per root, starting from the simple root of the same length
        bad, signs = [], {}
        for alpha in phi.roots:
            start = next(r for r in phi.simple_roots if r.is_long == alpha.is_long)
            word = transport_word(group, start, alpha)
            signs[alpha.label] = word.sign
            if not verify_transport(group, word):
                bad.append(word.describe(phi))
        report.check("transport signs independent of t", not bad,
                     f"{len(phi) - len(bad)}/{len(phi)} transport words scale every e_α(t) by one sign", bad)

        report.counts = {
            "roots": len(phi),
            "positive_roots": phi.num_positive,
            "ring_size": ring.size,
            "dimension": group.rep.dim,
        }
        report.tables = {
            "nice_pair": {"ok": nice.ok, "reason": nice.reason},
            "realization": group.rep.kind,
            "structure_constants": group.rep.constants.export(),
            "transport_signs": signs,
        }
        return report
