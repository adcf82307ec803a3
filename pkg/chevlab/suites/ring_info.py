"""
Ring info — cardinality, units, maximal ideals, radical chain and the
local decomposition of one finite ring, with the structural identities
between them checked exhaustively.
"""
from chevlab.algebra.finring import (
    check_ring_axioms,
    ideal_power,
    is_local,
    jacobson_radical,
    local_decomposition,
    make_ring,
    maximal_ideals,
    nilpotency_degree,
    radical_filtration,
    unit_generated_subring,
    units,
    wedderburn_splitting,
)
from chevlab.runner.models import Command, Report, RunConfig
from chevlab.suites.base import BaseSuite


class RingInfoSuite(BaseSuite):
    """Structure report for a finite commutative ring."""

    command = Command.RING_INFO

    def __init__(self):
        super().__init__("ring_info")

    def run(self, config: RunConfig) -> Report:
        report = self.new_report(config)
        ring = make_ring(config.ring)
        fmt = ring.format
        self.logger.info(f"📐 {ring.name}: {ring.size} elements")

        failures = check_ring_axioms(ring)
        report.check("ring axioms", not failures,
                     "exhaustive" if ring.size ** 3 <= 10 ** 6 else "sampled",
                     [{"failure": f} for f in failures])

        unit_map = units(ring)
        maximal = maximal_ideals(ring)
        radical = jacobson_radical(ring)
        d = nilpotency_degree(radical)
        decomposition = local_decomposition(ring)
        subring = unit_generated_subring(ring)

        covered = set()
        for m in maximal:
            covered |= m.elements
        nonunits = set(ring.elements()) - set(unit_map)
        report.check("units are the complement of the maximal ideals", covered == nonunits,
                     f"{len(unit_map)} units, {len(nonunits)} elements in some maximal ideal")

        intersection = set(ring.elements())
        for m in maximal:
            intersection &= m.elements
        report.check("radical is the intersection of the maximal ideals", intersection == set(radical.elements),
                     f"|J| = {len(radical)}")

        previous_nonzero = d == 1 or len(ideal_power(radical, d - 1)) > 1
        report.check("radical nilpotency degree", previous_nonzero,
                     f"J^{d} = 0" + (f", J^{d - 1} != 0" if d > 1 else ""))

        problems = decomposition.verify()
        report.check("local decomposition", not problems,
                     f"{len(decomposition.factors)} local factor(s)", [{"failure": p} for p in problems])

        report.counts = {
            "cardinality": ring.size,
            "units": len(unit_map),
            "maximal_ideals": len(maximal),
            "radical_size": len(radical),
            "nilpotency_degree": d,
            "local_factors": len(decomposition.factors),
        }
        report.tables = {
            "units": {fmt(u): fmt(v) for u, v in sorted(unit_map.items())},
            "maximal_ideals": [m.describe() for m in maximal],
            "radical": radical.describe(),
            "radical_chain": [{"k": k, "size": len(ideal_power(radical, k))} for k in range(1, d + 1)],
            "idempotents": [fmt(e) for e in decomposition.idempotents],
            "factors": [f.name for f in decomposition.factors],
            "unit_generated_subring": {"size": len(subring.elements), "equals_whole": subring.equals_whole},
        }

        if is_local(ring):
            filtration = radical_filtration(ring)
            q = filtration.residue_order
            exponent = 1 + sum(level.s for level in filtration.levels)
            report.check("local ring order is a residue-field power", ring.size == q ** exponent,
                         f"|R| = {ring.size}, q^(1 + Σ s_k) = {q}^{exponent}")
            splitting = wedderburn_splitting(ring)
            report.tables["radical_chain"] = [
                {"k": level.k, "size": len(level.ideal), "s_k": level.s} for level in filtration.levels
            ]
            report.tables["residue_field"] = {"characteristic": filtration.residue_characteristic, "order": q}
            report.tables["wedderburn"] = {
                "split": splitting.split,
                "reason": splitting.reason,
                "section": [fmt(x) for x in sorted(splitting.section)] if splitting.section else None,
            }
            report.counts["residue_order"] = q
            report.counts["radical_length"] = filtration.nilpotency
        self.logger.info(f"{'✅' if report.passed else '❌'} {ring.name}: {len(unit_map)} units, "
                         f"{len(maximal)} maximal ideal(s), {len(decomposition.factors)} local factor(s)")
        return report

