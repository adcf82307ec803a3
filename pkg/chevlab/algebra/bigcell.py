"""
Big-cell factorization g = ω⁻(u⁻) · ω(t) · ω⁺(u⁺).

ω⁺(u) = ∏ e_α(u_α) and ω⁻(u) = ∏ e_{-α}(u_α) over positive roots in
ascending height; ω(t) = ∏ h_{α_i}(t_i). Membership is decided by Gauss
elimination without pivoting: every pivot must be a unit.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from chevlab.algebra.chevmatrix import ChevalleyGroup, GroupElement, Representation
from chevlab.algebra.errors import PreconditionFailed
from chevlab.runner.models import CheckResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotInCell:
    """g is outside the big cell; step and value locate the first failure."""
    step: int
    value: str
    reason: str

    def describe(self) -> Dict[str, object]:
        return {"in_cell": False, "step": self.step, "value": self.value, "reason": self.reason}


@dataclass(frozen=True)
class CellFactorization:
    uminus: Tuple[int, ...]
    torus: Tuple[int, ...]
    uplus: Tuple[int, ...]

    @property
    def coordinates(self) -> Tuple[Tuple[int, ...], ...]:
        return (self.uminus, self.torus, self.uplus)

    def describe(self, group: ChevalleyGroup) -> Dict[str, object]:
        fmt = group.ring.format
        labels = [r.label for r in group.phi.positive_roots]
        return {
            "in_cell": True,
            "uminus": {f"-({a})": fmt(c) for a, c in zip(labels, self.uminus)},
            "torus": [fmt(t) for t in self.torus],
            "uplus": {a: fmt(c) for a, c in zip(labels, self.uplus)},
        }


def omega_plus(group: ChevalleyGroup, coords: Sequence[int]) -> GroupElement:
    g = group.identity
    for root, c in zip(group.phi.positive_roots, coords):
        g = g * group.e(root, c)
    return g


def omega_minus(group: ChevalleyGroup, coords: Sequence[int]) -> GroupElement:
    g = group.identity
    for root, c in zip(group.phi.positive_roots, coords):
        g = g * group.e(group.phi.neg(root), c)
    return g


def omega_torus(group: ChevalleyGroup, values: Sequence[int]) -> GroupElement:
    return group.torus(values)


@lru_cache(maxsize=None)
def torus_readout(rep: Representation) -> Tuple[Tuple[int, ...], np.ndarray]:
    """Basis vectors whose weights pair unimodularly with the simple coroots, and the inverse pairing."""
    r = rep.phi.rank
    for rows in combinations(range(rep.dim), r):
        pairing = rep.weights[:, rows].T.astype(np.int64)
        if abs(round(np.linalg.det(pairing))) != 1:
            continue
        inverse = np.rint(np.linalg.inv(pairing)).astype(np.int64)
        if np.array_equal(inverse @ pairing, np.eye(r, dtype=np.int64)):
            return rows, inverse
    raise PreconditionFailed(f"{rep.phi.label} {rep.kind} weights do not determine the torus")


def ldu(group: ChevalleyGroup, matrix: np.ndarray) -> Union[NotInCell, Tuple[np.ndarray, List[int], np.ndarray]]:
    """Doolittle elimination: matrix = L · diag(d) · U with L, U unitriangular."""
    ring = group.ring
    A = matrix.astype(np.int32).copy()
    d = A.shape[0]
    L = group.ops.identity.copy()
    pivots = []
    for k in range(d):
        pivot = int(A[k, k])
        if not ring.is_unit(pivot):
            return NotInCell(k, ring.format(pivot), f"pivot {k} is not a unit")
        pivots.append(pivot)
        inv = ring.inverse(pivot)
        for i in range(k + 1, d):
            factor = ring.mul(int(A[i, k]), inv)
            L[i, k] = factor
            A[i, k:] = ring.add_table[A[i, k:], ring.neg_table[ring.mul_table[factor, A[k, k:]]]]
    U = group.ops.identity.copy()
    for k in range(d):
        inv = ring.inverse(pivots[k])
        U[k, k + 1:] = ring.mul_table[inv, A[k, k + 1:]]
    return L, pivots, U


def _peel(group: ChevalleyGroup, matrix: np.ndarray, negative: bool) -> Optional[Tuple[int, ...]]:
    ring, phi = group.ring, group.phi
    remaining = group.element(matrix, matrix)
    coords = []
    for root in phi.positive_roots:
        target = phi.neg(root) if negative else root
        r, c, value = group.rep.probes[target.index]
        scale = ring.from_int(value)
        if not ring.is_unit(scale):
            raise PreconditionFailed(f"cannot read e_{target.label} coordinates: {value} is not a unit")
        u = ring.mul(int(remaining.matrix[r, c]), ring.inverse(scale))
        coords.append(u)
        step = group.e(target, ring.neg(u))
        remaining = GroupElement(group, group.ops.matmul(step.matrix, remaining.matrix), remaining.inverse)
    if not remaining.is_identity():
        return None
    return tuple(coords)


def bigcell_factor(group: ChevalleyGroup, g: Union[GroupElement, np.ndarray]) -> Union[CellFactorization, NotInCell]:
    ring = group.ring
    matrix = g.matrix if isinstance(g, GroupElement) else np.asarray(g, dtype=np.int32)
    decomposition = ldu(group, matrix)
    if isinstance(decomposition, NotInCell):
        return decomposition
    L, pivots, U = decomposition
    uminus = _peel(group, L, negative=True)
    if uminus is None:
        return NotInCell(-1, "", "lower factor is not in U⁻")
    uplus = _peel(group, U, negative=False)
    if uplus is None:
        return NotInCell(-1, "", "upper factor is not in U⁺")

    rows, inverse = torus_readout(group.rep)
    torus = []
    for i in range(group.phi.rank):
        t = ring.one
        for b, exponent in zip(rows, inverse[i]):
            t = ring.mul(t, ring.pow(pivots[b], int(exponent)))
        torus.append(t)
    result = CellFactorization(uminus, tuple(torus), uplus)
    rebuilt = reassemble(group, result)
    if not np.array_equal(rebuilt.matrix, matrix):
        return NotInCell(-1, "", "diagonal part is not in the torus")
    return result


def reassemble(group: ChevalleyGroup, f: CellFactorization) -> GroupElement:
    return omega_minus(group, f.uminus) * omega_torus(group, f.torus) * omega_plus(group, f.uplus)


def expected_cell_size(group: ChevalleyGroup) -> int:
    ring = group.ring
    units = sum(1 for x in ring.elements() if ring.is_unit(x))
    return ring.size ** (2 * group.phi.num_positive) * units ** group.phi.rank


def cell_census(group: ChevalleyGroup, elements: np.ndarray) -> Tuple[Dict[str, int], List[CheckResult]]:
    """Factor every element of a stack; count members, round-trips and distinct coordinates."""
    members, roundtrip_failures, seen = 0, [], set()
    for m in elements:
        outcome = bigcell_factor(group, m)
        if isinstance(outcome, NotInCell):
            continue
        members += 1
        seen.add(outcome.coordinates)
        if not np.array_equal(reassemble(group, outcome).matrix, m):
            roundtrip_failures.append({"element": group.ops.format(m)})
    expected = expected_cell_size(group)
    counts = {"group_order": len(elements), "cell_members": members, "expected_cell_size": expected,
              "distinct_coordinates": len(seen)}
    checks = [
        CheckResult(name="big cell size", passed=members == expected,
                    detail=f"{members} of {len(elements)} elements factor; |U⁻||T||U⁺| = {expected}"),
        CheckResult(name="big cell round trip", passed=not roundtrip_failures,
                    detail=f"{members - len(roundtrip_failures)}/{members} reassemble exactly",
                    counterexamples=roundtrip_failures[:5]),
        CheckResult(name="big cell coordinates unique", passed=len(seen) == members,
                    detail=f"{len(seen)} distinct coordinate triples"),
    ]
    logger.info(f"🔎 big cell of {group.phi.label}({group.ring.name}): {members}/{len(elements)}")
    return counts, checks
