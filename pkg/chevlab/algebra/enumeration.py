"""
Breadth-first closure of matrix groups and an independent count of SL3(R).
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from chevlab.algebra.chevmatrix import ChevalleyGroup, chevalley_group
from chevlab.algebra.errors import BudgetExceeded, PreconditionFailed
from chevlab.algebra.finring import FiniteRing, local_decomposition
from chevlab.algebra.matrices import MatrixOps
from chevlab.config import settings
from chevlab.runner.models import CheckResult

logger = logging.getLogger(__name__)


@dataclass
class Enumeration:
    order: int
    elements: np.ndarray
    generator_count: int
    seconds: float


def additive_generators(ring: FiniteRing) -> List[int]:
    """A small set generating (R, +)."""
    generators: List[int] = []
    reached = {0}
    for x in ring.elements():
        if x in reached:
            continue
        generators.append(x)
        frontier = list(reached)
        while frontier:
            nxt = []
            for y in frontier:
                for g in generators:
                    z = ring.add(y, g)
                    if z not in reached:
                        reached.add(z)
                        nxt.append(z)
            frontier = nxt
        if len(reached) == ring.size:
            break
    return generators


def root_generators(group: ChevalleyGroup, values: Optional[Sequence[int]] = None) -> np.ndarray:
    """e_α(t) for every root α and every t in values (default: additive generators of R)."""
    if values is None:
        values = additive_generators(group.ring)
    return np.stack([group.root_stack(alpha)[t] for alpha in group.phi.roots for t in values])


def closure(ops: MatrixOps, generators: np.ndarray, budget: int, label: str = "group") -> Enumeration:
    """All products of the generators; the generators must have finite order."""
    started = time.perf_counter()
    identity = ops.identity[None]
    seen = set(ops.keys(identity))
    found = [identity]
    frontier = identity
    while len(frontier):
        discovered = []
        for g in generators:
            products = ops.matmul(frontier, g)
            fresh = []
            for k, key in enumerate(ops.keys(products)):
                if key not in seen:
                    seen.add(key)
                    fresh.append(k)
            if fresh:
                discovered.append(products[fresh])
            if len(seen) > budget:
                raise BudgetExceeded(f"closure of {label}", budget)
        frontier = np.concatenate(discovered) if discovered else frontier[:0]
        if len(frontier):
            found.append(frontier)
    elements = np.concatenate(found)
    seconds = time.perf_counter() - started
    logger.info(f"🔎 closure of {label}: {len(elements):,} elements in {seconds:.2f}s")
    return Enumeration(len(elements), elements, len(generators), seconds)


def enumerate_elementary(group: ChevalleyGroup, generators: Optional[np.ndarray] = None,
                         budget: Optional[int] = None) -> Enumeration:
    """Order of G(R)⁺ = <e_α(t)> by closure."""
    if generators is None:
        generators = root_generators(group)
    return closure(group.ops, generators, budget or settings.budget_bfs,
                   label=f"{group.phi.label}({group.ring.name})⁺")


def count_special_linear(ring: FiniteRing, budget: Optional[int] = None) -> int:
    """|SL3(R)| by running through every 3x3 matrix over R."""
    budget = budget or settings.budget_bfs
    n = ring.size
    if n ** 9 > budget * 64:
        raise BudgetExceeded(f"direct count of SL3({ring.name})", budget)
    ops = MatrixOps(ring, 3)
    everything = np.arange(n, dtype=np.int32)
    rest = np.stack(np.meshgrid(*([everything] * 6), indexing="ij"), axis=-1).reshape(-1, 6)
    total = 0
    for first in np.stack(np.meshgrid(*([everything] * 3), indexing="ij"), axis=-1).reshape(-1, 3):
        m = np.empty((len(rest), 3, 3), dtype=np.int32)
        m[:, 0, :] = first
        m[:, 1:, :] = rest.reshape(-1, 2, 3)
        total += int(np.count_nonzero(ops.det3(m) == ring.one))
    return total


def check_matsumoto(group: ChevalleyGroup, enumeration: Enumeration) -> int:
    """The independently counted full group for the realization; only SL3 is supported."""
    if group.phi.label != "A2" or group.rep.kind != "natural":
        raise PreconditionFailed(f"no independent count for {group.phi.label} {group.rep.kind}")
    return count_special_linear(group.ring)


def local_product_check(group: ChevalleyGroup, budget: Optional[int] = None) -> Tuple[Dict[str, int], CheckResult]:
    """|G(S)⁺| = ∏ |G(S_i)⁺| over the local factors of S."""
    budget = budget or settings.budget_bfs
    decomposition = local_decomposition(group.ring)
    whole = enumerate_elementary(group, budget=budget).order
    counts: Dict[str, int] = {"order": whole}
    product = 1
    for i, factor in enumerate(decomposition.factors):
        local = chevalley_group(group.phi, factor, group.rep.kind)
        order = enumerate_elementary(local, budget=budget).order
        counts[f"factor_{i + 1}_order"] = order
        product *= order
    counts["factor_product"] = product
    names = " x ".join(f.name for f in decomposition.factors)
    return counts, CheckResult(name="group order is the product over local factors", passed=whole == product,
                               detail=f"|G({group.ring.name})⁺| = {whole:,}, product over {names} = {product:,}")
