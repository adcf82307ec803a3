"""
Congruence subgroups G(S, J^k) = ker(G(S) -> G(S/J^k)) over a local ring S.

G(S, J^k) is generated by e_α(j) and h_{α_i}(1 + j) with j in J^k; elements are
recognised by reducing every entry to its coset representative mod J^k.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from chevlab.algebra.bigcell import omega_minus, omega_plus, omega_torus
from chevlab.algebra.chevmatrix import ChevalleyGroup, GroupElement, chevalley_group, commutator
from chevlab.algebra.enumeration import Enumeration, closure, root_generators
from chevlab.algebra.errors import BudgetExceeded, PreconditionFailed
from chevlab.algebra.finring import (
    FiniteRing,
    Ideal,
    ideal_power,
    jacobson_radical,
    radical_filtration,
    wedderburn_splitting,
)
from chevlab.algebra.rootsys import adjoint_basis_order
from chevlab.config import settings
from chevlab.runner.models import CheckResult

logger = logging.getLogger(__name__)


@dataclass
class CongruenceData:
    ideal: Ideal
    level: int
    representative: np.ndarray

    def reduce(self, matrix: np.ndarray) -> np.ndarray:
        return self.representative[matrix]

    def contains(self, group: ChevalleyGroup, matrix: np.ndarray) -> bool:
        """matrix ≡ I mod J^k"""
        return bool(np.array_equal(self.reduce(matrix), self.reduce(group.ops.identity)))


def coset_representatives(ring: FiniteRing, ideal: Ideal) -> np.ndarray:
    """rep[x] = least element of x + I."""
    return ring.add_table[:, ideal.array].min(axis=1).astype(np.int32)


def congruence_data(ring: FiniteRing, level: int) -> CongruenceData:
    ideal = ideal_power(jacobson_radical(ring), level)
    return CongruenceData(ideal, level, coset_representatives(ring, ideal))


def congruence_generators(group: ChevalleyGroup, level: int) -> np.ndarray:
    ring = group.ring
    ideal = congruence_data(ring, level).ideal
    values = [j for j in ideal.sorted() if j != 0]
    if not values:
        return group.ops.identity[None]
    gens = [group.root_stack(alpha)[j] for alpha in group.phi.roots for j in values]
    for simple in group.phi.simple_roots:
        for j in values:
            gens.append(group.h(simple, ring.add(ring.one, j)).matrix)
    return np.stack(gens)


def congruence_subgroup(group: ChevalleyGroup, level: int, budget: Optional[int] = None) -> Enumeration:
    return closure(group.ops, congruence_generators(group, level), budget or settings.budget_bfs,
                   label=f"{group.phi.label}({group.ring.name}, J^{level})")


def congruence_subgroup_order(group: ChevalleyGroup, level: int, budget: Optional[int] = None) -> int:
    radical_filtration(group.ring)
    return congruence_subgroup(group, level, budget).order


def lie_dimension(group: ChevalleyGroup) -> int:
    return len(group.phi) + group.phi.rank


def lie_basis(group: ChevalleyGroup) -> List[np.ndarray]:
    """Chevalley basis of the Lie algebra in the group's realization, in adjoint-module order."""
    rep = group.rep
    basis = []
    for kind, x in adjoint_basis_order(group.phi):
        basis.append(rep.x[x] if kind == "e" else np.diag(rep.weights[x]))
    return basis


def _lie_combinations(group: ChevalleyGroup, coefficients: np.ndarray) -> np.ndarray:
    """I + Σ c_b X_b for each row of coefficients, shape (m, d, d)."""
    ring, ops = group.ring, group.ops
    total = np.broadcast_to(ops.identity, (len(coefficients),) + ops.identity.shape).copy()
    for b, x in enumerate(lie_basis(group)):
        xr = ops.from_integers(x)
        total = ring.add_table[total, ring.mul_table[coefficients[:, b, None, None], xr[None]]]
    return total


def filtration_quotient_check(group: ChevalleyGroup, level: int, budget: Optional[int] = None,
                              samples: Optional[int] = None, seed: Optional[int] = None
                              ) -> Tuple[Dict[str, int], List[CheckResult]]:
    """G(S,J^k)/G(S,J^(k+1)) against s_k copies of the Lie algebra."""
    ring = group.ring
    budget = budget or settings.budget_bfs
    filtration = radical_filtration(ring)
    if level < 1 or level >= filtration.nilpotency:
        raise PreconditionFailed(f"level {level} outside 1..{filtration.nilpotency - 1} for {ring.name}")
    s_k = filtration.levels[level - 1].s
    q = filtration.residue_order
    dim = lie_dimension(group)

    upper = congruence_subgroup(group, level, budget)
    lower = congruence_subgroup(group, level + 1, budget)
    expected = q ** (dim * s_k)
    checks = []
    counts = {
        "order_level_k": upper.order,
        "order_level_k_plus_1": lower.order,
        "quotient_order": upper.order // lower.order,
        "expected_quotient_order": expected,
    }
    checks.append(CheckResult(
        name="quotient order", passed=upper.order == expected * lower.order,
        detail=f"|G(J^{level})|/|G(J^{level + 1})| = {upper.order}/{lower.order}; q^(dim·s_k) = {q}^({dim}·{s_k})",
    ))

    finer = congruence_data(ring, level + 1)
    gens = congruence_generators(group, level)
    p = filtration.residue_characteristic
    failures = []
    for a in range(len(gens)):
        power = group.ops.identity
        for _ in range(p):
            power = group.ops.matmul(power, gens[a])
        if not finer.contains(group, power):
            failures.append({"kind": "p-th power", "generator": a})
        for b in range(a + 1, len(gens)):
            # [g, h] ≡ I mod J^(k+1) iff gh ≡ hg
            gh = group.ops.matmul(gens[a], gens[b])
            hg = group.ops.matmul(gens[b], gens[a])
            if not np.array_equal(finer.reduce(gh), finer.reduce(hg)):
                failures.append({"kind": "commutator", "generators": [a, b]})
    checks.append(CheckResult(
        name="quotient elementary abelian", passed=not failures,
        detail=f"{len(gens)} generators: commutators and {p}-th powers fall into level {level + 1}",
        counterexamples=failures[:5],
    ))

    # I + Σ c_b X_b with c_b running over representatives of J^k / J^(k+1)
    ideal = congruence_data(ring, level).ideal
    reps = sorted({int(finer.representative[j]) for j in ideal.sorted()})
    grid_size = len(reps) ** dim
    if grid_size > budget:
        raise BudgetExceeded("Lie-algebra coordinate grid", budget)
    grid = np.stack(np.meshgrid(*([np.array(reps, dtype=np.int32)] * dim), indexing="ij"), axis=-1).reshape(-1, dim)
    images = finer.reduce(_lie_combinations(group, grid))
    image_keys = set(group.ops.keys(images))
    quotient_keys = set(group.ops.keys(finer.reduce(upper.elements)))
    checks.append(CheckResult(
        name="Lie algebra map is a bijection onto the quotient",
        passed=len(image_keys) == grid_size and image_keys == quotient_keys,
        detail=f"{grid_size} coordinate vectors, {len(image_keys)} images, {len(quotient_keys)} quotient classes",
    ))
    counts["lie_dimension"] = dim
    counts["s_k"] = s_k

    checks.append(adjoint_equivariance_check(group, level, reps, samples, seed))
    return counts, checks


def adjoint_equivariance_check(group: ChevalleyGroup, level: int, reps: Sequence[int],
                               samples: Optional[int] = None, seed: Optional[int] = None) -> CheckResult:
    """g (I + vX) g⁻¹ ≡ I + v·Ad(g)X mod J^(k+1) for sampled g, v and basis vectors X."""
    ring = group.ring
    samples = samples or settings.equivariance_samples
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    adjoint = chevalley_group(group.phi, ring, "adjoint")
    finer = congruence_data(ring, level + 1)
    basis = [group.ops.from_integers(x) for x in lie_basis(group)]
    dim = len(basis)
    section = wedderburn_splitting(ring).section
    scalars = sorted(section) if section is not None else list(ring.elements())
    nonzero_reps = [v for v in reps if v != 0] or list(reps)

    failures = []
    for _ in range(samples):
        g, ad = group.identity, adjoint.identity
        for _ in range(3):
            alpha = int(rng.integers(len(group.phi)))
            t = scalars[int(rng.integers(len(scalars)))]
            g, ad = g * group.e(alpha, t), ad * adjoint.e(alpha, t)
        v = nonzero_reps[int(rng.integers(len(nonzero_reps)))]
        b = int(rng.integers(dim))
        vx = ring.mul_table[v, basis[b]]
        lhs = group.ops.matmul(group.ops.matmul(g.matrix, group.ops.add(group.ops.identity, vx)), g.inverse)
        coefficients = np.array([ring.mul(v, int(ad.matrix[c, b])) for c in range(dim)], dtype=np.int32)
        rhs = _lie_combinations(group, coefficients[None])[0]
        if not np.array_equal(finer.reduce(lhs), finer.reduce(rhs)):
            failures.append({"v": ring.format(v), "basis_vector": b})
    return CheckResult(
        name="conjugation matches the adjoint action", passed=not failures,
        detail=f"{samples - len(failures)}/{samples} sampled (g, v, X) agree",
        counterexamples=failures[:5],
    )


def random_congruence_element(group: ChevalleyGroup, level: int, rng: np.random.Generator) -> GroupElement:
    """ω⁻(u⁻) ω(1 + j) ω⁺(u⁺) with all coordinates drawn from J^level."""
    ring = group.ring
    ideal = congruence_data(ring, level).ideal.sorted()
    m = group.phi.num_positive

    def draw(count: int) -> List[int]:
        return [ideal[int(k)] for k in rng.integers(len(ideal), size=count)]

    torus = [ring.add(ring.one, j) for j in draw(group.phi.rank)]
    return omega_minus(group, draw(m)) * omega_torus(group, torus) * omega_plus(group, draw(m))


def commutator_filtration_check(group: ChevalleyGroup, s: int, t: int, samples: Optional[int] = None,
                                seed: Optional[int] = None) -> CheckResult:
    """[G(S,J^s), G(S,J^t)] ⊆ G(S,J^(s+t)) on sampled pairs."""
    ring = group.ring
    radical_filtration(ring)
    samples = samples or settings.sample_pairs
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    target = congruence_data(ring, s + t)
    failures = []
    for _ in range(samples):
        g = random_congruence_element(group, s, rng)
        h = random_congruence_element(group, t, rng)
        c = commutator(g, h)
        if not target.contains(group, c.matrix):
            failures.append({"g": g.format(), "h": h.format(), "commutator": c.format()})
    trivial = target.ideal.is_zero
    return CheckResult(
        name=f"commutators of levels {s} and {t} lie in level {s + t}", passed=not failures,
        detail=f"{samples - len(failures)}/{samples} sampled pairs" + (" (J^(s+t) = 0: commutators trivial)" if trivial else ""),
        counterexamples=failures[:3],
    )


def levi_check(group: ChevalleyGroup, budget: Optional[int] = None) -> Tuple[Dict[str, int], List[CheckResult]]:
    """G(S)⁺ = G(S,J) ⋊ G(B̄)⁺ for an equal-characteristic local ring with section B̄."""
    ring = group.ring
    budget = budget or settings.budget_bfs
    splitting = wedderburn_splitting(ring)
    if not splitting.split:
        raise PreconditionFailed(f"{ring.name} has no coefficient field: {splitting.reason}")
    section = sorted(x for x in splitting.section if x != 0)
    levi = closure(group.ops, root_generators(group, section), budget, label=f"G(B̄) in {ring.name}")
    kernel = congruence_subgroup(group, 1, budget)
    whole = closure(group.ops, root_generators(group), budget, label=f"{group.phi.label}({ring.name})⁺")
    level_one = congruence_data(ring, 1)
    trivial = level_one.reduce(group.ops.identity)
    meeting = int(np.count_nonzero(np.all(level_one.reduce(levi.elements) == trivial, axis=(1, 2))))
    counts = {"order": whole.order, "kernel_order": kernel.order, "levi_order": levi.order}

    kernel_gens = congruence_generators(group, 1)
    moved = 0
    for alpha in group.phi.roots:
        for b in section:
            x = group.e(alpha, b)
            conjugates = group.ops.matmul(group.ops.matmul(x.matrix, kernel_gens), x.inverse)
            moved += int(np.count_nonzero(~np.all(level_one.reduce(conjugates) == trivial, axis=(1, 2))))
    checks = [
        CheckResult(name="Levi order product", passed=whole.order == kernel.order * levi.order,
                    detail=f"{whole.order} = {kernel.order} · {levi.order}"),
        CheckResult(name="Levi factor meets the kernel trivially", passed=meeting == 1,
                    detail=f"{meeting} element(s) of G(B̄)⁺ reduce to 1"),
        CheckResult(name="kernel normalised by Levi generators", passed=moved == 0,
                    detail=f"{moved} conjugate(s) of kernel generators leave the kernel"),
    ]
    logger.info(f"🔎 Levi split of {group.phi.label}({ring.name}): {whole.order} = {kernel.order} · {levi.order}")
    return counts, checks
