"""
The Steinberg group St(Φ, R) as a finite presentation.

Generators are x̃_α(t) for every root α and every t ≠ 0; x̃_α(0) is the empty
word. Relators:

    (R1)  x̃_α(s) x̃_α(t) = x̃_α(s + t)
    (R2)  [x̃_α(s), x̃_β(t)] = ∏ x̃_{iα+jβ}(C_ij s^i t^j)     (β ≠ -α)

|St| comes from a coset enumeration over the subgroup Ũ⁺ = <x̃_α(t) : α > 0>,
which π_S maps isomorphically onto U⁺, so |St| = index · |R|^|Φ⁺|.
K2 = ker π_S acts freely on those cosets, which lets Steinberg symbols be
handled as permutations of the coset table.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from chevlab.algebra.chevmatrix import ChevalleyGroup, GroupElement, chevalley_group
from chevlab.algebra.cosets import CosetTable, Word, free_reduce, generated_order, invert_word, todd_coxeter
from chevlab.algebra.enumeration import enumerate_elementary
from chevlab.algebra.errors import (
    BudgetExceeded,
    HypothesisFailed,
    NicePairViolation,
    NotAUnit,
    NotLongRoot,
    PreconditionFailed,
)
from chevlab.algebra.finring import (
    FiniteRing,
    is_nice_pair,
    local_decomposition,
    unit_generated_subring,
    units,
)
from chevlab.algebra.rootsys import RootLike, RootSystem, chevalley_constants, detect_b2_subsystem, detect_is_g2
from chevlab.config import settings
from chevlab.runner.models import CheckResult, SubgroupStrategy

logger = logging.getLogger(__name__)


@dataclass
class Presentation:
    phi: RootSystem
    ring: FiniteRing
    generators: List[Tuple[int, int]]
    relators: List[Word]
    kinds: List[str]
    _letters: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._letters = {gen: g + 1 for g, gen in enumerate(self.generators)}

    def __repr__(self) -> str:
        return (f"<Presentation St({self.phi.label}, {self.ring.name}): "
                f"{len(self.generators)} generators, {len(self.relators)} relators>")

    def x(self, alpha: RootLike, t: int) -> Word:
        """x̃_α(t) as a word; the empty word when t = 0."""
        if t == 0:
            return ()
        return (self._letters[(self.phi.root(alpha).index, int(t))],)

    def generator_name(self, g: int) -> str:
        root, t = self.generators[g]
        return f"x_{self.phi.roots[root].label}({self.ring.format(t)})"

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        return " ".join(f"x{abs(x)}" + ("^-1" if x < 0 else "") for x in word)

    def export(self) -> str:
        """One generator definition per line, then one relator per line."""
        lines = [f"# St({self.phi.label}, {self.ring.name}): "
                 f"{len(self.generators)} generators, {len(self.relators)} relators",
                 "generators:"]
        lines += [f"x{g + 1} = {self.generator_name(g)}" for g in range(len(self.generators))]
        lines.append("relators:")
        lines += [self.format_word(w) for w in self.relators]
        return "\n".join(lines) + "\n"


def build_presentation(phi: RootSystem, ring: FiniteRing, max_ring: Optional[int] = None) -> Presentation:
    max_ring = max_ring or settings.max_presentation_ring
    if ring.size > max_ring:
        raise BudgetExceeded(f"Steinberg presentation over {ring.name} (|R| = {ring.size})", max_ring)
    constants = chevalley_constants(phi)
    nonzero = [t for t in ring.elements() if t != 0]
    generators = [(root.index, t) for root in phi.roots for t in nonzero]
    pres = Presentation(phi, ring, generators, [], [])

    for alpha in phi.roots:
        for s in nonzero:
            for t in nonzero:
                word = pres.x(alpha, s) + pres.x(alpha, t) + invert_word(pres.x(alpha, ring.add(s, t)))
                pres.relators.append(free_reduce(word))
                pres.kinds.append("R1")

    for alpha in phi.roots:
        for beta in phi.roots:
            if phi.neg(alpha).index == beta.index:
                continue
            factors = constants.commutator(alpha, beta)
            for s in nonzero:
                for t in nonzero:
                    xs, xt = pres.x(alpha, s), pres.x(beta, t)
                    rhs: Word = ()
                    for i, j, gamma, c in factors:
                        value = ring.mul(ring.from_int(c), ring.mul(ring.pow(s, i), ring.pow(t, j)))
                        rhs += pres.x(gamma, value)
                    word = free_reduce(xs + xt + invert_word(xs) + invert_word(xt) + invert_word(rhs))
                    if word:
                        pres.relators.append(word)
                        pres.kinds.append("R2")
    logger.info(f"📐 St({phi.label}, {ring.name}): {len(pres.generators)} generators, {len(pres.relators)} relators")
    return pres


def pi_S(pres: Presentation, group: ChevalleyGroup, word: Sequence[int]) -> GroupElement:
    """Evaluate a word through x̃_α(t) -> e_α(t)."""
    g = group.identity
    for letter in word:
        root, t = pres.generators[abs(letter) - 1]
        e = group.e(root, t)
        g = g * (e if letter > 0 else e.inv())
    return g


def presentation_soundness(pres: Presentation, group: ChevalleyGroup) -> CheckResult:
    failures = []
    for word, kind in zip(pres.relators, pres.kinds):
        if not pi_S(pres, group, word).is_identity():
            failures.append({"kind": kind, "relator": pres.format_word(word)})
    return CheckResult(
        name="relators evaluate to the identity", passed=not failures,
        detail=f"{len(pres.relators) - len(failures)}/{len(pres.relators)} relators",
        counterexamples=failures[:5],
    )


# ── symbols ──────────────────────────────────────────────

def w_word(pres: Presentation, alpha: RootLike, u: int) -> Word:
    """w̃_α(u) = x̃_α(u) x̃_{-α}(-u⁻¹) x̃_α(u)"""
    ring = pres.ring
    minus = pres.phi.neg(alpha)
    return pres.x(alpha, u) + pres.x(minus, ring.neg(ring.inverse(u))) + pres.x(alpha, u)


def h_word(pres: Presentation, alpha: RootLike, u: int) -> Word:
    """h̃_α(u) = w̃_α(u) w̃_α(-1)"""
    return w_word(pres, alpha, u) + w_word(pres, alpha, pres.ring.neg(pres.ring.one))


def symbol(pres: Presentation, alpha: RootLike, u: int, v: int) -> Word:
    """{u, v}_α = h̃_α(uv) h̃_α(u)⁻¹ h̃_α(v)⁻¹"""
    ring = pres.ring
    root = pres.phi.root(alpha)
    if not root.is_long:
        raise NotLongRoot(f"{root.label} is short in {pres.phi.label}")
    for value in (u, v):
        if not ring.is_unit(value):
            raise NotAUnit(ring.format(value), ring.name)
    word = h_word(pres, root, ring.mul(u, v)) + invert_word(h_word(pres, root, u)) + invert_word(h_word(pres, root, v))
    return free_reduce(word)


def symbol_root(phi: RootSystem):
    """The long root the symbol calculus is fixed to: the first long positive root."""
    return next(r for r in phi.positive_roots if r.is_long)


# ── K2 ───────────────────────────────────────────────────

@dataclass
class K2Result:
    presentation: Presentation
    table: CosetTable
    subgroup_order: int
    st_order: int
    group_order: int
    symbols: List[Tuple[int, int]]

    @property
    def k2_order(self) -> int:
        return self.st_order // self.group_order

    @property
    def divides(self) -> bool:
        return self.st_order % self.group_order == 0

    def counts(self) -> Dict[str, int]:
        return {
            "generators": len(self.presentation.generators),
            "relators": len(self.presentation.relators),
            "index": self.table.index,
            "subgroup_order": self.subgroup_order,
            "st_order": self.st_order,
            "group_order": self.group_order,
            "k2_order": self.k2_order,
        }


def _refuse_if_not_nice(phi: RootSystem, ring: FiniteRing) -> None:
    if detect_is_g2(phi) or detect_b2_subsystem(phi):
        nice = is_nice_pair(phi, ring)
        if not nice.ok:
            raise NicePairViolation(nice.reason)


def subgroup_words(pres: Presentation, strategy: SubgroupStrategy) -> Tuple[List[Word], int]:
    """Generators of the enumerated subgroup and its order in St."""
    if strategy == SubgroupStrategy.TRIVIAL:
        return [], 1
    words = [pres.x(root, t) for root in pres.phi.positive_roots for t in pres.ring.elements() if t != 0]
    return words, pres.ring.size ** pres.phi.num_positive


def steinberg_table(phi: RootSystem, ring: FiniteRing, strategy: SubgroupStrategy = SubgroupStrategy.UNIPOTENT,
                    budget: Optional[int] = None) -> Tuple[Presentation, CosetTable, int]:
    pres = build_presentation(phi, ring)
    words, order = subgroup_words(pres, strategy)
    table = todd_coxeter(len(pres.generators), pres.relators, words, budget or settings.budget_cosets)
    if not table.closed:
        raise BudgetExceeded("coset enumeration closing", table.budget)
    return pres, table, order


def k2_order(phi: RootSystem, ring: FiniteRing, strategy: SubgroupStrategy = SubgroupStrategy.UNIPOTENT,
             budget_cosets: Optional[int] = None, budget_bfs: Optional[int] = None) -> K2Result:
    """|St(Φ,R)| / |G(R)⁺| with generating symbols when K2 is nontrivial."""
    _refuse_if_not_nice(phi, ring)
    pres, table, subgroup_order = steinberg_table(phi, ring, strategy, budget_cosets)
    group = chevalley_group(phi, ring)
    group_order = enumerate_elementary(group, budget=budget_bfs).order
    result = K2Result(pres, table, subgroup_order, table.index * subgroup_order, group_order, [])
    if result.divides and result.k2_order > 1:
        result.symbols = generating_symbols(result)
    logger.info(f"🔎 K2({phi.label}, {ring.name}): |St| = {result.st_order:,}, "
                f"|G⁺| = {group_order:,}, |K2| = {result.st_order / group_order:g}")
    return result


def symbol_permutations(result: K2Result, alpha: Optional[RootLike] = None) -> Dict[Tuple[int, int], np.ndarray]:
    pres = result.presentation
    alpha = symbol_root(pres.phi) if alpha is None else alpha
    unit_list = sorted(units(pres.ring))
    return {(u, v): result.table.permutation(symbol(pres, alpha, u, v)) for u in unit_list for v in unit_list}


def generating_symbols(result: K2Result) -> List[Tuple[int, int]]:
    """A few symbols whose permutations generate the whole symbol subgroup."""
    perms = symbol_permutations(result)
    chosen: List[Tuple[int, int]] = []
    order = 1
    for pair, perm in perms.items():
        grown = generated_order([perms[c] for c in chosen] + [perm])
        if grown > order:
            chosen.append(pair)
            order = grown
        if order >= result.k2_order:
            break
    return chosen


def _subgroup_elements(perms: Sequence[np.ndarray], size: int) -> set:
    identity = np.arange(size)
    seen = {identity.tobytes()}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in perms:
                h = s[g]
                if h.tobytes() not in seen:
                    seen.add(h.tobytes())
                    nxt.append(h)
        frontier = nxt
    return seen


def symbol_generation_check(result: K2Result) -> Tuple[Dict[str, int], List[CheckResult]]:
    """Symbols generate K2, are central, are bimultiplicative, and do not depend on the long root chosen."""
    pres = result.presentation
    ring, phi = pres.ring, pres.phi
    subring = unit_generated_subring(ring)
    if not subring.equals_whole:
        raise HypothesisFailed(f"units of {ring.name} generate a proper subring of order {len(subring.elements)}")

    table = result.table
    n = table.index
    group = chevalley_group(phi, ring)
    alpha = symbol_root(phi)
    perms = symbol_permutations(result, alpha)
    symbol_group = _subgroup_elements(list(perms.values()), n)
    checks = []

    in_kernel = [
        {"u": ring.format(u), "v": ring.format(v)}
        for (u, v) in perms
        if not pi_S(pres, group, symbol(pres, alpha, u, v)).is_identity()
    ]
    checks.append(CheckResult(name="symbols lie in ker π_S", passed=not in_kernel,
                              detail=f"{len(perms)} symbols {{u, v}}_{alpha.label}", counterexamples=in_kernel[:5]))

    checks.append(CheckResult(
        name="symbols generate K2", passed=result.divides and len(symbol_group) == result.k2_order,
        detail=f"symbol subgroup order {len(symbol_group)}, |St|/|G⁺| = {result.st_order}/{result.group_order}",
    ))

    generator_perms = [table.permutation((g + 1,)) for g in range(len(pres.generators))]
    noncentral = []
    for (u, v), s in perms.items():
        for g, p in enumerate(generator_perms):
            if not np.array_equal(p[s], s[p]):
                noncentral.append({"u": ring.format(u), "v": ring.format(v), "generator": pres.generator_name(g)})
    checks.append(CheckResult(
        name="symbols are central", passed=not noncentral,
        detail=f"{len(perms)} symbols x {len(generator_perms)} generators",
        counterexamples=noncentral[:5],
    ))

    unit_list = sorted(units(ring))
    broken = []
    for u1 in unit_list:
        for u2 in unit_list:
            for v in unit_list:
                left = perms[(ring.mul(u1, u2), v)]
                if not np.array_equal(left, perms[(u2, v)][perms[(u1, v)]]):
                    broken.append({"slot": 1, "u1": ring.format(u1), "u2": ring.format(u2), "v": ring.format(v)})
                right = perms[(v, ring.mul(u1, u2))]
                if not np.array_equal(right, perms[(v, u2)][perms[(v, u1)]]):
                    broken.append({"slot": 2, "u1": ring.format(u1), "u2": ring.format(u2), "v": ring.format(v)})
    checks.append(CheckResult(
        name="symbols are bimultiplicative", passed=not broken,
        detail=f"{len(unit_list) ** 3} unit triples in each slot", counterexamples=broken[:5],
    ))

    differing = []
    for other in phi.long_roots:
        if other.index == alpha.index:
            continue
        other_perms = symbol_permutations(result, other)
        if _subgroup_elements(list(other_perms.values()), n) != symbol_group:
            differing.append({"root": other.label})
    checks.append(CheckResult(
        name="symbol subgroup independent of the long root", passed=not differing,
        detail=f"{len(phi.long_roots)} long roots compared", counterexamples=differing[:5],
    ))
    counts = {"symbol_subgroup_order": len(symbol_group), "units": len(unit_list)}
    return counts, checks


def k2_local_product_check(phi: RootSystem, ring: FiniteRing, strategy: SubgroupStrategy = SubgroupStrategy.UNIPOTENT,
                           budget_cosets: Optional[int] = None, budget_bfs: Optional[int] = None,
                           whole: Optional[K2Result] = None) -> Tuple[Dict[str, int], List[CheckResult]]:
    """|K2(Φ, R)| = ∏ |K2(Φ, R_i)| over the local factors."""
    decomposition = local_decomposition(ring)
    whole = whole or k2_order(phi, ring, strategy, budget_cosets, budget_bfs)
    counts = {"k2_order": whole.k2_order, "factors": len(decomposition.factors)}
    if len(decomposition.factors) == 1:
        return counts, [CheckResult(name="K2 local product", passed=whole.divides,
                                    detail=f"{ring.name} is local: single factor")]
    product = 1
    details = []
    for i, factor in enumerate(decomposition.factors):
        part = k2_order(phi, factor, strategy, budget_cosets, budget_bfs)
        if not part.divides:
            raise PreconditionFailed(f"|St| not a multiple of |G⁺| over {factor.name}")
        counts[f"k2_factor_{i}"] = part.k2_order
        product *= part.k2_order
        details.append(f"|K2({factor.name})| = {part.k2_order}")
    checks = [CheckResult(
        name="K2 local product", passed=whole.divides and whole.k2_order == product,
        detail=f"|K2({ring.name})| = {whole.k2_order}; " + ", ".join(details),
    )]
    return counts, checks
