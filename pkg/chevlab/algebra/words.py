"""
Word maps that rebuild a ring's multiplication from root-subgroup data.

Each map is a formal expression in its arguments and fixed group elements
e_γ(c), w_γ(c), h_γ(c) whose parameters c are rationals. The rationals are
the same over every ring, so they are fixed once per root system by
evaluating the words over Z/101 and reading off coefficients; evaluating
over another ring then only maps each rational into that ring.

Carriers: A_n on e1-e3, B2 on the short root e1 (long carrier e1+e2),
G2 on the long root k (short carrier 2c+k).
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from chevlab.algebra.chevmatrix import (
    ChevalleyGroup,
    GroupElement,
    chevalley_group,
    commutator_lhs,
)
from chevlab.algebra.errors import (
    LengthMismatch,
    NicePairViolation,
    NotAHomomorphism,
    PreconditionFailed,
    UnsupportedType,
)
from chevlab.algebra.finring import FiniteRing, check_ring_axioms, is_nice_pair, make_ring
from chevlab.algebra.rootsys import RootLike, RootSystem, chevalley_constants, same_length, weyl_reflect
from chevlab.config import settings
from chevlab.runner.models import CheckResult

logger = logging.getLogger(__name__)


# ── expressions ──────────────────────────────────────────

@dataclass(frozen=True)
class Arg:
    index: int

    def __str__(self) -> str:
        return f"a{self.index + 1}"


@dataclass(frozen=True)
class Elem:
    """e_γ(c), w_γ(c) or h_γ(c) with a rational parameter."""
    kind: str
    root: int
    value: Fraction
    label: str = ""

    def __str__(self) -> str:
        return f"{self.kind}_{{{self.label}}}({self.value})"


@dataclass(frozen=True)
class Inv:
    arg: "Expr"

    def __str__(self) -> str:
        return f"({self.arg})⁻¹"


@dataclass(frozen=True)
class Prod:
    factors: Tuple["Expr", ...]

    def __str__(self) -> str:
        return " · ".join(str(f) for f in self.factors)


Expr = Union[Arg, Elem, Inv, Prod]


def comm(a: Expr, b: Expr) -> Prod:
    """[a, b] = a b a⁻¹ b⁻¹"""
    return Prod((a, b, Inv(a), Inv(b)))


def conj(g: Expr, x: Expr) -> Prod:
    return Prod((g, x, Inv(g)))


def substitute(expr: Expr, args: Sequence[Expr]) -> Expr:
    if isinstance(expr, Arg):
        return args[expr.index]
    if isinstance(expr, Inv):
        return Inv(substitute(expr.arg, args))
    if isinstance(expr, Prod):
        return Prod(tuple(substitute(f, args) for f in expr.factors))
    return expr


def ring_value(ring: FiniteRing, value: Fraction) -> int:
    den = ring.from_int(value.denominator)
    if not ring.is_unit(den):
        raise NicePairViolation(f"{value.denominator} is not invertible in {ring.name}")
    return ring.mul(ring.from_int(value.numerator), ring.inverse(den))


def evaluate(group: ChevalleyGroup, expr: Expr, args: Sequence[GroupElement]) -> GroupElement:
    if isinstance(expr, Arg):
        return args[expr.index]
    if isinstance(expr, Inv):
        return evaluate(group, expr.arg, args).inv()
    if isinstance(expr, Prod):
        g = group.identity
        for f in expr.factors:
            g = g * evaluate(group, f, args)
        return g
    t = ring_value(group.ring, expr.value)
    if expr.kind == "e":
        return group.e(expr.root, t)
    if expr.kind == "w":
        return group.w(expr.root, t)
    return group.h(expr.root, t)


@dataclass(frozen=True)
class WordMap:
    name: str
    arity: int
    template: Expr
    domain: int
    codomain: int

    def __call__(self, group: ChevalleyGroup, *args: GroupElement) -> GroupElement:
        return evaluate(group, self.template, args)

    def describe(self, phi: RootSystem) -> Dict[str, object]:
        return {
            "name": self.name, "arity": self.arity,
            "domain": phi.roots[self.domain].label, "codomain": phi.roots[self.codomain].label,
            "template": str(self.template),
        }


# ── calibration over Z/p ─────────────────────────────────

def _elem(phi: RootSystem, kind: str, root: RootLike, value) -> Elem:
    r = phi.root(root)
    return Elem(kind, r.index, Fraction(value), r.label)


def _lift(ring: FiniteRing, x: int) -> int:
    n = ring.size
    return x if x <= n // 2 else x - n


@lru_cache(maxsize=None)
def _carrier_lookup(group: ChevalleyGroup, root: int) -> Dict[bytes, int]:
    stack = group.root_stack(root)
    return {key: t for t, key in enumerate(group.ops.keys(stack))}


def read_coordinate(group: ChevalleyGroup, root: RootLike, g: GroupElement) -> Optional[int]:
    """t with g = e_root(t), or None."""
    return _carrier_lookup(group, group.phi.root(root).index).get(group.ops.key(g.matrix))


def read_product(group: ChevalleyGroup, g: GroupElement, roots: Sequence[RootLike]) -> Tuple[int, ...]:
    """Coordinates of g = ∏ e_γ(t_γ) in the given order, peeled from the right."""
    ring = group.ring
    coords: List[int] = []
    remaining = g
    for root in reversed(list(roots)):
        r, c, value = group.rep.probes[group.phi.root(root).index]
        t = ring.mul(int(remaining.matrix[r, c]), ring.inverse(ring.from_int(value)))
        coords.append(t)
        remaining = remaining * group.e(root, ring.neg(t))
    if not remaining.is_identity():
        raise PreconditionFailed(f"element is not a product over {[str(r) for r in roots]}")
    return tuple(reversed(coords))


class _Calibrator:
    """Evaluates templates over Z/p and reads integer coefficients."""

    def __init__(self, phi: RootSystem, kind: Optional[str]):
        self.phi = phi
        self.ring = make_ring(f"Z/{settings.calibration_modulus}")
        self.group = chevalley_group(phi, self.ring, kind)

    def e(self, root: RootLike, t: int = 1) -> GroupElement:
        return self.group.e(root, self.ring.from_int(t))

    def coefficient(self, expr: Expr, args: Sequence[GroupElement], root: RootLike) -> int:
        value = read_coordinate(self.group, root, evaluate(self.group, expr, args))
        if value is None:
            raise PreconditionFailed(f"calibration of {expr} did not land in e_{self.phi.root(root).label}")
        return _lift(self.ring, value)

    def coefficients(self, expr: Expr, args: Sequence[GroupElement], roots: Sequence[RootLike]) -> Tuple[int, ...]:
        values = read_product(self.group, evaluate(self.group, expr, args), roots)
        return tuple(_lift(self.ring, v) for v in values)

    def scale(self, beta: RootLike, factor: Fraction) -> Elem:
        """h_δ(λ) with h_δ(λ) e_β(t) h_δ(λ)⁻¹ = e_β(factor · t)."""
        phi = self.phi
        b = phi.root(beta)
        delta = next((d for d in phi.roots if phi.pairing(b, d) == 1), None)
        if delta is None:
            raise PreconditionFailed(f"no root δ with <{b.label}, δ∨> = 1")
        probe = self.coefficient(conj(_elem(phi, "h", delta, 2), Arg(0)), [self.e(b)], b)
        exponent = 1 if probe == 2 else -1
        return _elem(phi, "h", delta, factor if exponent == 1 else 1 / factor)


# ── transport ────────────────────────────────────────────

@dataclass
class TransportWord:
    """w = w_{γ_k}(1) ··· w_{γ_1}(1) with w e_{α0}(t) w⁻¹ = e_α(sign · t)."""
    source: int
    target: int
    reflections: List[int]
    sign: int
    element: Expr = field(default=None)

    def describe(self, phi: RootSystem) -> Dict[str, object]:
        return {
            "from": phi.roots[self.source].label, "to": phi.roots[self.target].label,
            "word": [f"w_{{{phi.roots[i].label}}}(1)" for i in reversed(self.reflections)],
            "sign": self.sign,
        }


@lru_cache(maxsize=None)
def _transport(phi: RootSystem, kind: Optional[str], source: int, target: int) -> TransportWord:
    same_length(phi, source, target)
    parent: Dict[int, Tuple[int, int]] = {source: (-1, -1)}
    queue = deque([source])
    while queue:
        beta = queue.popleft()
        if beta == target:
            break
        for simple in phi.simple_roots:
            image = weyl_reflect(phi, simple, beta).index
            if image not in parent:
                parent[image] = (beta, simple.index)
                queue.append(image)
    if target not in parent:
        raise LengthMismatch(f"{phi.roots[target].label} is not in the Weyl orbit of {phi.roots[source].label}")
    reflections: List[int] = []
    node = target
    while node != source:
        node, simple = parent[node]
        reflections.append(simple)
    reflections.reverse()
    element = Prod(tuple(_elem(phi, "w", i, 1) for i in reversed(reflections)))
    cal = _Calibrator(phi, kind)
    sign = cal.coefficient(conj(element, Arg(0)), [cal.e(source)], target)
    if sign not in (1, -1):
        raise PreconditionFailed(f"transport sign {sign} is not ±1")
    return TransportWord(source, target, reflections, sign, element)


def transport_word(group: ChevalleyGroup, alpha0: RootLike, alpha: RootLike) -> TransportWord:
    phi = group.phi
    return _transport(phi, group.rep.kind, phi.root(alpha0).index, phi.root(alpha).index)


def verify_transport(group: ChevalleyGroup, word: TransportWord) -> bool:
    """w e_{α0}(t) w⁻¹ = e_α(sign · t) for every t in the ring."""
    ring, ops = group.ring, group.ops
    w = evaluate(group, word.element, [])
    moved = ops.matmul(ops.matmul(w.matrix, group.root_stack(word.source)), w.inverse)
    scaled = ring.mul_table[ring.from_int(word.sign), np.arange(ring.size)]
    return bool(np.array_equal(moved, group.root_stack(word.target)[scaled]))


# ── word-map families ────────────────────────────────────

def _a2_style_product(cal: _Calibrator, gamma: int, left: Expr, right: Expr, name: str) -> WordMap:
    """[L a1 L⁻¹, R a2 R⁻¹] with the sign fixed so that the result is e_γ(t1 t2)."""
    phi = cal.phi
    template = comm(conj(left, Arg(0)), conj(right, Arg(1)))
    sign = cal.coefficient(template, [cal.e(gamma), cal.e(gamma)], gamma)
    if sign == -1:
        template = comm(conj(left, Arg(0)), conj(right, Inv(Arg(1))))
    elif sign != 1:
        raise PreconditionFailed(f"{name}: coefficient {sign} is not ±1")
    return WordMap(name, 2, template, gamma, gamma)


@lru_cache(maxsize=None)
def word_maps(phi: RootSystem, kind: Optional[str] = None) -> Dict[str, WordMap]:
    """Calibrated word maps for the root system, keyed by name."""
    cal = _Calibrator(phi, kind)
    kind = cal.group.rep.kind
    maps: Dict[str, WordMap] = {}

    if phi.letter == "A":
        gamma = phi.root("13").index
        w12, w23 = _elem(phi, "w", "12", 1), _elem(phi, "w", "23", 1)
        maps["mult"] = _a2_style_product(cal, gamma, w23, Inv(w12), "a2_mult")

    elif phi.label == "B2":
        e1, e2, e12 = phi.root("e1").index, phi.root("e2").index, phi.root("e1+e2").index
        n = cal.coefficient(comm(Arg(0), _elem(phi, "e", e2, 1)), [cal.e(e1)], e12)
        pi = comm(Arg(0), _elem(phi, "e", e2, Fraction(1, n)))
        minus_e2 = phi.root("-e2").index
        z = Prod((comm(Arg(0), _elem(phi, "e", minus_e2, 1)), Inv(comm(Arg(0), _elem(phi, "e", minus_e2, -1)))))
        m = cal.coefficient(z, [cal.e(e12)], e1)
        nu = conj(cal.scale(e1, Fraction(1, m)), z)
        w = _elem(phi, "w", "-e1+e2", 1)
        c = cal.coefficient(comm(Arg(0), conj(w, Arg(1))), [cal.e(e1), cal.e(e1)], e12)
        inner = comm(Arg(0), conj(w, conj(cal.scale(e1, Fraction(1, c)), Arg(1))))
        mult = substitute(nu, [inner])
        maps["pi"] = WordMap("b2_pi", 1, pi, e1, e12)
        maps["nu"] = WordMap("b2_nu", 1, nu, e12, e1)
        maps["mult"] = WordMap("b2_mult", 2, mult, e1, e1)
        long_mult = substitute(pi, [substitute(mult, [substitute(nu, [Arg(0)]), substitute(nu, [Arg(1)])])])
        maps["long_mult"] = WordMap("b2_long_mult", 2, long_mult, e12, e12)

    elif phi.label == "G2":
        c, k = phi.root("c").index, phi.root("k").index
        two_c_k, three_c_k, top = phi.root("2c+k").index, phi.root("3c+k").index, phi.root("3c+2k").index
        c_k = phi.root("c+k").index
        x = Prod((comm(Arg(0), _elem(phi, "e", c, 1)), comm(Arg(0), _elem(phi, "e", c, -1))))
        a, b = cal.coefficients(x, [cal.e(k)], [top, two_c_k])
        w1 = _elem(phi, "w", c, 1)
        y0 = cal.coefficient(comm(conj(w1, Arg(0)), Arg(0)), [cal.e(k)], top)
        y = comm(conj(w1, Arg(0)), conj(cal.scale(k, Fraction(-a, y0)), Arg(0)))
        kappa = conj(cal.scale(two_c_k, Fraction(1, b)), Prod((y, x)))
        w2 = _elem(phi, "w", three_c_k, 1)
        z = comm(conj(w2, Arg(0)), _elem(phi, "e", c_k, 1))
        lam = cal.coefficient(z, [cal.e(two_c_k)], k)
        theta = conj(cal.scale(k, Fraction(1, lam)), z)
        maps["kappa"] = WordMap("g2_kappa", 1, kappa, k, two_c_k)
        maps["theta"] = WordMap("g2_theta", 1, theta, two_c_k, k)
        # long roots form an A2: k = (3c+2k) + (-3c-k)
        left = _transport(phi, kind, k, top)
        right = _transport(phi, kind, k, phi.neg(three_c_k).index)
        maps["mult"] = _a2_style_product(cal, k, left.element, right.element, "g2_mult")
        short = substitute(kappa, [substitute(maps["mult"].template, [substitute(theta, [Arg(0)]),
                                                                      substitute(theta, [Arg(1)])])])
        maps["short_mult"] = WordMap("g2_short_mult", 2, short, two_c_k, two_c_k)

    else:
        raise UnsupportedType(f"no word maps for {phi.label}; supported: A_n, B2, G2")
    logger.info(f"📐 word maps for {phi.label} calibrated over {cal.ring.name}: {', '.join(maps)}")
    return maps


def _require_nice(group: ChevalleyGroup) -> None:
    nice = is_nice_pair(group.phi, group.ring)
    if not nice.ok:
        raise NicePairViolation(nice.reason)


def _maps(group: ChevalleyGroup, required: str) -> Dict[str, WordMap]:
    if required != "A" and group.phi.label != required:
        raise UnsupportedType(f"{required} word map applied to {group.phi.label}")
    _require_nice(group)
    return word_maps(group.phi, group.rep.kind)


def a2_mult_word(group: ChevalleyGroup, a1: GroupElement, a2: GroupElement) -> GroupElement:
    if group.phi.letter != "A":
        raise UnsupportedType(f"A2 word map applied to {group.phi.label}")
    return word_maps(group.phi, group.rep.kind)["mult"](group, a1, a2)


def b2_pi(group: ChevalleyGroup, x: GroupElement) -> GroupElement:
    return _maps(group, "B2")["pi"](group, x)


def b2_nu(group: ChevalleyGroup, y: GroupElement) -> GroupElement:
    return _maps(group, "B2")["nu"](group, y)


def b2_mult_word(group: ChevalleyGroup, u: GroupElement, v: GroupElement) -> GroupElement:
    return _maps(group, "B2")["mult"](group, u, v)


def b2_long_mult(group: ChevalleyGroup, u: GroupElement, v: GroupElement) -> GroupElement:
    return _maps(group, "B2")["long_mult"](group, u, v)


def g2_kappa(group: ChevalleyGroup, u: GroupElement) -> GroupElement:
    return _maps(group, "G2")["kappa"](group, u)


def g2_theta(group: ChevalleyGroup, u: GroupElement) -> GroupElement:
    return _maps(group, "G2")["theta"](group, u)


def g2_mult_word(group: ChevalleyGroup, u: GroupElement, v: GroupElement) -> GroupElement:
    return _maps(group, "G2")["mult"](group, u, v)


def g2_short_mult(group: ChevalleyGroup, u: GroupElement, v: GroupElement) -> GroupElement:
    return _maps(group, "G2")["short_mult"](group, u, v)


def carrier_root(phi: RootSystem) -> int:
    if phi.letter == "A":
        return phi.root("13").index
    if phi.label == "B2":
        return phi.root("e1").index
    if phi.label == "G2":
        return phi.root("k").index
    raise UnsupportedType(f"no carrier for {phi.label}; supported: A_n, B2, G2")


# ── reconstruction harness ───────────────────────────────

@dataclass
class ReconstructionHarness:
    phi: RootSystem
    source: FiniteRing
    target: FiniteRing
    f: np.ndarray
    kind: Optional[str] = None

    @property
    def group(self) -> ChevalleyGroup:
        return chevalley_group(self.phi, self.target, self.kind)


def extend_homomorphism(source: FiniteRing, target: FiniteRing, images: Sequence[int]) -> np.ndarray:
    """The ring map sending source.generators() to images, checked exhaustively."""
    gens = source.generators()
    if len(images) != len(gens):
        raise NotAHomomorphism(f"{source.name} has {len(gens)} generator(s), got {len(images)} image(s)")
    f = np.full(source.size, -1, dtype=np.int64)
    f[0], f[source.one] = 0, target.one
    for g, image in zip(gens, images):
        if f[g] >= 0 and f[g] != image:
            raise NotAHomomorphism(f"{source.format(g)} sent to both {target.format(int(f[g]))} and {target.format(image)}")
        f[g] = image
    changed = True
    while changed:
        changed = False
        known = np.nonzero(f >= 0)[0]
        for x in known:
            for y in known:
                for z, value in ((source.add(x, y), target.add(int(f[x]), int(f[y]))),
                                 (source.mul(x, y), target.mul(int(f[x]), int(f[y])))):
                    if f[z] < 0:
                        f[z] = value
                        changed = True
                    elif f[z] != value:
                        raise NotAHomomorphism(f"images force {source.format(z)} to two values")
    if (f < 0).any():
        raise NotAHomomorphism(f"generator images do not determine a map on all of {source.name}")
    adds = f[source.add_table] == target.add_table[f[:, None], f[None, :]]
    muls = f[source.mul_table] == target.mul_table[f[:, None], f[None, :]]
    if not adds.all() or not muls.all():
        raise NotAHomomorphism(f"extension is not additive and multiplicative on {source.name}")
    return f


def make_harness(phi: RootSystem, source: FiniteRing, target: Optional[FiniteRing] = None,
                 images: Optional[Sequence[Union[str, int]]] = None, kind: Optional[str] = None) -> ReconstructionHarness:
    target = target or source
    if images is None:
        if target is source:
            images = source.generators()
        elif source.generators() == [source.one]:
            images = [target.one]
        else:
            raise NotAHomomorphism(f"give generator images for {source.name} -> {target.name}")
    parsed = [target.parse(i) if isinstance(i, str) else int(i) for i in images]
    return ReconstructionHarness(phi, source, target, extend_homomorphism(source, target, parsed), kind)


def _carrier_ring(name: str, add: np.ndarray, mul: np.ndarray, one: int) -> FiniteRing:
    neg = np.argmax(add == 0, axis=1).astype(np.int32)
    return FiniteRing(name, add.astype(np.int32), mul.astype(np.int32), neg, one)


def functoriality_check(harness: ReconstructionHarness) -> CheckResult:
    """e_α(f(r)) satisfies (R1) and (R2) computed in the source ring."""
    group, source, f = harness.group, harness.source, harness.f
    phi, ops = group.phi, group.ops
    everything = np.arange(source.size)
    failures = []
    for alpha in phi.roots:
        stack = group.root_stack(alpha)
        lhs = ops.matmul(stack[f][:, None], stack[f][None, :])
        rhs = stack[f[source.add_table]]
        if np.any(lhs != rhs):
            failures.append({"relation": "R1", "alpha": alpha.label})
    constants = chevalley_constants(phi)
    for alpha in phi.roots:
        for beta in phi.roots:
            if phi.neg(alpha).index == beta.index:
                continue
            lhs = commutator_lhs(group, alpha, beta)[f[:, None], f[None, :]]
            rhs = np.broadcast_to(ops.identity, lhs.shape)
            for i, j, gamma, c in constants.commutator(alpha, beta):
                si, tj = source.pow_array(everything, i), source.pow_array(everything, j)
                coefficient = source.mul_table[source.from_int(c), source.mul_table[si[:, None], tj[None, :]]]
                rhs = ops.matmul(rhs, group.root_stack(gamma)[f[coefficient]])
            if np.any(lhs != rhs):
                failures.append({"relation": "R2", "alpha": alpha.label, "beta": beta.label})
    return CheckResult(
        name="induced map respects R1 and R2", passed=not failures,
        detail=f"x̃_α(r) -> e_α(f(r)) over {len(phi)} roots and {source.size}² ring pairs",
        counterexamples=failures[:5],
    )


def _table_check(group: ChevalleyGroup, mult: Callable, domain: int, codomain: int,
                 name: str) -> Tuple[CheckResult, np.ndarray]:
    """mult(e_d(s), e_d(t)) = e_c(st) for every s, t; also returns the coordinate table."""
    ring = group.ring
    table = np.full((ring.size, ring.size), -1, dtype=np.int64)
    bad = []
    for s in ring.elements():
        for t in ring.elements():
            value = read_coordinate(group, codomain, mult(group, group.e(domain, s), group.e(domain, t)))
            if value is not None:
                table[s, t] = value
            if value != ring.mul(s, t):
                bad.append({"s": ring.format(s), "t": ring.format(t),
                            "got": None if value is None else ring.format(value)})
    return CheckResult(name=name, passed=not bad, detail=f"{ring.size ** 2 - len(bad)}/{ring.size ** 2} pairs",
                       counterexamples=bad[:5]), table


def _inverse_check(group: ChevalleyGroup, forward: WordMap, backward: WordMap, name: str) -> CheckResult:
    ring = group.ring
    bad = []
    for t in ring.elements():
        x = group.e(forward.domain, t)
        y = forward(group, x)
        if read_coordinate(group, forward.codomain, y) != t or backward(group, y) != x:
            bad.append({"t": ring.format(t)})
        z = group.e(backward.domain, t)
        if forward(group, backward(group, z)) != z:
            bad.append({"t": ring.format(t), "direction": "reverse"})
    return CheckResult(name=name, passed=not bad, detail=f"{ring.size} carrier elements each way",
                       counterexamples=bad[:5])


def transport_checks(group: ChevalleyGroup) -> List[CheckResult]:
    """B2: π and ν; G2: κ and θ; both also compare the two carrier products."""
    _require_nice(group)
    maps = word_maps(group.phi, group.rep.kind)
    checks = []
    if group.phi.label == "B2":
        checks.append(_inverse_check(group, maps["pi"], maps["nu"], "π and ν are mutually inverse"))
        checks.append(_table_check(group, maps["long_mult"], maps["long_mult"].domain, maps["long_mult"].codomain,
                                   "long carrier product is ring multiplication")[0])
        ring = group.ring
        bad = []
        for s in ring.elements():
            for t in ring.elements():
                u, v = group.e(maps["mult"].domain, s), group.e(maps["mult"].domain, t)
                if maps["pi"](group, maps["mult"](group, u, v)) != maps["long_mult"](group, maps["pi"](group, u),
                                                                                    maps["pi"](group, v)):
                    bad.append({"s": ring.format(s), "t": ring.format(t)})
        checks.append(CheckResult(name="short and long carrier products agree through π", passed=not bad,
                                  detail=f"{ring.size ** 2} pairs", counterexamples=bad[:5]))
    elif group.phi.label == "G2":
        checks.append(_inverse_check(group, maps["kappa"], maps["theta"], "κ and θ are mutually inverse"))
        checks.append(_table_check(group, maps["short_mult"], maps["short_mult"].domain, maps["short_mult"].codomain,
                                   "short carrier product is ring multiplication")[0])
    return checks


def reconstruct_ring(harness: ReconstructionHarness) -> Tuple[Dict[str, int], Dict[str, object], List[CheckResult]]:
    """Rebuild f(R) from the carrier A_α = {e_α(f(r))} with matrix product and the mult word."""
    group = harness.group
    if group.phi.letter != "A":
        _require_nice(group)
    source, target, f = harness.source, harness.target, harness.f
    phi = group.phi
    maps = word_maps(phi, group.rep.kind)
    mult = maps["mult"]
    alpha = carrier_root(phi)
    checks: List[CheckResult] = []

    # carrier elements indexed by their e_α coordinate, zero first
    coordinates = sorted({int(x) for x in f})
    position = {t: i for i, t in enumerate(coordinates)}
    elements = [group.e(alpha, t) for t in coordinates]
    m = len(elements)
    add = np.full((m, m), -1, dtype=np.int64)
    mul = np.full((m, m), -1, dtype=np.int64)
    escaped = []
    for i, u in enumerate(elements):
        for j, v in enumerate(elements):
            for table, g, op in ((add, u * v, "⊕"), (mul, mult(group, u, v), "⊗")):
                t = read_coordinate(group, alpha, g)
                if t is None or t not in position:
                    escaped.append({"op": op, "u": target.format(coordinates[i]), "v": target.format(coordinates[j])})
                else:
                    table[i, j] = position[t]
    checks.append(CheckResult(name="carrier closed under ⊕ and ⊗", passed=not escaped,
                              detail=f"{m}² pairs", counterexamples=escaped[:5]))
    counts = {"carrier_size": m, "source_size": source.size, "kernel_size": int(np.count_nonzero(f == 0))}
    tables: Dict[str, object] = {"word_map": mult.describe(phi), "f_injective": counts["kernel_size"] == 1}
    if escaped:
        return counts, tables, checks

    one = position[target.one] if target.one in position else -1
    checks.append(CheckResult(name="identity is F(e_α(1))", passed=one >= 0 and bool(np.all(mul[one] == np.arange(m))),
                              detail=f"F(e_α(1)) = e_α({target.format(target.one)})"))
    reconstructed = _carrier_ring(f"A_{phi.roots[alpha].label}", add, mul, max(one, 0))
    axiom_failures = check_ring_axioms(reconstructed)
    commutative = bool(np.array_equal(mul, mul.T))
    checks.append(CheckResult(name="carrier is a commutative unital ring", passed=not axiom_failures and commutative,
                              detail=f"{len(axiom_failures)} axiom failure(s), commutative: {commutative}",
                              counterexamples=[{"failure": s} for s in axiom_failures[:5]]))

    image = np.array([position[int(x)] for x in f])
    additive = np.array_equal(add[image[:, None], image[None, :]], image[source.add_table])
    multiplicative = np.array_equal(mul[image[:, None], image[None, :]], image[source.mul_table])
    checks.append(CheckResult(name="r -> F(e_α(r)) is a surjective ring homomorphism",
                              passed=additive and multiplicative and len(set(image.tolist())) == m,
                              detail=f"additive: {additive}, multiplicative: {multiplicative}"))

    coords = np.array(coordinates)
    iso = (np.array_equal(coords[add], target.add_table[coords[:, None], coords[None, :]])
           and np.array_equal(coords[mul], target.mul_table[coords[:, None], coords[None, :]]))
    checks.append(CheckResult(name="carrier ring isomorphic to f(R) by e_α-coordinates", passed=iso,
                              detail=f"|f(R)| = {m} inside {target.name}"))

    checks.append(functoriality_check(harness))
    if phi.label in ("B2", "G2"):
        checks.extend(transport_checks(group))

    if m <= settings.report_table_limit:
        labels = [target.format(t) for t in coordinates]
        tables["elements"] = labels
        tables["addition"] = [[labels[x] for x in row] for row in add.tolist()]
        tables["multiplication"] = [[labels[x] for x in row] for row in mul.tolist()]
    logger.info(f"🔎 reconstruction {phi.label}: {source.name} -> {target.name}, carrier of size {m}")
    return counts, tables, checks
