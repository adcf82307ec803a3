"""
Root systems and Chevalley structure constants.

Roots are integer vectors in simple-root coordinates; inner products come
from an integer Gram matrix on the simple roots (short roots have squared
length 2). Positive roots are ordered by height, ties broken by descending
coordinates; negative roots follow in the same order, so the negative of
root i is root (i + |Φ⁺|) mod |Φ|.

Signs of N_{α,β} follow the extraspecial-pair convention: N = +(p+1) on
extraspecial pairs, everything else is forced by the Jacobi identity.
Commutator coefficients for [x_α(s), x_β(t)] = x_α(s) x_β(t) x_α(s)⁻¹ x_β(t)⁻¹
are read off the integral adjoint action.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from chevlab.algebra.errors import (
    InvalidSpec,
    LengthMismatch,
    OppositeRoots,
    RankTooSmall,
    UnsupportedType,
)

logger = logging.getLogger(__name__)

MIN_RANK = {"A": 2, "B": 2, "C": 2, "D": 3, "G": 2}


@dataclass(frozen=True)
class Root:
    index: int
    coords: Tuple[int, ...]
    height: int
    norm: int
    is_long: bool
    label: str

    @property
    def length_class(self) -> str:
        return "long" if self.is_long else "short"

    @property
    def positive(self) -> bool:
        return self.height > 0

    def __str__(self) -> str:
        return self.label


RootLike = Union[Root, int, str, Tuple[int, ...]]


def _simple_ambient(letter: str, rank: int) -> Tuple[np.ndarray, int]:
    """Simple roots in ε-coordinates (Bourbaki numbering) and the Gram scale."""
    if letter == "A":
        basis = np.zeros((rank, rank + 1), dtype=np.int64)
        for i in range(rank):
            basis[i, i], basis[i, i + 1] = 1, -1
        return basis, 1
    basis = np.zeros((rank, rank), dtype=np.int64)
    for i in range(rank - 1):
        basis[i, i], basis[i, i + 1] = 1, -1
    if letter == "B":
        basis[-1, -1] = 1
        return basis, 2
    if letter == "C":
        basis[-1, -1] = 2
        return basis, 1
    basis[-1, -2], basis[-1, -1] = 1, 1
    return basis, 1


def _format_terms(coefficients: Sequence[int], names: Sequence[str]) -> str:
    out = ""
    for c, name in zip(coefficients, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        magnitude = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{magnitude}{name}"
    return out or "0"


class RootSystem:
    """A reduced irreducible root system of rank >= 2."""

    def __init__(self, letter: str, rank: int):
        self.letter = letter
        self.rank = rank
        self.label = f"{letter}{rank}"
        if letter == "G":
            self.gram = np.array([[2, -3], [-3, 6]], dtype=np.int64)
            self.ambient_basis = np.eye(2, dtype=np.int64)
            self.ambient_names = ["c", "k"]
        else:
            basis, scale = _simple_ambient(letter, rank)
            self.gram = (basis @ basis.T) * scale
            self.ambient_basis = basis
            self.ambient_names = [f"e{i + 1}" for i in range(basis.shape[1])]
        self.cartan = np.array(
            [[2 * self.gram[i, j] // self.gram[j, j] for j in range(rank)] for i in range(rank)],
            dtype=np.int64,
        )
        positive = self._positive_roots()
        positive.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        coords = positive + [tuple(-x for x in c) for c in positive]
        norms = [self.inner(c, c) for c in coords]
        top = max(norms)
        self.roots: List[Root] = [
            Root(i, c, sum(c), n, n == top, self._label(c))
            for i, (c, n) in enumerate(zip(coords, norms))
        ]
        self.num_positive = len(positive)
        self._by_coords: Dict[Tuple[int, ...], int] = {r.coords: r.index for r in self.roots}
        self._by_label: Dict[str, int] = {r.label: r.index for r in self.roots}
        logger.debug(f"built {self.label}: {len(self.roots)} roots")

    def __repr__(self) -> str:
        return f"<RootSystem {self.label} |Φ|={len(self.roots)}>"

    def __len__(self) -> int:
        return len(self.roots)

    # ── construction ─────────────────────────────────────
    def _positive_roots(self) -> List[Tuple[int, ...]]:
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        found = set(simple)
        layer = list(simple)
        while layer:
            following = []
            for beta in layer:
                for i in range(self.rank):
                    # p = how far down the α_i-string through β goes; q = p - <β, α_i∨>
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    q = p - self._pairing(beta, simple[i])
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            following.append(up)
            layer = following
        return list(found)

    def _label(self, coords: Tuple[int, ...]) -> str:
        if self.letter == "G":
            return _format_terms(coords, self.ambient_names)
        ambient = np.asarray(coords, dtype=np.int64) @ self.ambient_basis
        return _format_terms(ambient.tolist(), self.ambient_names)

    # ── geometry ─────────────────────────────────────────
    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        return int(np.asarray(a, dtype=np.int64) @ self.gram @ np.asarray(b, dtype=np.int64))

    def _pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """<β, α∨> = 2(β, α)/(α, α)."""
        value = 2 * self.inner(beta, alpha)
        norm = self.inner(alpha, alpha)
        if value % norm:
            raise InvalidSpec(f"non-integral Cartan pairing in {self.label}")
        return value // norm

    def pairing(self, beta: RootLike, alpha: RootLike) -> int:
        return self._pairing(self.root(beta).coords, self.root(alpha).coords)

    def coroot_coordinates(self, alpha: RootLike) -> Tuple[int, ...]:
        """α∨ in the basis of simple coroots."""
        root = self.root(alpha)
        simple_norms = np.diag(self.gram)
        values = []
        for c, n in zip(root.coords, simple_norms):
            num = c * int(n)
            if num % root.norm:
                raise InvalidSpec(f"non-integral coroot for {root.label}")
            values.append(num // root.norm)
        return tuple(values)

    # ── lookup ───────────────────────────────────────────
    @property
    def positive_roots(self) -> List[Root]:
        return self.roots[: self.num_positive]

    @property
    def negative_roots(self) -> List[Root]:
        return self.roots[self.num_positive:]

    @property
    def simple_roots(self) -> List[Root]:
        return self.roots[: self.rank]

    @property
    def long_roots(self) -> List[Root]:
        return [r for r in self.roots if r.is_long]

    @property
    def short_roots(self) -> List[Root]:
        return [r for r in self.roots if not r.is_long]

    def root(self, x: RootLike) -> Root:
        if isinstance(x, Root):
            return self.roots[x.index]
        if isinstance(x, (int, np.integer)):
            return self.roots[int(x)]
        if isinstance(x, tuple):
            if x not in self._by_coords:
                raise InvalidSpec(f"{x} is not a root of {self.label}")
            return self.roots[self._by_coords[x]]
        text = str(x).replace("ε", "e").replace(" ", "").replace("−", "-")
        if text in self._by_label:
            return self.roots[self._by_label[text]]
        # "12" or "e12" shorthand for e_i - e_j in type A
        match = re.fullmatch(r"e?(\d)(\d)", text)
        if match and self.letter == "A":
            i, j = int(match.group(1)), int(match.group(2))
            label = _format_terms(
                [1 if k == i - 1 else -1 if k == j - 1 else 0 for k in range(self.rank + 1)],
                self.ambient_names,
            )
            if label in self._by_label:
                return self.roots[self._by_label[label]]
        raise InvalidSpec(f"{x!r} is not a root of {self.label}")

    def neg(self, x: RootLike) -> Root:
        i = self.root(x).index
        return self.roots[(i + self.num_positive) % len(self.roots)]

    def add(self, a: RootLike, b: RootLike) -> Optional[Root]:
        """a + b when it is a root."""
        ca, cb = self.root(a).coords, self.root(b).coords
        i = self._by_coords.get(tuple(x + y for x, y in zip(ca, cb)))
        return None if i is None else self.roots[i]

    def combination(self, a: RootLike, b: RootLike, i: int, j: int) -> Optional[Root]:
        ca, cb = self.root(a).coords, self.root(b).coords
        k = self._by_coords.get(tuple(i * x + j * y for x, y in zip(ca, cb)))
        return None if k is None else self.roots[k]


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    letter = type_label.strip().upper()
    if letter not in MIN_RANK:
        raise UnsupportedType(f"type {type_label!r} is not supported (A, B, C, D, G)")
    if rank < 2:
        raise RankTooSmall(f"{letter}{rank}: rank must be at least 2")
    if rank < MIN_RANK[letter]:
        raise UnsupportedType(f"{letter}{rank} is not an irreducible system of its own")
    if letter == "G" and rank != 2:
        raise UnsupportedType(f"G{rank} does not exist")
    return RootSystem(letter, rank)


def parse_root_system(text: str) -> RootSystem:
    match = re.fullmatch(r"\s*([A-Za-z])\s*_?\s*(\d+)\s*", text)
    if not match:
        raise UnsupportedType(f"cannot read root system {text!r}; expected e.g. 'A2', 'B2', 'G2'")
    return build_root_system(match.group(1), int(match.group(2)))


def weyl_reflect(phi: RootSystem, alpha: RootLike, beta: RootLike) -> Root:
    """s_α(β) = β - <β, α∨> α."""
    a, b = phi.root(alpha), phi.root(beta)
    k = phi._pairing(b.coords, a.coords)
    return phi.root(tuple(y - k * x for x, y in zip(a.coords, b.coords)))


def root_string(phi: RootSystem, alpha: RootLike, beta: RootLike) -> List[Tuple[int, int]]:
    """All (i, j) with i, j >= 1 and iα + jβ a root, in factor order (level i+j, then (i, j))."""
    a, b = phi.root(alpha), phi.root(beta)
    if phi.neg(a).index == b.index:
        raise OppositeRoots(f"{b.label} = -({a.label})")
    pairs = [
        (i, j)
        for i in range(1, 4)
        for j in range(1, 4)
        if phi.combination(a, b, i, j) is not None
    ]
    return sorted(pairs, key=lambda ij: (ij[0] + ij[1], ij))


def detect_is_g2(phi: RootSystem) -> bool:
    return phi.letter == "G"


def detect_b2_subsystem(phi: RootSystem) -> bool:
    """Two non-orthogonal roots with squared-length ratio 2."""
    norms = {r.norm for r in phi.roots}
    if len(norms) < 2 or max(norms) != 2 * min(norms):
        return False
    return any(
        phi.inner(a.coords, b.coords) != 0
        for a in phi.long_roots
        for b in phi.short_roots
    )


def string_length(phi: RootSystem, alpha: RootLike, beta: RootLike) -> int:
    """Largest p with β - pα a root."""
    a, b = phi.root(alpha), phi.root(beta)
    p = 0
    while phi.combination(a, b, -(p + 1), 1) is not None:
        p += 1
    return p


# ── structure constants ──────────────────────────────────

class _Constants:
    def __init__(self, phi: RootSystem):
        self.phi = phi
        self.memo: Dict[Tuple[int, int], Fraction] = {}
        self.extraspecial: Dict[int, Tuple[int, int]] = {}
        for a, b in combinations(range(phi.num_positive), 2):
            s = phi.add(a, b)
            if s is not None and s.index not in self.extraspecial:
                self.extraspecial[s.index] = (a, b)

    def norm(self, x: int) -> int:
        return self.phi.roots[x].norm

    def neg(self, x: int) -> int:
        return self.phi.neg(x).index

    def positive(self, x: int) -> bool:
        return x < self.phi.num_positive

    def n(self, a: int, b: int) -> Fraction:
        phi = self.phi
        s = phi.add(a, b)
        if s is None:
            return Fraction(0)
        key = (a, b)
        if key in self.memo:
            return self.memo[key]
        if self.positive(a) and self.positive(b):
            if a > b:
                value = -self.n(b, a)
            elif self.extraspecial[s.index] == (a, b):
                value = Fraction(string_length(phi, a, b) + 1)
            else:
                ap, bp = self.extraspecial[s.index]
                total = Fraction(0)
                d1 = phi.add(b, self.neg(ap))
                if d1 is not None:
                    total += self.n(b, self.neg(ap)) * self.n(a, self.neg(bp)) / d1.norm
                d2 = phi.add(a, self.neg(ap))
                if d2 is not None:
                    total += self.n(self.neg(ap), a) * self.n(b, self.neg(bp)) / d2.norm
                value = Fraction(s.norm) / self.n(ap, bp) * total
        elif not self.positive(a) and not self.positive(b):
            value = -self.n(self.neg(a), self.neg(b))
        elif self.positive(a):
            # a + b + z = 0: N_{a,b}/(z,z) = N_{b,z}/(a,a) = N_{z,a}/(b,b)
            z = self.neg(s.index)
            if self.positive(z):
                value = Fraction(self.norm(z), self.norm(b)) * self.n(z, a)
            else:
                value = Fraction(self.norm(z), self.norm(a)) * -self.n(self.neg(b), self.neg(z))
        else:
            value = -self.n(b, a)
        self.memo[key] = value
        return value


@dataclass
class StructureConstants:
    phi: RootSystem
    pair_constants: Dict[Tuple[int, int], int]
    extraspecial: Dict[int, Tuple[int, int]]
    commutator_coeffs: Dict[Tuple[int, int], List[Tuple[int, int, int, int]]] = field(default_factory=dict)

    def N(self, alpha: RootLike, beta: RootLike) -> int:
        a, b = self.phi.root(alpha).index, self.phi.root(beta).index
        return self.pair_constants.get((a, b), 0)

    def commutator(self, alpha: RootLike, beta: RootLike) -> List[Tuple[int, int, int, int]]:
        """[(i, j, γ, C_ij)] with [x_α(s), x_β(t)] = ∏ x_γ(C_ij s^i t^j) in the listed order."""
        a, b = self.phi.root(alpha).index, self.phi.root(beta).index
        if self.phi.neg(a).index == b:
            raise OppositeRoots(f"{self.phi.roots[b].label} = -({self.phi.roots[a].label})")
        return self.commutator_coeffs.get((a, b), [])

    def export(self) -> Dict[str, object]:
        """Plain tree keyed by root labels."""
        roots = self.phi.roots
        return {
            "N": {
                f"{roots[a].label},{roots[b].label}": value
                for (a, b), value in sorted(self.pair_constants.items())
            },
            "commutators": {
                f"{roots[a].label},{roots[b].label}": [
                    {"i": i, "j": j, "root": roots[g].label, "coefficient": c} for i, j, g, c in factors
                ]
                for (a, b), factors in sorted(self.commutator_coeffs.items())
                if factors
            },
        }


# ── adjoint action over the integers ─────────────────────

def adjoint_basis_order(phi: RootSystem) -> List[Tuple[str, int]]:
    """Positive roots by descending height, then h_1..h_r, then negative roots by ascending height."""
    positive = sorted(phi.positive_roots, key=lambda r: (-r.height, r.index))
    negative = sorted(phi.negative_roots, key=lambda r: (-r.height, r.index))
    return (
        [("e", r.index) for r in positive]
        + [("h", i) for i in range(phi.rank)]
        + [("e", r.index) for r in negative]
    )


def adjoint_matrices(phi: RootSystem, constants: Dict[Tuple[int, int], int]) -> Dict[int, np.ndarray]:
    """ad(e_α) in the adjoint basis, as integer matrices."""
    order = adjoint_basis_order(phi)
    position = {entry: k for k, entry in enumerate(order)}
    dim = len(order)
    result = {}
    for alpha in phi.roots:
        m = np.zeros((dim, dim), dtype=np.int64)
        for col, (kind, x) in enumerate(order):
            if kind == "h":
                # [e_α, h_i] = -<α, α_i∨> e_α
                m[position[("e", alpha.index)], col] -= phi._pairing(alpha.coords, phi.roots[x].coords)
            elif x == phi.neg(alpha).index:
                for i, c in enumerate(phi.coroot_coordinates(alpha)):
                    m[position[("h", i)], col] += c
            else:
                s = phi.add(alpha, x)
                if s is not None:
                    m[position[("e", s.index)], col] += constants[(alpha.index, x)]
        result[alpha.index] = m
    return result


def divided_powers(x: np.ndarray) -> List[np.ndarray]:
    """[I, X, X²/2!, ...] up to the last nonzero term; exact over the integers."""
    dim = x.shape[0]
    terms = [np.eye(dim, dtype=np.int64)]
    power = np.eye(dim, dtype=np.int64)
    k = 1
    while True:
        power = power @ x
        if not power.any():
            return terms
        if np.any(power % factorial(k)):
            raise InvalidSpec(f"X^{k}/{k}! is not integral")
        terms.append(power // factorial(k))
        k += 1
        if k > dim + 1:
            raise InvalidSpec("root element is not nilpotent")


def _exp_integer(terms: List[np.ndarray], t: int) -> np.ndarray:
    return sum(term * t ** k for k, term in enumerate(terms))


def _peel_commutator(phi: RootSystem, a: int, b: int, exps: Dict[int, List[np.ndarray]],
                     ad: Dict[int, np.ndarray]) -> List[Tuple[int, int, int, int]]:
    g = _exp_integer(exps[a], 1) @ _exp_integer(exps[b], 1) @ _exp_integer(exps[a], -1) @ _exp_integer(exps[b], -1)
    factors = []
    for i, j in root_string(phi, a, b):
        gamma = phi.combination(a, b, i, j).index
        x = ad[gamma]
        rows, cols = np.nonzero(x)
        k = int(np.argmin(np.abs(x[rows, cols])))
        r, c = rows[k], cols[k]
        if g[r, c] % x[r, c]:
            raise InvalidSpec(f"commutator coefficient for {phi.roots[gamma].label} is not integral")
        coefficient = int(g[r, c] // x[r, c])
        g = _exp_integer(exps[gamma], -coefficient) @ g
        factors.append((i, j, gamma, coefficient))
    if not np.array_equal(g, np.eye(g.shape[0], dtype=np.int64)):
        raise InvalidSpec(f"commutator of {phi.roots[a].label}, {phi.roots[b].label} does not factor")
    return factors


@lru_cache(maxsize=None)
def chevalley_constants(phi: RootSystem) -> StructureConstants:
    engine = _Constants(phi)
    pair_constants: Dict[Tuple[int, int], int] = {}
    for a in range(len(phi)):
        for b in range(len(phi)):
            if phi.add(a, b) is None:
                continue
            value = engine.n(a, b)
            if value.denominator != 1:
                raise InvalidSpec(f"N({phi.roots[a].label}, {phi.roots[b].label}) = {value} is not integral")
            pair_constants[(a, b)] = int(value)
    constants = StructureConstants(phi, pair_constants, dict(engine.extraspecial))

    ad = adjoint_matrices(phi, pair_constants)
    exps = {k: divided_powers(m) for k, m in ad.items()}
    for a in range(len(phi)):
        for b in range(len(phi)):
            if phi.neg(a).index == b:
                continue
            constants.commutator_coeffs[(a, b)] = _peel_commutator(phi, a, b, exps, ad)
    logger.info(f"📐 structure constants for {phi.label}: {len(pair_constants)} N-values")
    return constants


def same_length(phi: RootSystem, alpha: RootLike, beta: RootLike) -> None:
    a, b = phi.root(alpha), phi.root(beta)
    if a.is_long != b.is_long:
        raise LengthMismatch(f"{a.label} is {a.length_class}, {b.label} is {b.length_class}")
