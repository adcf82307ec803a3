"""
Finite commutative unital rings with full operation tables.

Elements are integer indices 0..|R|-1 with 0 the zero element; the index is a
mixed-radix encoding of the ring's normal-form coordinates, so equality of
elements is equality of indices. Addition, multiplication and negation are
numpy int32 tables built once per ring.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np

from chevlab.algebra.errors import InvalidSpec, NotAUnit, NotLocal
from chevlab.algebra.ringspec import (
    PolyQuotientSpec,
    ProductSpec,
    RingSpec,
    ZmodNSpec,
    format_polynomial,
    parse_polynomial,
    parse_ring_spec,
    spec_name,
    validate_spec,
)
from chevlab.config import settings

logger = logging.getLogger(__name__)


def split_top_level(text: str) -> List[str]:
    """Split 'a, (b, c), [d]' on commas that are not nested."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return parts


class FiniteRing:
    """A finite commutative unital ring given by its operation tables."""

    modulus: Optional[int] = None

    def __init__(self, name: str, add: np.ndarray, mul: np.ndarray, neg: np.ndarray, one: int):
        self.name = name
        self.add_table = np.ascontiguousarray(add, dtype=np.int32)
        self.mul_table = np.ascontiguousarray(mul, dtype=np.int32)
        self.neg_table = np.ascontiguousarray(neg, dtype=np.int32)
        self.size = int(self.add_table.shape[0])
        self.zero = 0
        self.one = int(one)
        self._multiples_of_one: Optional[np.ndarray] = None
        self._inverse_table: Optional[np.ndarray] = None

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} |R|={self.size}>"

    def __len__(self) -> int:
        return self.size

    # ── arithmetic ───────────────────────────────────────
    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    @property
    def multiples_of_one(self) -> np.ndarray:
        """[0, 1, 1+1, ...] up to the additive order of 1."""
        if self._multiples_of_one is None:
            values = [0]
            current = self.one
            while current != 0:
                values.append(current)
                current = int(self.add_table[current, self.one])
            self._multiples_of_one = np.array(values, dtype=np.int32)
        return self._multiples_of_one

    @property
    def characteristic(self) -> int:
        return len(self.multiples_of_one)

    def from_int(self, k: int) -> int:
        m = self.multiples_of_one
        return int(m[k % len(m)])

    def from_int_array(self, values: np.ndarray) -> np.ndarray:
        m = self.multiples_of_one
        return m[np.mod(values, len(m))]

    @property
    def inverse_table(self) -> np.ndarray:
        """inverse_table[x] is the inverse of x, or -1 for nonunits."""
        if self._inverse_table is None:
            hits = self.mul_table == self.one
            has = hits.any(axis=1)
            inv = np.where(has, hits.argmax(axis=1), -1)
            self._inverse_table = inv.astype(np.int32)
        return self._inverse_table

    def is_unit(self, x: int) -> bool:
        return bool(self.inverse_table[x] >= 0)

    def inverse(self, x: int) -> int:
        inv = int(self.inverse_table[x])
        if inv < 0:
            raise NotAUnit(self.format(x), self.name)
        return inv

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse(x), -k
        result, base = self.one, x
        while k:
            if k & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            k >>= 1
        return result

    def pow_array(self, xs: np.ndarray, k: int) -> np.ndarray:
        result = np.full(xs.shape, self.one, dtype=np.int32)
        base = xs.astype(np.int32)
        while k:
            if k & 1:
                result = self.mul_table[result, base]
            base = self.mul_table[base, base]
            k >>= 1
        return result

    # ── element I/O ──────────────────────────────────────
    def format(self, x: int) -> str:
        return str(int(x))

    def parse(self, text: Union[str, int]) -> int:
        value = int(text)
        if not 0 <= value < self.size:
            raise InvalidSpec(f"element index {value} out of range for {self.name}")
        return value

    def coords(self, x: int) -> Tuple[int, ...]:
        return (int(x),)

    def generators(self) -> List[int]:
        """Elements generating the ring as a unital ring."""
        return [self.one]


class ZmodNRing(FiniteRing):
    def __init__(self, n: int):
        idx = np.arange(n, dtype=np.int64)
        add = (idx[:, None] + idx[None, :]) % n
        mul = (idx[:, None] * idx[None, :]) % n
        neg = (-idx) % n
        super().__init__(f"Z/{n}", add, mul, neg, 1 % n)
        self.modulus = n

    def from_int(self, k: int) -> int:
        return k % self.modulus

    def from_int_array(self, values: np.ndarray) -> np.ndarray:
        return np.mod(values, self.modulus).astype(np.int32)

    def parse(self, text: Union[str, int]) -> int:
        try:
            return int(str(text).strip()) % self.modulus
        except ValueError:
            raise InvalidSpec(f"cannot read {text!r} as an element of {self.name}") from None


class PolyQuotientRing(FiniteRing):
    """base[x]/(m(x)) with m monic of degree d; coordinates are d base coefficients."""

    def __init__(self, base: FiniteRing, modulus: Sequence[int], name: str):
        self.base = base
        self.degree = d = len(modulus) - 1
        self.poly_modulus = list(modulus)
        q = base.size
        n = q ** d
        idx = np.arange(n, dtype=np.int64)
        self.coefficients = np.stack([(idx // q ** k) % q for k in range(d)], axis=1).astype(np.int32)
        powers = [q ** k for k in range(d)]
        bA, bM, bN = base.add_table, base.mul_table, base.neg_table

        add = np.zeros((n, n), dtype=np.int64)
        neg = np.zeros(n, dtype=np.int64)
        for k in range(d):
            ck = self.coefficients[:, k]
            add += bA[ck[:, None], ck[None, :]].astype(np.int64) * powers[k]
            neg += bN[ck].astype(np.int64) * powers[k]

        # schoolbook product, then fold x^j (j >= d) back with x^d = -(m_0 + ... + m_{d-1} x^{d-1})
        prod = [np.zeros((n, n), dtype=np.int32) for _ in range(2 * d - 1)]
        for i in range(d):
            ci = self.coefficients[:, i]
            for j in range(d):
                cj = self.coefficients[:, j]
                prod[i + j] = bA[prod[i + j], bM[ci[:, None], cj[None, :]]]
        neg_m = [int(bN[base.from_int(c)]) for c in modulus[:d]]
        for k in range(2 * d - 2, d - 1, -1):
            top = prod[k]
            for i in range(d):
                prod[k - d + i] = bA[prod[k - d + i], bM[top, neg_m[i]]]
        mul = np.zeros((n, n), dtype=np.int64)
        for k in range(d):
            mul += prod[k].astype(np.int64) * powers[k]

        super().__init__(name, add, mul, neg, base.one)
        self.x = q if d >= 2 else neg_m[0]

    def coords(self, x: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.coefficients[x])

    def format(self, x: int) -> str:
        coefficients = self.coefficients[x]
        if isinstance(self.base, ZmodNRing):
            return format_polynomial([int(c) for c in coefficients])
        return "[" + ", ".join(self.base.format(int(c)) for c in coefficients) + "]"

    def parse(self, text: Union[str, int]) -> int:
        if isinstance(text, int):
            return super().parse(text)
        text = text.strip()
        if text.startswith("["):
            parts = split_top_level(text[1:-1])
            if len(parts) != self.degree:
                raise InvalidSpec(f"{text!r} needs {self.degree} coefficients")
            q = self.base.size
            return sum(self.base.parse(p) * q ** k for k, p in enumerate(parts))
        value = 0
        for c in reversed(parse_polynomial(text)):
            value = self.add(self.mul(value, self.x), self.from_int(c))
        return value

    def generators(self) -> List[int]:
        return sorted(set(self.base.generators()) | {self.x})


class ProductRing(FiniteRing):
    """Direct product; the first factor is the fastest-varying digit."""

    def __init__(self, factors: Sequence[FiniteRing], name: str):
        self.factors = list(factors)
        sizes = [f.size for f in self.factors]
        self.strides = [int(np.prod(sizes[:i], dtype=np.int64)) for i in range(len(sizes))]
        n = int(np.prod(sizes, dtype=np.int64))
        idx = np.arange(n, dtype=np.int64)
        self.digits = np.stack([(idx // s) % z for s, z in zip(self.strides, sizes)], axis=1).astype(np.int32)
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        neg = np.zeros(n, dtype=np.int64)
        one = 0
        for i, (f, stride) in enumerate(zip(self.factors, self.strides)):
            di = self.digits[:, i]
            add += f.add_table[di[:, None], di[None, :]].astype(np.int64) * stride
            mul += f.mul_table[di[:, None], di[None, :]].astype(np.int64) * stride
            neg += f.neg_table[di].astype(np.int64) * stride
            one += f.one * stride
        super().__init__(name, add, mul, neg, one)

    def coords(self, x: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.digits[x])

    def format(self, x: int) -> str:
        return "(" + ", ".join(f.format(int(c)) for f, c in zip(self.factors, self.digits[x])) + ")"

    def parse(self, text: Union[str, int]) -> int:
        if isinstance(text, int):
            return super().parse(text)
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise InvalidSpec(f"product elements are written '(a, b, ...)', got {text!r}")
        parts = split_top_level(text[1:-1])
        if len(parts) != len(self.factors):
            raise InvalidSpec(f"{text!r} needs {len(self.factors)} components")
        return sum(f.parse(p) * s for f, p, s in zip(self.factors, parts, self.strides))

    def generators(self) -> List[int]:
        return sorted({g * s for f, s in zip(self.factors, self.strides) for g in f.generators()})


class SubsetRing(FiniteRing):
    """A ring carried by a subset of a parent ring closed under its operations (own identity allowed)."""

    def __init__(self, parent: FiniteRing, elements: Sequence[int], identity: int, name: str):
        self.parent = parent
        self.carrier = np.array(sorted(elements), dtype=np.int32)
        position = np.full(parent.size, -1, dtype=np.int32)
        position[self.carrier] = np.arange(len(self.carrier), dtype=np.int32)
        self.position = position
        e = self.carrier
        add = position[parent.add_table[np.ix_(e, e)]]
        mul = position[parent.mul_table[np.ix_(e, e)]]
        neg = position[parent.neg_table[e]]
        super().__init__(name, add, mul, neg, int(position[identity]))

    def format(self, x: int) -> str:
        return self.parent.format(int(self.carrier[x]))

    def coords(self, x: int) -> Tuple[int, ...]:
        return self.parent.coords(int(self.carrier[x]))

    def generators(self) -> List[int]:
        return list(range(self.size))


def spec_size(spec: RingSpec) -> int:
    if isinstance(spec, ZmodNSpec):
        return spec.n
    if isinstance(spec, PolyQuotientSpec):
        return spec_size(spec.base) ** (len(spec.modulus) - 1)
    return math.prod(spec_size(f) for f in spec.factors)


def _build(spec: RingSpec) -> FiniteRing:
    if isinstance(spec, ZmodNSpec):
        return ZmodNRing(spec.n)
    if isinstance(spec, PolyQuotientSpec):
        return PolyQuotientRing(_build(spec.base), spec.modulus, spec_name(spec))
    return ProductRing([_build(f) for f in spec.factors], spec_name(spec))


@lru_cache(maxsize=64)
def _make_ring_cached(name: str) -> FiniteRing:
    ring = _build(parse_ring_spec(name))
    logger.debug(f"built {ring!r}")
    return ring


def make_ring(spec: Union[RingSpec, str], max_order: Optional[int] = None) -> FiniteRing:
    """Build (or fetch from cache) the ring described by a spec or a spec string."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    validate_spec(spec)
    limit = max_order or settings.max_ring_order
    size = spec_size(spec)
    if size > limit:
        raise InvalidSpec(f"{spec_name(spec)} has {size:,} elements; table arithmetic is limited to {limit:,}")
    return _make_ring_cached(spec_name(spec))


# ── ideals ───────────────────────────────────────────────

@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(compare=False, repr=False)
    elements: FrozenSet[int]
    generators: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return int(x) in self.elements

    def sorted(self) -> List[int]:
        return sorted(self.elements)

    @property
    def is_zero(self) -> bool:
        return self.elements == frozenset({0})

    @property
    def array(self) -> np.ndarray:
        return np.array(self.sorted(), dtype=np.int32)

    def is_ideal(self) -> bool:
        """Exhaustive closure check under addition and ring multiplication."""
        e = self.array
        if 0 not in self.elements:
            return False
        sums = np.unique(self.ring.add_table[np.ix_(e, e)])
        products = np.unique(self.ring.mul_table[e, :])
        return set(sums.tolist()) <= self.elements and set(products.tolist()) <= self.elements

    def describe(self) -> Dict[str, object]:
        return {
            "generators": [self.ring.format(g) for g in self.generators],
            "size": len(self),
        }


def _additive_closure(ring: FiniteRing, seed: np.ndarray) -> np.ndarray:
    current = np.unique(np.append(np.asarray(seed, dtype=np.int32), 0))
    while True:
        grown = np.unique(ring.add_table[np.ix_(current, current)])
        if len(grown) == len(current):
            return current
        current = grown


def _closed_ideal(ring: FiniteRing, elements: np.ndarray, generators: Sequence[int] = ()) -> Ideal:
    elements = frozenset(int(x) for x in elements)
    if not generators:
        generators = _greedy_generators(ring, elements)
    return Ideal(ring, elements, tuple(int(g) for g in generators))


def _span(ring: FiniteRing, generators: Sequence[int]) -> np.ndarray:
    if len(generators) == 0:
        return np.array([0], dtype=np.int32)
    multiples = ring.mul_table[np.asarray(generators, dtype=np.int32), :].ravel()
    return _additive_closure(ring, np.unique(multiples))


def _greedy_generators(ring: FiniteRing, elements: FrozenSet[int]) -> Tuple[int, ...]:
    generators: List[int] = []
    covered = {0}
    for x in sorted(elements):
        if x not in covered:
            generators.append(x)
            covered = set(_span(ring, generators).tolist())
            if len(covered) == len(elements):
                break
    return tuple(generators)


def ideal_generated(ring: FiniteRing, generators: Sequence[int]) -> Ideal:
    return _closed_ideal(ring, _span(ring, generators), generators)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    ring = a.ring
    products = np.unique(ring.mul_table[np.ix_(a.array, b.array)])
    return _closed_ideal(ring, _additive_closure(ring, products))


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    if k == 0:
        return ideal_generated(ideal.ring, [ideal.ring.one])
    result = ideal
    for _ in range(k - 1):
        result = ideal_product(result, ideal)
    return result


def nilpotency_degree(ideal: Ideal) -> int:
    """Smallest d >= 1 with ideal^d = 0."""
    d, power = 1, ideal
    while not power.is_zero:
        power = ideal_product(power, ideal)
        d += 1
        if d > ideal.ring.size + 1:
            raise NotLocal(f"ideal of {ideal.ring.name} is not nilpotent")
    return d


# ── units, idempotents, decomposition ────────────────────

def units(ring: FiniteRing) -> Dict[int, int]:
    """Every unit paired with its inverse."""
    inv = ring.inverse_table
    return {int(u): int(inv[u]) for u in np.nonzero(inv >= 0)[0]}


def idempotents(ring: FiniteRing) -> List[int]:
    idx = np.arange(ring.size)
    return [int(e) for e in np.nonzero(ring.mul_table[idx, idx] == idx)[0]]


def primitive_idempotents(ring: FiniteRing) -> List[int]:
    found = idempotents(ring)
    primitive = []
    for e in found:
        if e == 0:
            continue
        if all(f in (0, e) or ring.mul(f, e) != f for f in found):
            primitive.append(e)
    return primitive


def _factor_unit_mask(ring: FiniteRing, e: int) -> np.ndarray:
    """mask[y] is True when y is invertible in the ring eR (identity e)."""
    return (ring.mul_table == e).any(axis=1)


def _local_residue(ring: FiniteRing) -> Tuple[int, int]:
    """(residue characteristic, residue field order) of a local ring."""
    inv = ring.inverse_table
    radical = np.count_nonzero(inv < 0)
    q = ring.size // radical
    p = 2
    while inv[ring.from_int(p)] >= 0:
        p += 1
    return p, q


@dataclass
class LocalDecomposition:
    ring: FiniteRing
    idempotents: Tuple[int, ...]
    factors: Tuple[FiniteRing, ...]
    projections: Tuple[np.ndarray, ...]
    embeddings: Tuple[np.ndarray, ...]

    def project(self, x: int) -> Tuple[int, ...]:
        return tuple(int(p[x]) for p in self.projections)

    def embed(self, parts: Sequence[int]) -> int:
        total = 0
        for emb, part in zip(self.embeddings, parts):
            total = self.ring.add(total, int(emb[part]))
        return total

    def verify(self) -> List[str]:
        """Failures of orthogonality, completeness and the isomorphism property (exhaustive)."""
        ring, problems = self.ring, []
        total = 0
        for i, e in enumerate(self.idempotents):
            total = ring.add(total, e)
            for f in self.idempotents[i + 1:]:
                if ring.mul(e, f) != 0:
                    problems.append(f"e={ring.format(e)}, f={ring.format(f)} not orthogonal")
        if total != ring.one:
            problems.append("idempotents do not sum to 1")
        idx = np.arange(ring.size)
        rebuilt = np.zeros(ring.size, dtype=np.int32)
        for proj, emb, factor in zip(self.projections, self.embeddings, self.factors):
            rebuilt = ring.add_table[rebuilt, emb[proj[idx]]]
            if not np.array_equal(proj[ring.mul_table], factor.mul_table[proj[:, None], proj[None, :]]):
                problems.append(f"projection to {factor.name} not multiplicative")
            if not np.array_equal(proj[ring.add_table], factor.add_table[proj[:, None], proj[None, :]]):
                problems.append(f"projection to {factor.name} not additive")
            if len(primitive_idempotents(factor)) != 1:
                problems.append(f"factor {factor.name} is not local")
        if not np.array_equal(rebuilt, idx):
            problems.append("embed(project(x)) != x")
        return problems


def local_decomposition(ring: FiniteRing) -> LocalDecomposition:
    """Split the ring along its primitive idempotents, ordered by residue field."""
    primitive = primitive_idempotents(ring)
    if len(primitive) == 1:
        identity = np.arange(ring.size, dtype=np.int32)
        return LocalDecomposition(ring, (ring.one,), (ring,), (identity,), (identity,))

    entries = []
    for e in primitive:
        carrier = np.unique(ring.mul_table[e, :])
        multiples = [0]
        current = e
        while current != 0:
            multiples.append(current)
            current = ring.add(current, e)
        if len(multiples) == len(carrier):
            factor: FiniteRing = make_ring(ZmodNSpec(n=len(carrier)))
            embedding = np.array(multiples, dtype=np.int32)
        else:
            factor = SubsetRing(ring, carrier.tolist(), e, f"{ring.name}·{ring.format(e)}")
            embedding = factor.carrier
        position = np.full(ring.size, -1, dtype=np.int32)
        position[embedding] = np.arange(len(embedding), dtype=np.int32)
        projection = position[ring.mul_table[e, :]]
        p, q = _local_residue(factor)
        entries.append(((p, q, e), e, factor, projection, embedding))
    entries.sort(key=lambda item: item[0])
    return LocalDecomposition(
        ring,
        tuple(item[1] for item in entries),
        tuple(item[2] for item in entries),
        tuple(item[3] for item in entries),
        tuple(item[4] for item in entries),
    )


def is_local(ring: FiniteRing) -> bool:
    return len(primitive_idempotents(ring)) == 1


def maximal_ideals(ring: FiniteRing) -> List[Ideal]:
    """One maximal ideal per local factor: M_i = {x : e_i x is not invertible in e_i R}."""
    decomposition = local_decomposition(ring)
    result = []
    for e in decomposition.idempotents:
        unit_mask = _factor_unit_mask(ring, e)
        members = np.nonzero(~unit_mask[ring.mul_table[e, :]])[0]
        result.append(_closed_ideal(ring, members))
    return result


def jacobson_radical(ring: FiniteRing) -> Ideal:
    members = frozenset(range(ring.size))
    for m in maximal_ideals(ring):
        members = members & m.elements
    return _closed_ideal(ring, np.array(sorted(members), dtype=np.int32))


@dataclass
class ResidueField:
    characteristic: int
    order: int


def residue_field(ring: FiniteRing) -> ResidueField:
    if not is_local(ring):
        raise NotLocal(f"{ring.name} is not local")
    p, q = _local_residue(ring)
    return ResidueField(p, q)


@dataclass
class UnitSubring:
    elements: FrozenSet[int]
    equals_whole: bool


def unit_generated_subring(ring: FiniteRing) -> UnitSubring:
    """Smallest subring containing every unit."""
    current = np.array(sorted(units(ring)), dtype=np.int32)
    while True:
        current = _additive_closure(ring, current)
        grown = np.unique(np.concatenate([current, ring.mul_table[np.ix_(current, current)].ravel()]))
        if len(grown) == len(current):
            break
        current = grown
    elements = frozenset(int(x) for x in current)
    return UnitSubring(elements, len(elements) == ring.size)


@dataclass
class NicePair:
    ok: bool
    reason: str


def is_nice_pair(phi, ring: FiniteRing) -> NicePair:
    """2 must be a unit when phi has a B2 subsystem; 2 and 3 when phi is G2."""
    from chevlab.algebra.rootsys import detect_b2_subsystem, detect_is_g2

    two, three = ring.from_int(2), ring.from_int(3)
    if detect_is_g2(phi):
        if not ring.is_unit(two):
            return NicePair(False, f"G2 needs 2 invertible; 2 is not a unit in {ring.name}")
        if not ring.is_unit(three):
            return NicePair(False, f"G2 needs 3 invertible; 3 is not a unit in {ring.name}")
        return NicePair(True, "2 and 3 are units")
    if detect_b2_subsystem(phi):
        if not ring.is_unit(two):
            return NicePair(False, f"{phi.label} contains B2; 2 is not a unit in {ring.name}")
        return NicePair(True, "2 is a unit")
    return NicePair(True, "simply laced: no invertibility condition")


@dataclass
class FiltrationLevel:
    k: int
    ideal: Ideal
    s: int


@dataclass
class RadicalFiltration:
    residue_characteristic: int
    residue_order: int
    nilpotency: int
    levels: List[FiltrationLevel]


def radical_filtration(ring: FiniteRing) -> RadicalFiltration:
    """J ⊃ J^2 ⊃ ... ⊃ J^d = 0 with |J^k / J^(k+1)| = q^(s_k)."""
    field_ = residue_field(ring)
    q = field_.order
    radical = jacobson_radical(ring)
    levels: List[FiltrationLevel] = []
    power, k = radical, 1
    while not power.is_zero:
        following = ideal_product(power, radical)
        ratio = len(power) // len(following)
        s = round(math.log(ratio, q))
        if q ** s != ratio:
            raise NotLocal(f"|J^{k}/J^{k + 1}| = {ratio} is not a power of {q}")
        levels.append(FiltrationLevel(k, power, s))
        power, k = following, k + 1
    return RadicalFiltration(field_.characteristic, q, k, levels)


@dataclass
class WedderburnSplitting:
    split: bool
    section: Optional[FrozenSet[int]]
    reason: str


def wedderburn_splitting(ring: FiniteRing) -> WedderburnSplitting:
    """A subfield mapping isomorphically onto R/J, or the reason none exists."""
    field_ = residue_field(ring)
    radical = jacobson_radical(ring)
    if radical.is_zero:
        return WedderburnSplitting(True, frozenset(ring.elements()), "ring is a field")
    p, q = field_.characteristic, field_.order
    if ring.characteristic != p:
        witness = ring.format(ring.from_int(p))
        return WedderburnSplitting(
            False, None,
            f"characteristic {ring.characteristic} is not the residue characteristic {p}: "
            f"every unital subring contains {witness} != 0 in J",
        )
    d = nilpotency_degree(radical)
    exponent = q
    while exponent < d:
        exponent *= q
    # x -> x^(q^m) with q^m >= d kills J and is a ring map in characteristic p
    image = np.unique(ring.pow_array(np.arange(ring.size), exponent))
    section = frozenset(int(x) for x in image)
    sums = np.unique(ring.add_table[np.ix_(image, image)])
    products = np.unique(ring.mul_table[np.ix_(image, image)])
    closed = set(sums.tolist()) <= section and set(products.tolist()) <= section
    if not closed or len(section) != q or section & radical.elements != {0} or ring.one not in section:
        return WedderburnSplitting(False, None, "Teichmüller image is not a complement to J")
    return WedderburnSplitting(True, section, f"Teichmüller section x -> x^{exponent}")


def check_ring_axioms(ring: FiniteRing, exhaustive_limit: int = 10 ** 6,
                      rng: Optional[np.random.Generator] = None, samples: int = 100_000) -> List[str]:
    """Commutativity, associativity, distributivity, identities and negation."""
    A, M, N = ring.add_table, ring.mul_table, ring.neg_table
    idx = np.arange(ring.size)
    failures = []
    if not np.array_equal(A, A.T):
        failures.append("addition not commutative")
    if not np.array_equal(M, M.T):
        failures.append("multiplication not commutative")
    if not np.array_equal(A[0], idx):
        failures.append("0 is not an additive identity")
    if not np.array_equal(M[ring.one], idx):
        failures.append("1 is not a multiplicative identity")
    if not np.all(A[idx, N[idx]] == 0):
        failures.append("negation is not an additive inverse")
    if ring.size ** 3 <= exhaustive_limit:
        a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = (rng.integers(0, ring.size, samples) for _ in range(3))
    if not np.array_equal(A[A[a, b], c], A[a, A[b, c]]):
        failures.append("addition not associative")
    if not np.array_equal(M[M[a, b], c], M[a, M[b, c]]):
        failures.append("multiplication not associative")
    if not np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]]):
        failures.append("multiplication does not distribute over addition")
    return failures
