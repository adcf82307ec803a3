"""
Matrix realizations of universal Chevalley groups over finite rings.

A Representation holds integer nilpotent matrices X_α for every root, built so
that [X_α, X_β] = N_{α,β} X_{α+β} with the constants from rootsys, and the
divided powers X_α^k/k! so that e_α(t) = Σ t^k X_α^k/k!. A ChevalleyGroup binds
a representation to a ring and hands out GroupElements.

Realizations: A_n natural (n+1), B2 and C_n symplectic, everything else adjoint.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from chevlab.algebra.errors import InvalidSpec, NicePairViolation, NotAUnit
from chevlab.algebra.finring import FiniteRing, is_nice_pair
from chevlab.algebra.matrices import MatrixOps
from chevlab.algebra.rootsys import (
    RootLike,
    RootSystem,
    StructureConstants,
    adjoint_matrices,
    chevalley_constants,
    detect_is_g2,
    divided_powers,
)
from chevlab.runner.models import CheckResult

logger = logging.getLogger(__name__)


def _unit(dim: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((dim, dim), dtype=np.int64)
    m[i, j] = 1
    return m


def _bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def symplectic_form(n: int) -> np.ndarray:
    """Ω on the basis ε1..εn, -εn..-ε1."""
    dim = 2 * n
    omega = np.zeros((dim, dim), dtype=np.int64)
    for i in range(n):
        omega[i, dim - 1 - i] = 1
        omega[dim - 1 - i, i] = -1
    return omega


def _symplectic_simple(n: int) -> List[np.ndarray]:
    """X for ε_i - ε_(i+1) (i < n) and 2ε_n, preserving Ω."""
    dim = 2 * n
    omega = symplectic_form(n)
    simple = []
    for i in range(n - 1):
        for sign in (1, -1):
            x = _unit(dim, i, i + 1) + sign * _unit(dim, dim - 2 - i, dim - 1 - i)
            if not (x.T @ omega + omega @ x).any():
                simple.append(x)
                break
        else:
            raise InvalidSpec(f"no symplectic root element for e{i + 1}-e{i + 2}")
    simple.append(_unit(dim, n - 1, n))
    return simple


@dataclass(eq=False)
class Representation:
    phi: RootSystem
    constants: StructureConstants
    kind: str
    dim: int
    x: Dict[int, np.ndarray]
    templates: Dict[int, List[np.ndarray]]
    weights: np.ndarray
    form: Optional[np.ndarray] = None
    units_required: Tuple[int, ...] = ()
    probes: Dict[int, Tuple[int, int, int]] = field(default_factory=dict)

    def __repr__(self) -> str:
        return f"<Representation {self.phi.label} {self.kind} dim={self.dim}>"

    def coroot_weights(self, alpha: RootLike) -> np.ndarray:
        """<λ_b, α∨> for every basis vector b."""
        coroot = np.asarray(self.phi.coroot_coordinates(alpha), dtype=np.int64)
        return coroot @ self.weights

    def bracket_failures(self) -> List[str]:
        phi, problems = self.phi, []
        for a in phi.roots:
            for b in phi.roots:
                lhs = _bracket(self.x[a.index], self.x[b.index])
                if phi.neg(a).index == b.index:
                    expected = np.diag(self.coroot_weights(a))
                else:
                    s = phi.add(a, b)
                    expected = 0 if s is None else self.constants.N(a, b) * self.x[s.index]
                if not np.array_equal(lhs, np.zeros_like(lhs) + expected):
                    problems.append(f"[X_{a.label}, X_{b.label}]")
        return problems


def _probe(x: np.ndarray) -> Tuple[int, int, int]:
    """Entry of smallest nonzero magnitude: (row, col, value)."""
    rows, cols = np.nonzero(x)
    k = int(np.argmin(np.abs(x[rows, cols])))
    return int(rows[k]), int(cols[k]), int(x[rows[k], cols[k]])


def _from_simple(phi: RootSystem, constants: StructureConstants, simple: Sequence[np.ndarray]) -> Dict[int, np.ndarray]:
    x: Dict[int, np.ndarray] = {i: m for i, m in enumerate(simple)}
    for root in phi.positive_roots[phi.rank:]:
        a, b = constants.extraspecial[root.index]
        bracket = _bracket(x[a], x[b])
        n = constants.N(a, b)
        if np.any(bracket % n):
            raise InvalidSpec(f"X_{root.label} is not integral")
        x[root.index] = bracket // n
    for root in phi.positive_roots:
        x[phi.neg(root).index] = x[root.index].T.copy()
    return x


@lru_cache(maxsize=None)
def build_representation(phi: RootSystem, kind: Optional[str] = None) -> Representation:
    constants = chevalley_constants(phi)
    if kind is None:
        if phi.letter == "A":
            kind = "natural"
        elif phi.letter == "C" or phi.label == "B2":
            kind = "symplectic"
        else:
            kind = "adjoint"
    form = None
    if kind == "natural":
        if phi.letter != "A":
            raise InvalidSpec(f"no natural realization for {phi.label}")
        dim = phi.rank + 1
        x = _from_simple(phi, constants, [_unit(dim, i, i + 1) for i in range(phi.rank)])
    elif kind == "symplectic":
        if phi.letter == "C":
            simple = _symplectic_simple(phi.rank)
        elif phi.label == "B2":
            # B2 = C2 with the two simple roots swapped
            simple = _symplectic_simple(2)[::-1]
        else:
            raise InvalidSpec(f"no symplectic realization for {phi.label}")
        dim = 2 * (phi.rank)
        form = symplectic_form(phi.rank)
        x = _from_simple(phi, constants, simple)
    elif kind == "adjoint":
        x = adjoint_matrices(phi, constants.pair_constants)
        dim = len(phi) + phi.rank
    else:
        raise InvalidSpec(f"unknown realization {kind!r}")

    weights = np.stack([
        np.diag(_bracket(x[i], x[phi.neg(i).index])) for i in range(phi.rank)
    ])
    rep = Representation(
        phi=phi,
        constants=constants,
        kind=kind,
        dim=dim,
        x=x,
        templates={k: divided_powers(m) for k, m in x.items()},
        weights=weights,
        form=form,
        units_required=(2, 3) if detect_is_g2(phi) else (),
        probes={k: _probe(m) for k, m in x.items()},
    )
    failures = rep.bracket_failures()
    if failures:
        raise InvalidSpec(f"{phi.label} {kind} realization inconsistent: {', '.join(failures[:3])}")
    logger.info(f"📐 {phi.label} {kind} realization, dim {dim}")
    return rep


class GroupElement:
    """An invertible matrix over the group's ring, carried with its inverse."""

    __slots__ = ("group", "matrix", "inverse")

    def __init__(self, group: "ChevalleyGroup", matrix: np.ndarray, inverse: np.ndarray):
        self.group = group
        self.matrix = matrix
        self.inverse = inverse

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        ops = self.group.ops
        return GroupElement(self.group, ops.matmul(self.matrix, other.matrix), ops.matmul(other.inverse, self.inverse))

    def inv(self) -> "GroupElement":
        return GroupElement(self.group, self.inverse, self.matrix)

    def conj(self, x: "GroupElement") -> "GroupElement":
        """self · x · self⁻¹"""
        return self * x * self.inv()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.group.ops.key(self.matrix))

    def __repr__(self) -> str:
        return f"GroupElement({self.format()})"

    def is_identity(self) -> bool:
        return self.group.ops.is_identity(self.matrix)

    def format(self) -> list:
        return self.group.ops.format(self.matrix)


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g⁻¹ h⁻¹"""
    return g * h * g.inv() * h.inv()


class ChevalleyGroup:
    """G(R)⁺ inside GL_d(R) for one representation and one ring."""

    def __init__(self, rep: Representation, ring: FiniteRing):
        if rep.units_required:
            nice = is_nice_pair(rep.phi, ring)
            if not nice.ok:
                raise NicePairViolation(nice.reason)
        self.rep = rep
        self.phi = rep.phi
        self.ring = ring
        self.ops = MatrixOps(ring, rep.dim)
        self.templates = {
            k: np.stack([self.ops.from_integers(m) for m in terms]) for k, terms in rep.templates.items()
        }
        self._stacks: Dict[int, np.ndarray] = {}
        self.identity = GroupElement(self, self.ops.identity, self.ops.identity)

    def __repr__(self) -> str:
        return f"<ChevalleyGroup {self.phi.label}({self.ring.name}) {self.rep.kind}>"

    # ── root elements ────────────────────────────────────
    def root_stack(self, alpha: RootLike) -> np.ndarray:
        """e_α(t) for every t, shape (|R|, d, d)."""
        index = self.phi.root(alpha).index
        if index not in self._stacks:
            ring = self.ring
            terms = self.templates[index]
            everything = np.arange(ring.size)
            stack = np.broadcast_to(terms[0], (ring.size,) + terms[0].shape).copy()
            for k in range(1, len(terms)):
                coefficient = ring.pow_array(everything, k)
                stack = ring.add_table[stack, ring.mul_table[coefficient[:, None, None], terms[k][None]]]
            self._stacks[index] = stack
        return self._stacks[index]

    def e(self, alpha: RootLike, t: int) -> GroupElement:
        stack = self.root_stack(alpha)
        return GroupElement(self, stack[t], stack[self.ring.neg(t)])

    def w(self, alpha: RootLike, u: int) -> GroupElement:
        """e_α(u) e_{-α}(-u⁻¹) e_α(u)"""
        if not self.ring.is_unit(u):
            raise NotAUnit(self.ring.format(u), self.ring.name)
        minus = self.phi.neg(alpha)
        inverse = self.ring.inverse(u)
        return self.e(alpha, u) * self.e(minus, self.ring.neg(inverse)) * self.e(alpha, u)

    def h(self, alpha: RootLike, u: int) -> GroupElement:
        """w_α(u) w_α(-1)"""
        return self.w(alpha, u) * self.w(alpha, self.ring.neg(self.ring.one))

    def diagonal(self, entries: Sequence[int]) -> GroupElement:
        d = self.rep.dim
        m = np.zeros((d, d), dtype=np.int32)
        inv = np.zeros((d, d), dtype=np.int32)
        for b, value in enumerate(entries):
            m[b, b] = value
            inv[b, b] = self.ring.inverse(value)
        return GroupElement(self, m, inv)

    def h_expected(self, alpha: RootLike, u: int) -> GroupElement:
        """diag(u^<λ_b, α∨>)"""
        return self.diagonal([self.ring.pow(u, int(k)) for k in self.rep.coroot_weights(alpha)])

    def torus(self, values: Sequence[int]) -> GroupElement:
        """∏ h_{α_i}(t_i) read through the weights."""
        entries = []
        for b in range(self.rep.dim):
            value = self.ring.one
            for i, t in enumerate(values):
                value = self.ring.mul(value, self.ring.pow(t, int(self.rep.weights[i, b])))
            entries.append(value)
        return self.diagonal(entries)

    def element(self, matrix: np.ndarray, inverse: np.ndarray) -> GroupElement:
        return GroupElement(self, matrix, inverse)

    def preserves_form(self, g: GroupElement) -> bool:
        form = self.rep.form
        if form is None:
            return True
        omega = self.ops.from_integers(form)
        return bool(np.array_equal(self.ops.matmul(self.ops.matmul(g.matrix.T, omega), g.matrix), omega))


@lru_cache(maxsize=32)
def chevalley_group(phi: RootSystem, ring: FiniteRing, kind: Optional[str] = None) -> ChevalleyGroup:
    return ChevalleyGroup(build_representation(phi, kind), ring)


# ── relation checks ──────────────────────────────────────

def _mismatch(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    return np.any(lhs != rhs, axis=(-2, -1))


def check_additivity(group: ChevalleyGroup) -> CheckResult:
    """(R1) e_α(s) e_α(t) = e_α(s+t), every root, every pair."""
    ring, ops, phi = group.ring, group.ops, group.phi
    failures, total, examples = 0, 0, []
    for alpha in phi.roots:
        stack = group.root_stack(alpha)
        lhs = ops.matmul(stack[:, None], stack[None, :])
        rhs = stack[ring.add_table]
        bad = np.argwhere(_mismatch(lhs, rhs))
        failures += len(bad)
        total += ring.size ** 2
        for s, t in bad[:2]:
            examples.append({"root": alpha.label, "s": ring.format(s), "t": ring.format(t),
                             "lhs": ops.format(lhs[s, t]), "rhs": ops.format(rhs[s, t])})
    return CheckResult(name="R1 additivity", passed=failures == 0,
                       detail=f"{total - failures}/{total} instances hold", counterexamples=examples[:5])


def commutator_rhs(group: ChevalleyGroup, alpha: RootLike, beta: RootLike) -> np.ndarray:
    """∏ e_γ(C_ij s^i t^j) for every (s, t), shape (|R|, |R|, d, d)."""
    ring, ops = group.ring, group.ops
    everything = np.arange(ring.size)
    rhs = np.broadcast_to(ops.identity, (ring.size, ring.size) + ops.identity.shape)
    for i, j, gamma, c in group.rep.constants.commutator(alpha, beta):
        si = ring.pow_array(everything, i)
        tj = ring.pow_array(everything, j)
        coefficient = ring.mul_table[ring.from_int(c), ring.mul_table[si[:, None], tj[None, :]]]
        rhs = ops.matmul(rhs, group.root_stack(gamma)[coefficient])
    return rhs


def commutator_lhs(group: ChevalleyGroup, alpha: RootLike, beta: RootLike) -> np.ndarray:
    ring, ops = group.ring, group.ops
    a, b = group.root_stack(alpha), group.root_stack(beta)
    ainv, binv = a[ring.neg_table], b[ring.neg_table]
    return ops.matmul(ops.matmul(ops.matmul(a[:, None], b[None, :]), ainv[:, None]), binv[None, :])


def check_commutator_formula(group: ChevalleyGroup) -> CheckResult:
    """(R2) for every ordered non-opposite pair and every (s, t)."""
    ring, ops, phi = group.ring, group.ops, group.phi
    failures, total, examples = 0, 0, []
    for alpha in phi.roots:
        for beta in phi.roots:
            if phi.neg(alpha).index == beta.index:
                continue
            lhs = commutator_lhs(group, alpha, beta)
            rhs = commutator_rhs(group, alpha, beta)
            bad = np.argwhere(_mismatch(lhs, rhs))
            failures += len(bad)
            total += ring.size ** 2
            for s, t in bad[:1]:
                examples.append({"alpha": alpha.label, "beta": beta.label,
                                 "s": ring.format(s), "t": ring.format(t),
                                 "lhs": ops.format(lhs[s, t]), "rhs": ops.format(rhs[s, t])})
    return CheckResult(name="R2 commutator formula", passed=failures == 0,
                       detail=f"{total - failures}/{total} instances hold", counterexamples=examples[:5])


def verify_steinberg_relations(group: ChevalleyGroup) -> List[CheckResult]:
    checks = [check_additivity(group), check_commutator_formula(group)]
    for check in checks:
        logger.info(f"{'✅' if check.passed else '❌'} {group.phi.label}({group.ring.name}) {check.name}: {check.detail}")
    return checks


def check_h_multiplicative(group: ChevalleyGroup) -> CheckResult:
    """h_α(u) h_α(v) = h_α(uv) and h_α(u) = diag(u^<λ, α∨>) for every root and unit pair."""
    ring, phi = group.ring, group.phi
    units = [u for u in ring.elements() if ring.is_unit(u)]
    failures, total, examples = 0, 0, []
    for alpha in phi.roots:
        h = {u: group.h(alpha, u) for u in units}
        for u in units:
            total += 1
            if h[u] != group.h_expected(alpha, u):
                failures += 1
                examples.append({"root": alpha.label, "u": ring.format(u), "kind": "weights"})
            for v in units:
                total += 1
                if h[u] * h[v] != h[ring.mul(u, v)]:
                    failures += 1
                    examples.append({"root": alpha.label, "u": ring.format(u), "v": ring.format(v)})
    return CheckResult(name="h multiplicativity", passed=failures == 0,
                       detail=f"{total - failures}/{total} instances hold", counterexamples=examples[:5])


def check_invariant_form(group: ChevalleyGroup) -> CheckResult:
    """Every e_α(t) preserves the representation's bilinear form (or has determinant 1 in type A)."""
    ring, phi, ops = group.ring, group.phi, group.ops
    failures, examples = 0, []
    for alpha in phi.roots:
        stack = group.root_stack(alpha)
        if group.rep.form is not None:
            omega = ops.from_integers(group.rep.form)
            lhs = ops.matmul(ops.matmul(np.swapaxes(stack, -1, -2), omega), stack)
            bad = np.nonzero(_mismatch(lhs, omega))[0]
        elif ops.dim == 3:
            bad = np.nonzero(ops.det3(stack) != ring.one)[0]
        else:
            bad = np.array([], dtype=np.int64)
        failures += len(bad)
        examples += [{"root": alpha.label, "t": ring.format(t)} for t in bad[:1]]
    what = "form preserved" if group.rep.form is not None else "determinant one"
    return CheckResult(name=f"root elements: {what}", passed=failures == 0,
                       detail=f"{failures} failures over {len(phi) * ring.size} root elements",
                       counterexamples=examples)
