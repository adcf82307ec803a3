"""
Todd–Coxeter coset enumeration, HLT strategy with lookahead.

Words are tuples of nonzero ints: +(g+1) is generator g, -(g+1) its inverse.
Internally every letter becomes a table column, 2g for the generator and
2g+1 for the inverse, so the inverse column of c is c ^ 1.
Undefined entries are -1.
"""
from __future__ import annotations

import logging
import time
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from chevlab.algebra.errors import BudgetExceeded
from chevlab.config import settings

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def letter_column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def word_columns(word: Sequence[int]) -> Tuple[int, ...]:
    return tuple(letter_column(x) for x in word)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Iterable[int]) -> Word:
    stack: List[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class _TableFull(Exception):
    pass


class CosetTable:
    """Right cosets of the subgroup generated by `subgroup` in <generators | relators>."""

    def __init__(self, generator_count: int, relators: Sequence[Word], subgroup: Sequence[Word] = (),
                 budget: Optional[int] = None):
        self.generator_count = generator_count
        self.columns = 2 * generator_count
        # short relators first: they close rows sooner
        self.relators = sorted({word_columns(w) for w in relators if w}, key=lambda w: (len(w), w))
        self.subgroup = [word_columns(w) for w in subgroup if w]
        self.budget = budget or settings.budget_cosets
        self.table: List[List[int]] = [[-1] * self.columns]
        self.p: List[int] = [0]
        self.closed = False
        self.defined = 1
        self.lookaheads = 0
        self._array: Optional[np.ndarray] = None

    def __repr__(self) -> str:
        state = "closed" if self.closed else "incomplete"
        return f"<CosetTable {self.index} cosets, {self.generator_count} generators, {state}>"

    @property
    def omega(self) -> List[int]:
        """Live cosets."""
        return [c for c in range(len(self.p)) if self.p[c] == c]

    @property
    def index(self) -> int:
        return len(self.omega)

    def is_complete(self) -> bool:
        return all(-1 not in self.table[c] for c in self.omega)

    # ── definitions and scans ────────────────────────────
    def define(self, alpha: int, x: int) -> None:
        if len(self.table) >= self.budget:
            raise _TableFull()
        beta = len(self.table)
        self.table.append([-1] * self.columns)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][x ^ 1] = alpha
        self.defined += 1

    def scan(self, alpha: int, word: Sequence[int], fill: bool = False) -> None:
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                # deduction
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def scan_and_fill(self, alpha: int, word: Sequence[int]) -> None:
        self.scan(alpha, word, fill=True)

    # ── coincidences ─────────────────────────────────────
    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, k: int, lam: int, queue: deque) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            queue.append(v)

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: deque = deque()
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            for x in range(self.columns):
                delta = table[gamma][x]
                if delta < 0:
                    continue
                table[delta][x ^ 1] = -1
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][x] >= 0:
                    self.merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self.merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def look_ahead(self) -> None:
        """Scan every live coset under every relator without new definitions."""
        self.lookaheads += 1
        for beta in range(len(self.p)):
            if self.p[beta] != beta:
                continue
            for w in self.relators:
                self.scan(beta, w)
                if self.p[beta] != beta:
                    break

    def compress(self) -> None:
        """Drop dead cosets and renumber live ones in order of first appearance."""
        live = self.omega
        order = [0]
        position = {0: 0}
        k = 0
        while k < len(order):
            for x in range(self.columns):
                beta = self.table[order[k]][x]
                if beta >= 0 and beta not in position:
                    position[beta] = len(order)
                    order.append(beta)
            k += 1
        for c in live:
            if c not in position:
                position[c] = len(order)
                order.append(c)
        self.table = [[position[b] if b >= 0 else -1 for b in self.table[c]] for c in order]
        self.p = list(range(len(order)))

    # ── driver ───────────────────────────────────────────
    def enumerate(self) -> "CosetTable":
        started = time.perf_counter()
        for w in self.subgroup:
            self._guarded(lambda: self.scan_and_fill(0, w))
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                try:
                    for w in self.relators:
                        self.scan_and_fill(alpha, w)
                        if self.p[alpha] < alpha:
                            break
                    if self.p[alpha] == alpha:
                        for x in range(self.columns):
                            if self.table[alpha][x] < 0:
                                self.define(alpha, x)
                except _TableFull:
                    alpha = self._recover()
                    continue
            alpha += 1
        self.compress()
        self.closed = self.is_complete()
        logger.info(f"🔎 coset enumeration: index {self.index:,} after {self.defined:,} definitions, "
                    f"{self.lookaheads} lookahead(s), {time.perf_counter() - started:.2f}s")
        return self

    def _guarded(self, step) -> None:
        while True:
            try:
                step()
                return
            except _TableFull:
                self._recover()

    def _recover(self) -> int:
        rows = len(self.table)
        self.look_ahead()
        self.compress()
        if len(self.table) >= rows or len(self.table) >= self.budget:
            raise BudgetExceeded("coset table rows", self.budget)
        # renumbering reorders cosets; rescanning from the top is cheap for closed rows
        return 0

    # ── queries on a closed table ────────────────────────
    def array(self) -> np.ndarray:
        if self.closed and self._array is not None:
            return self._array
        result = np.array([self.table[c] for c in self.omega], dtype=np.int64)
        if self.closed:
            self._array = result
        return result

    def permutation(self, word: Sequence[int]) -> np.ndarray:
        """perm[c] = c · word; perm(ab) = perm(b)[perm(a)]."""
        table = self.array()
        perm = np.arange(len(table))
        for x in word_columns(word):
            perm = table[perm, x]
        return perm

    def relators_hold(self) -> bool:
        table = self.array()
        identity = np.arange(len(table))
        for w in self.relators:
            perm = identity
            for x in w:
                perm = table[perm, x]
            if not np.array_equal(perm, identity):
                return False
        return all(self._trace(0, w) == 0 for w in self.subgroup)

    def _trace(self, alpha: int, columns: Sequence[int]) -> int:
        for x in columns:
            alpha = self.table[alpha][x]
        return alpha

    def dump(self) -> str:
        """Tab-separated rows, one per coset, columns g1 g1^-1 g2 ..."""
        header = "\t".join(f"g{g + 1}{suffix}" for g in range(self.generator_count) for suffix in ("", "^-1"))
        rows = ["\t".join(str(v) for v in row) for row in self.array().tolist()]
        return "\n".join([f"coset\t{header}"] + [f"{c}\t{row}" for c, row in enumerate(rows)]) + "\n"


def todd_coxeter(generator_count: int, relators: Sequence[Word], subgroup: Sequence[Word] = (),
                 budget: Optional[int] = None) -> CosetTable:
    return CosetTable(generator_count, relators, subgroup, budget).enumerate()


def generated_order(perms: Sequence[np.ndarray], budget: Optional[int] = None) -> int:
    """Order of the group generated by permutations of the same set."""
    if not perms:
        return 1
    n = len(perms[0])
    identity = np.arange(n)
    seen = {identity.tobytes()}
    frontier = [identity]
    budget = budget or settings.budget_bfs
    while frontier:
        nxt = []
        for g in frontier:
            for s in perms:
                h = s[g]
                key = h.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(h)
        if len(seen) > budget:
            raise BudgetExceeded("permutation group closure", budget)
        frontier = nxt
    return len(seen)
