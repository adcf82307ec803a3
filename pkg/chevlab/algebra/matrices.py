"""
Square matrices over a FiniteRing, stored as int32 arrays of element indices.

All operations accept stacks of shape (..., d, d) and broadcast like numpy
matmul. Over Z/n the index is the residue, so products go through integer
matmul and a single reduction; other rings fold table lookups.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from chevlab.algebra.errors import InvalidSpec
from chevlab.algebra.finring import FiniteRing


class MatrixOps:
    def __init__(self, ring: FiniteRing, dim: int):
        self.ring = ring
        self.dim = dim
        self.identity = np.zeros((dim, dim), dtype=np.int32)
        self.identity[np.arange(dim), np.arange(dim)] = ring.one

    def __repr__(self) -> str:
        return f"<MatrixOps {self.dim}x{self.dim} over {self.ring.name}>"

    def zeros(self) -> np.ndarray:
        return np.zeros((self.dim, self.dim), dtype=np.int32)

    def from_integers(self, m: np.ndarray) -> np.ndarray:
        """Integer matrix mapped into the ring entrywise."""
        return self.ring.from_int_array(np.asarray(m, dtype=np.int64)).astype(np.int32)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.ring.add_table[a, b]

    def neg(self, a: np.ndarray) -> np.ndarray:
        return self.ring.neg_table[a]

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.ring.add_table[a, self.ring.neg_table[b]]

    def scale(self, t: int, a: np.ndarray) -> np.ndarray:
        return self.ring.mul_table[t, a]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n = self.ring.modulus
        if n is not None:
            return ((a.astype(np.int64) @ b.astype(np.int64)) % n).astype(np.int32)
        products = self.ring.mul_table[a[..., :, :, None], b[..., None, :, :]]
        result = products[..., :, 0, :]
        for k in range(1, a.shape[-1]):
            result = self.ring.add_table[result, products[..., :, k, :]]
        return result

    def product(self, matrices: Sequence[np.ndarray]) -> np.ndarray:
        result = self.identity
        for m in matrices:
            result = self.matmul(result, m)
        return result

    def is_identity(self, a: np.ndarray) -> bool:
        return bool(np.array_equal(a, self.identity))

    def det3(self, a: np.ndarray) -> np.ndarray:
        """Determinant of a stack of 3x3 matrices."""
        M, A = self.ring.mul_table, self.ring.add_table

        def minor(r1, c1, r2, c2):
            return self.sub(M[a[..., r1, c1], a[..., r2, c2]], M[a[..., r1, c2], a[..., r2, c1]])

        t0 = M[a[..., 0, 0], minor(1, 1, 2, 2)]
        t1 = M[a[..., 0, 1], minor(1, 0, 2, 2)]
        t2 = M[a[..., 0, 2], minor(1, 0, 2, 1)]
        return A[self.sub(t0, t1), t2]

    def format(self, a: np.ndarray) -> list:
        return [[self.ring.format(int(x)) for x in row] for row in a]

    def parse(self, rows: Sequence[Sequence]) -> np.ndarray:
        m = np.array([[self.ring.parse(x) for x in row] for row in rows], dtype=np.int32)
        if m.shape != (self.dim, self.dim):
            raise InvalidSpec(f"expected a {self.dim}x{self.dim} matrix, got shape {m.shape}")
        return m

    def key(self, a: np.ndarray) -> bytes:
        return np.ascontiguousarray(a, dtype=np.uint16).tobytes()

    def keys(self, stack: np.ndarray) -> list:
        flat = np.ascontiguousarray(stack.reshape(len(stack), -1), dtype=np.uint16)
        return [row.tobytes() for row in flat]
