"""Exact linear algebra over a prime field F_p.

Matrices are int64 numpy arrays with entries reduced into [0, p).  All
eliminations use Gauss-Jordan with first-nonzero pivoting, so every basis
this module hands out is deterministic for a given input.
"""
from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 32003

# products must stay below 2**63 in int64 intermediates, with headroom for
# accumulation inside matmul
_MAX_PRIME = 1 << 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """F_p arithmetic on numpy int64 matrices."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"p = {p!r} is not prime")
        if p >= _MAX_PRIME:
            raise ValueError(f"p = {p} too large (need p < 2**20 for exact int64 products)")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    # -- construction -----------------------------------------------------

    def arr(self, data) -> np.ndarray:
        """Coerce to an int64 array with entries reduced mod p."""
        a = np.asarray(data, dtype=np.int64)
        return np.mod(a, self.p)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, a, b) -> np.ndarray:
        return np.mod(a @ b, self.p)

    def neg(self, a) -> np.ndarray:
        return np.mod(-np.asarray(a, dtype=np.int64), self.p)

    def inv_scalar(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)

    # -- elimination --------------------------------------------------------

    def rref(self, m) -> tuple[np.ndarray, tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns.

        Pivot choice: scan columns left to right, take the first row with a
        nonzero entry at or below the working row.
        """
        a = self.arr(m).copy()
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i]] = a[[i, r]]
            inv = self.inv_scalar(a[r, c])
            a[r] = (a[r] * inv) % self.p
            col = a[:, c].copy()
            col[r] = 0
            elim = np.nonzero(col)[0]
            if elim.size:
                a[elim] = (a[elim] - np.outer(col[elim], a[r])) % self.p
            pivots.append(c)
            r += 1
        return a, tuple(pivots)

    def rank(self, m) -> int:
        a = np.asarray(m)
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def kernel_basis(self, m) -> np.ndarray:
        """Columns form the canonical basis of {v : m v = 0}.

        Free variables are set to 1 one at a time, ordered by column index.
        Shape (cols, nullity).
        """
        a = self.arr(m)
        rows, cols = a.shape
        red, pivots = self.rref(a)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = np.zeros((cols, len(free)), dtype=np.int64)
        for k, fc in enumerate(free):
            basis[fc, k] = 1
            for i, pc in enumerate(pivots):
                basis[pc, k] = (-red[i, fc]) % self.p
        return basis

    def solve(self, a, b):
        """A particular solution of a x = b, or None if inconsistent.

        b may be a vector or a matrix of stacked right-hand sides; free
        variables are set to 0.
        """
        a = self.arr(a)
        b = self.arr(b)
        rows, cols = a.shape
        vector_rhs = b.ndim == 1
        rhs = b.reshape(rows, -1) if vector_rhs else b
        if rhs.shape[0] != rows:
            raise ValueError(f"rhs has {rhs.shape[0]} rows, matrix has {rows}")
        red, pivots = self.rref(np.hstack([a, rhs]))
        if any(pc >= cols for pc in pivots):
            return None
        x = np.zeros((cols, rhs.shape[1]), dtype=np.int64)
        for i, pc in enumerate(pivots):
            x[pc] = red[i, cols:]
        return x[:, 0] if vector_rhs else x

    def pivot_columns(self, m) -> tuple[int, ...]:
        return self.rref(m)[1]

    def column_space_basis(self, m) -> np.ndarray:
        """The pivot columns of m, in order (a deterministic image basis)."""
        a = self.arr(m)
        piv = self.pivot_columns(a)
        return a[:, list(piv)]

    def image_complement_dim(self, sub, ambient_dim: int) -> int:
        """Codimension of the column span of `sub` inside F_p^ambient_dim."""
        a = self.arr(sub)
        if a.shape[0] != ambient_dim:
            raise ValueError(f"subspace matrix has {a.shape[0]} rows, ambient dim {ambient_dim}")
        return ambient_dim - self.rank(a)
