"""Exact dense linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries normalised to [0, p).  Pivot
choice is leftmost column, topmost row, so reduced forms, kernel bases and
solutions are bit-reproducible across runs.  Everything downstream (hom
spaces, ranks, quotients, resolutions) bottoms out here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "FieldSpec",
    "PrimeMatrix",
    "is_prime",
    "rref",
    "kernel_basis",
    "solve",
    "rank",
    "rref_a",
    "kernel_a",
    "solve_a",
    "solve_many_a",
    "rank_a",
    "quotient_by_rowspace",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p that a whole computation runs over."""

    characteristic: int

    def __post_init__(self) -> None:
        if not is_prime(self.characteristic):
            raise ValueError(
                f"field characteristic must be prime, got {self.characteristic}"
            )


def _as_matrix(a, p: int) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m % p


def rref_a(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.

    Returns (R, pivots) with pivot columns strictly increasing.  Does not
    modify the input.
    """
    m = _as_matrix(a, p).copy()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hit = -1
        for i in range(r, nrows):
            if m[i, c]:
                hit = i
                break
        if hit < 0:
            continue
        if hit != r:
            m[[r, hit]] = m[[hit, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = m[r] * inv % p
        for i in range(nrows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_a(a, p: int) -> int:
    return len(rref_a(a, p)[1])


def kernel_a(a, p: int) -> np.ndarray:
    """Basis of the right null space of `a` mod p, as matrix columns.

    Column count always equals cols - rank.  The basis is the canonical one
    read off the rref: free coordinates carry identity blocks.
    """
    m = _as_matrix(a, p)
    red, pivots = rref_a(m, p)
    ncols = m.shape[1]
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-red[i, f]) % p
    return basis


def solve_a(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b mod p, or None if inconsistent."""
    m = _as_matrix(a, p)
    v = np.asarray(b, dtype=np.int64) % p
    if v.ndim != 1:
        raise ValueError("right-hand side must be a vector")
    if v.shape[0] != m.shape[0]:
        raise ValueError(
            f"right-hand side length {v.shape[0]} does not match {m.shape[0]} rows"
        )
    sol = solve_many_a(m, v[:, None], p)
    return None if sol is None else sol[:, 0]


def solve_many_a(a, b, p: int) -> np.ndarray | None:
    """Solve a @ X = B columnwise; None if any column is inconsistent."""
    m = _as_matrix(a, p)
    rhs = _as_matrix(b, p)
    if rhs.shape[0] != m.shape[0]:
        raise ValueError(
            f"right-hand side has {rhs.shape[0]} rows, expected {m.shape[0]}"
        )
    n = m.shape[1]
    red, pivots = rref_a(np.concatenate([m, rhs], axis=1), p)
    if pivots and pivots[-1] >= n:
        return None
    x = np.zeros((n, rhs.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = red[i, n:]
    return x


def quotient_by_rowspace(rows: np.ndarray, ambient: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Projection and section for (F_p^ambient) / rowspace(rows).

    Returns (proj, sect) with proj of shape (q, ambient), sect of shape
    (ambient, q) and proj @ sect = I.  Quotient coordinates are the non-pivot
    ambient coordinates, in increasing order.
    """
    if ambient == 0:
        z = np.zeros((0, 0), dtype=np.int64)
        return z, z.copy()
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, ambient) % p
    red, pivots = rref_a(rows, p)
    pivset = set(pivots)
    free = [c for c in range(ambient) if c not in pivset]
    proj = np.zeros((len(free), ambient), dtype=np.int64)
    sect = np.zeros((ambient, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        proj[k, c] = 1
        sect[c, k] = 1
    for i, pc in enumerate(pivots):
        for k, c in enumerate(free):
            proj[k, pc] = (-red[i, c]) % p
    return proj, sect


@dataclass
class PrimeMatrix:
    """Dense matrix over F_p, entries row-major in [0, p)."""

    p: int
    data: np.ndarray = field(default_factory=lambda: np.zeros((0, 0), dtype=np.int64))

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"matrix characteristic must be prime, got {self.p}")
        self.data = _as_matrix(self.data, self.p)

    @classmethod
    def from_rows(cls, p: int, rows) -> "PrimeMatrix":
        a = np.asarray(rows, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        return cls(p, a)

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "PrimeMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, n: int) -> "PrimeMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimeMatrix)
            and self.p == other.p
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )


def rref(m: PrimeMatrix) -> tuple[PrimeMatrix, list[int]]:
    red, pivots = rref_a(m.data, m.p)
    return PrimeMatrix(m.p, red), pivots


def rank(m: PrimeMatrix) -> int:
    return rank_a(m.data, m.p)


def kernel_basis(m: PrimeMatrix) -> PrimeMatrix:
    return PrimeMatrix(m.p, kernel_a(m.data, m.p))


def solve(m: PrimeMatrix, b) -> np.ndarray | None:
    return solve_a(m.data, b, m.p)
