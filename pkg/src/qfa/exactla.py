"""Dense exact linear algebra over the scalar types.

Matrices are plain lists of rows of scalars; everything is computed by
Gauss-Jordan elimination with pivot normalization (scalars are exact, so
no magnitude pivoting; the first usable row wins, which keeps all outputs
deterministic).  RREF is unique, so downstream fingerprints and frozen
test vectors are stable.

The :class:`Subspace` is the single canonicalization device used
everywhere: a row space held in reduced row echelon form, supporting
membership, incremental extension, and coordinates on the complement of
the pivot set (the "non-pivot basis" of the quotient).
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .scalars import Scalar


class SingularMatrixError(ValueError):
    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness  # a nonzero kernel vector, when available


def _first_nonzero(row: Sequence[Scalar]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def rref(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form (copy) and its pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[col]
        if inv != 1:
            prow[:] = [x / inv for x in prow]
        support = [j for j in range(col, ncols) if prow[j]]
        for i, row in enumerate(rows):
            if i != r and row[col]:
                f = row[col]
                for j in support:
                    row[j] = row[j] - f * prow[j]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    out = [rows[i] for i in range(r)]
    return out, pivots


def rank(rows: list[list[Scalar]]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: list[list[Scalar]], ncols: int, field) -> list[list[Scalar]]:
    """Basis of the right null space {v : A v = 0}, one vector per free column."""
    R, pivots = rref(rows)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for j in free:
        v = [field.zero] * ncols
        v[j] = field.one
        for r, p in enumerate(pivots):
            if R[r][j]:
                v[p] = -R[r][j]
        basis.append(v)
    if __debug__:
        assert len(pivots) + len(basis) == ncols  # rank-nullity
    return basis


def mat_vec(rows: Sequence[Sequence[Scalar]], v: Sequence[Scalar], field) -> list[Scalar]:
    out = []
    for row in rows:
        acc = field.zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], field) -> list[list[Scalar]]:
    bt = list(zip(*b))
    return [mat_vec(bt, row, field) for row in a]


def identity_matrix(n: int, field) -> list[list[Scalar]]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def invert(rows: Sequence[Sequence[Scalar]], field) -> list[list[Scalar]]:
    """Inverse of a square matrix; raises SingularMatrixError with a kernel
    vector as witness when there is none."""
    n = len(rows)
    aug = [list(r) + ident for r, ident in zip(rows, identity_matrix(n, field))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        ker = kernel_basis([list(r) for r in rows], n, field)
        raise SingularMatrixError("matrix is singular", witness=ker[0] if ker else None)
    return [r[n:] for r in R[:n]]


def solve(rows: Sequence[Sequence[Scalar]], b: Sequence[Scalar], field) -> Optional[list[Scalar]]:
    """One solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [bb] for r, bb in zip(rows, b)]
    R, pivots = rref(aug)
    ncols = len(rows[0]) if rows else 0
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, p in enumerate(pivots):
        x[p] = R[r][-1]
    return x


class Subspace:
    """A subspace of k^n held as an RREF row basis; supports incremental
    extension and quotient coordinates on the non-pivot complement."""

    def __init__(self, ambient_dim: int, field):
        self.ambient = ambient_dim
        self.field = field
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[Scalar]], ambient_dim: int, field) -> "Subspace":
        S = cls(ambient_dim, field)
        for v in vectors:
            S.extend_with(v)
        return S

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        """v minus its projection onto the row space along pivot coordinates."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return v

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def extend_with(self, v: Sequence[Scalar]) -> bool:
        """Insert v if independent; keeps the basis fully reduced. Returns
        True when the dimension grew."""
        w = self.reduce(v)
        p = _first_nonzero(w)
        if p < 0:
            return False
        inv = w[p]
        if inv != 1:
            w = [x / inv for x in w]
        for row in self.rows:
            c = row[p]
            if c:
                for j in range(p, self.ambient):
                    if w[j]:
                        row[j] = row[j] - c * w[j]
        at = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, w)
        self.pivots.insert(at, p)
        return True

    def non_pivots(self) -> list[int]:
        pivset = set(self.pivots)
        return [j for j in range(self.ambient) if j not in pivset]

    def quotient_coords(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Coordinates of v + S in k^n / S on the non-pivot basis."""
        w = self.reduce(v)
        return [w[j] for j in self.non_pivots()]

    def basis_rows(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]
