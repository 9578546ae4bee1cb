"""Finite braidings on a based vector space and their basic checks.

A braiding is stored sparsely by columns: ``cols[(i, j)]`` maps output
pairs (k, l) to the coefficient of x_k (x) x_l in c(x_i (x) x_j).  All
indices are 0-based internally; 1-based conversion happens at the I/O
boundary.

Besides the hexagon/braid-equation and rigidity checks this module hosts
the symmetric-group plumbing: reduced words via descent elimination and
the braid lift of a permutation (well-defined by Matsumoto's property,
which the test suite exercises by comparing different reduction
strategies).
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .scalars import Scalar

Pair = tuple[int, int]
WordV = tuple[int, ...]  # basis word in the underlying space V


class BraidingTensor:
    def __init__(self, n: int, field, cols: dict[Pair, dict[Pair, Scalar]]):
        self.n = n
        self.field = field
        # drop stored zeros so equality and iteration are canonical
        self.cols = {
            ij: {kl: c for kl, c in col.items() if c}
            for ij, col in cols.items()
        }
        self.cols = {ij: col for ij, col in self.cols.items() if col}

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_entries(cls, n: int, field, entries: Iterable[tuple[int, int, int, int, Scalar]]):
        cols: dict[Pair, dict[Pair, Scalar]] = {}
        for i, j, k, l, c in entries:
            col = cols.setdefault((i, j), {})
            col[(k, l)] = col.get((k, l), field.zero) + c
        return cls(n, field, cols)

    @classmethod
    def flip(cls, n: int, field):
        one = field.one
        return cls(n, field, {(i, j): {(j, i): one} for i in range(n) for j in range(n)})

    @classmethod
    def diagonal(cls, n: int, field, q: list[list[Scalar]]):
        """c(x_i (x) x_j) = q[i][j] x_j (x) x_i."""
        return cls(n, field, {(i, j): {(j, i): q[i][j]} for i in range(n) for j in range(n)})

    @classmethod
    def from_set_map(cls, n: int, field, image: Callable[[int, int], Pair],
                     coeff: Optional[Callable[[int, int], Scalar]] = None):
        """c(x_i (x) x_j) = q(i,j) x_u (x) x_v with (u, v) = image(i, j)."""
        cols = {}
        for i in range(n):
            for j in range(n):
                q = coeff(i, j) if coeff is not None else field.one
                cols[(i, j)] = {image(i, j): q}
        return cls(n, field, cols)

    def scaled(self, a: Scalar) -> "BraidingTensor":
        return BraidingTensor(
            self.n, self.field,
            {ij: {kl: a * c for kl, c in col.items()} for ij, col in self.cols.items()},
        )

    # -- access -----------------------------------------------------------

    def entry(self, i: int, j: int, k: int, l: int) -> Scalar:
        return self.cols.get((i, j), {}).get((k, l), self.field.zero)

    def column(self, i: int, j: int) -> dict[Pair, Scalar]:
        return self.cols.get((i, j), {})

    def __eq__(self, other):
        if not isinstance(other, BraidingTensor):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.cols) | set(other.cols)
        for ij in keys:
            a, b = self.column(*ij), other.column(*ij)
            for kl in set(a) | set(b):
                if a.get(kl, 0) != b.get(kl, 0):
                    return False
        return True

    def apply_at(self, w: WordV, p: int) -> dict[WordV, Scalar]:
        """c acting on tensor slots p, p+1 of the basis word w."""
        out = {}
        for (k, l), coeff in self.column(w[p], w[p + 1]).items():
            out[w[:p] + (k, l) + w[p + 2:]] = coeff
        return out

    def apply_chain(self, w: WordV, positions: Iterable[int]) -> dict[WordV, Scalar]:
        """Compose c at the given positions, rightmost entry applied first."""
        cur: dict[WordV, Scalar] = {w: self.field.one}
        for p in reversed(list(positions)):
            nxt: dict[WordV, Scalar] = {}
            for u, cu in cur.items():
                for v, cv in self.apply_at(u, p).items():
                    acc = nxt.get(v)
                    acc = cu * cv if acc is None else acc + cu * cv
                    if acc:
                        nxt[v] = acc
                    elif v in nxt:
                        del nxt[v]
            cur = nxt
        return cur

    # -- checks -----------------------------------------------------------

    def check_braid_equation(self):
        """(ok, witness): witness = (triple, lhs, rhs) at the first mismatch."""
        n = self.n
        for i in range(n):
            for j in range(n):
                for m in range(n):
                    w = (i, j, m)
                    lhs = self.apply_chain(w, (0, 1, 0))
                    rhs = self.apply_chain(w, (1, 0, 1))
                    if not _dict_eq(lhs, rhs):
                        return False, (w, lhs, rhs)
        return True, None

    def dual_pairing_matrix(self) -> list[list[Scalar]]:
        """The n^2 x n^2 matrix whose invertibility is rigidity.

        Row (b, i), column (j, k): the coefficient c_{ki}^{jb}, i.e. the
        matrix of the induced map on V* (x) V in the coordinate bases.
        """
        n, z = self.n, self.field.zero
        M = [[z] * (n * n) for _ in range(n * n)]
        for (k, i), col in self.cols.items():
            for (j, b), c in col.items():
                M[b * n + i][j * n + k] = c
        return M

    def check_rigid(self):
        """(ok, witness): witness is a kernel vector of the dual pairing."""
        from . import exactla

        M = self.dual_pairing_matrix()
        ker = exactla.kernel_basis(M, self.n * self.n, self.field)
        if ker:
            return False, ker[0]
        return True, None

    def __repr__(self):
        return f"BraidingTensor(n={self.n}, {sum(len(c) for c in self.cols.values())} entries)"


def _dict_eq(a: dict, b: dict) -> bool:
    for k in set(a) | set(b):
        x, y = a.get(k), b.get(k)
        if x is None:
            if y:
                return False
        elif y is None:
            if x:
                return False
        elif x != y:
            return False
    return True


# -- symmetric group plumbing ---------------------------------------------


def compose_perm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[b[i]] for i in range(len(a)))


def invert_perm(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def perm_length(a: tuple[int, ...]) -> int:
    """Number of inversions = Coxeter length."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


def reduced_word(perm: tuple[int, ...], strategy: str = "first") -> tuple[int, ...]:
    """A reduced word (k_1, ..., k_l) with perm = s_{k_1} ... s_{k_l}.

    Strategy picks which descent to strip each step ("first" or "last");
    any strategy yields a reduced word of the same length.
    """
    w = list(perm)
    stripped = []
    while True:
        descents = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
        if not descents:
            break
        k = descents[0] if strategy == "first" else descents[-1]
        stripped.append(k)
        w[k], w[k + 1] = w[k + 1], w[k]
    word = tuple(reversed(stripped))
    assert len(word) == perm_length(perm)
    return word


def matsumoto_lift(c: BraidingTensor, perm: tuple[int, ...],
                   strategy: str = "first") -> dict[WordV, dict[WordV, Scalar]]:
    """The braid-group lift of perm acting on V^(x)d, as columns.

    Built from one reduced word; the braid equation makes the result
    independent of the choice.  c_k acts on slots (k, k+1) and the
    rightmost letter of the reduced word acts first.
    """
    d = len(perm)
    word = reduced_word(perm, strategy)
    out = {}
    for w in _all_words(c.n, d):
        col = c.apply_chain(w, word)
        if col:
            out[w] = col
    return out


def _all_words(n: int, d: int):
    from itertools import product

    return (tuple(t) for t in product(range(n), repeat=d))
