"""Set-level braid solutions, racks, and their weighted linearizations.

A map s on pairs of indices, written s(i, j) = (g_i(j), f_j(i)), solves
the braid equation iff the two triple compositions agree on every input.
Linearizing with a table of nonzero weights q_ij gives a braided vector
space with matrix entries c_ij^kl = q_ij [k = g_i(j)] [l = f_j(i)]; such
a braiding is rigid exactly when every f_j and g_i is a bijection.

For these braidings the pairing of the volume-induced group-like element
against a matrix generator collapses to a single product of weights along
an index orbit, and conjugation by the group-like permutes generators up
to a ratio of volume coefficients.  Both closed forms live here and serve
as independent oracles for the generic recursions in `frt`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from .braiding import BraidingTensor
from .nichols import WgfData
from .scalars import Scalar, ScalarField


@dataclass(frozen=True)
class SetSolution:
    """s(i, j) = (g[i][j], f[j][i]) on {0, ..., n-1}."""

    g: tuple[tuple[int, ...], ...]
    f: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.g)

    @classmethod
    def from_map(cls, n: int, image: Callable[[int, int], tuple[int, int]]):
        g = [[0] * n for _ in range(n)]
        f = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                k, l = image(i, j)
                g[i][j] = k
                f[j][i] = l
        return cls(tuple(map(tuple, g)), tuple(map(tuple, f)))

    def apply(self, i: int, j: int) -> tuple[int, int]:
        return self.g[i][j], self.f[j][i]

    def braid_failure(self) -> Optional[tuple[int, int, int]]:
        """First triple where the two braid compositions differ, if any."""
        def c1(t):
            i, j, k = t
            return (*self.apply(i, j), k)

        def c2(t):
            i, j, k = t
            return (i, *self.apply(j, k))

        n = self.n
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t = (i, j, k)
                    if c1(c2(c1(t))) != c2(c1(c2(t))):
                        return t
        return None

    def is_involutive(self) -> bool:
        return all(self.apply(*self.apply(i, j)) == (i, j)
                   for i in range(self.n) for j in range(self.n))

    def degeneracy_failure(self) -> Optional[str]:
        """A letter whose induced map is not a bijection, if any."""
        full = set(range(self.n))
        for j in range(self.n):
            if set(self.f[j]) != full:
                return f"f_{j} is not a bijection"
        for i in range(self.n):
            if set(self.g[i]) != full:
                return f"g_{i} is not a bijection"
        return None

    def is_nondegenerate(self) -> bool:
        return self.degeneracy_failure() is None


@dataclass(frozen=True)
class Rack:
    """Binary operation table[i][j] = i > j, acting on the left."""

    table: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.table)

    def act(self, i: int, j: int) -> int:
        return self.table[i][j]

    def axiom_failure(self) -> Optional[str]:
        n, t = self.n, self.table
        for i in range(n):
            if set(t[i]) != set(range(n)):
                return f"row {i} is not a permutation"
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if t[x][t[y][z]] != t[t[x][y]][t[x][z]]:
                        return f"self-distributivity fails at ({x}, {y}, {z})"
        return None

    def solution(self) -> SetSolution:
        """The derived braid solution s(x, y) = (x > y, x)."""
        return SetSolution.from_map(
            self.n, lambda x, y: (self.table[x][y], x))


class Cocycle:
    """Table of nonzero weights attached to index pairs."""

    def __init__(self, n: int, values):
        self.n = n
        if callable(values):
            self.values = tuple(tuple(values(i, j) for j in range(n))
                                for i in range(n))
        else:
            self.values = tuple(tuple(row) for row in values)
        for i, row in enumerate(self.values):
            for j, v in enumerate(row):
                if not v:
                    raise ValueError(f"weight at ({i}, {j}) is zero")

    @classmethod
    def constant(cls, n: int, q: Scalar) -> "Cocycle":
        return cls(n, lambda i, j: q)

    def value(self, i: int, j: int) -> Scalar:
        return self.values[i][j]

    def constant_value(self) -> Optional[Scalar]:
        q = self.values[0][0]
        if all(v == q for row in self.values for v in row):
            return q
        return None

    def rack_identity_failure(self, rack: Rack) -> Optional[tuple[int, int, int]]:
        """First triple violating q_{i,j>k} q_{j,k} = q_{i>j,i>k} q_{i,k}."""
        n, t, q = rack.n, rack.table, self.values
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if (q[i][t[j][k]] * q[j][k]
                            != q[t[i][j]][t[i][k]] * q[i][k]):
                        return (i, j, k)
        return None


@dataclass
class ValidationReport:
    ok: bool
    failures: list = dc_field(default_factory=list)
    involutive: Optional[bool] = None
    nondegenerate: Optional[bool] = None


def validate(obj, cocycle: Optional[Cocycle] = None) -> ValidationReport:
    """Exhaustively check a SetSolution or Rack, plus an optional weight
    table (rack inputs also get the weight compatibility identity)."""
    failures = []
    if isinstance(obj, Rack):
        bad = obj.axiom_failure()
        if bad is not None:
            failures.append(f"rack axioms: {bad}")
        if cocycle is not None:
            bad = cocycle.rack_identity_failure(obj)
            if bad is not None:
                failures.append(f"weight identity fails at {bad}")
        sol = obj.solution()
    else:
        sol = obj
    bad = sol.braid_failure()
    if bad is not None:
        failures.append(f"braid equation fails at {bad}")
    if cocycle is not None and cocycle.n != sol.n:
        failures.append("weight table size does not match")
    return ValidationReport(
        ok=not failures,
        failures=failures,
        involutive=sol.is_involutive(),
        nondegenerate=sol.is_nondegenerate(),
    )


def linearize(sol: SetSolution, cocycle: Cocycle,
              field: ScalarField) -> BraidingTensor:
    return BraidingTensor.from_set_map(
        sol.n, field, sol.apply, cocycle.value)


def _orbit(sol: SetSolution, cocycle: Cocycle, word, start: int):
    """Walk `start` through the letters of `word`: at each step the letter
    acts and the running index is relabeled.  Returns the sequence of
    acted letters, the final index, and the product of weights picked up
    (weights multiply as q_{current, letter}, the order the linearized
    matrix entries dictate)."""
    cur = start
    chain = []
    w: Scalar = 1
    for j in word:
        chain.append(sol.g[cur][j])
        w = w * cocycle.value(cur, j)
        cur = sol.f[j][cur]
    return tuple(chain), cur, w


def closed_form_pairing(sol: SetSolution, cocycle: Cocycle,
                        wgf: WgfData) -> Callable[[int, int], Scalar]:
    """The dual pairing of the group-like determinant against t_a^b, as a
    closed form: zero unless b is the endpoint of a's orbit under the
    volume word, else the orbit's volume coefficient times its weight
    product.  For a constant weight q this is alpha * q**N."""
    field = wgf.nd.field

    def value(a: int, b: int) -> Scalar:
        chain, end, w = _orbit(sol, cocycle, wgf.volume_word, a)
        if b != end:
            return field.zero
        return wgf.alpha[chain] * w

    return value


def closed_form_conjugation(sol: SetSolution, cocycle: Cocycle,
                            wgf: WgfData) -> dict:
    """Partial table {(u, v): (coeff, (a, b))} with D t_u^v = coeff t_a^b D
    in the bialgebra, for a constant weight table.

    (u, v) is present iff the volume coefficient of u's source orbit is
    nonzero; entries with a vanishing source coefficient are undetermined
    by this shortcut.  Compare against the generic conjugation table on
    the defined entries only.
    """
    if cocycle.constant_value() is None:
        raise ValueError("closed-form conjugation needs a constant weight")
    n = sol.n
    alpha_of = {}
    end_of = {}
    for a in range(n):
        chain, end, _ = _orbit(sol, cocycle, wgf.volume_word, a)
        alpha_of[a] = wgf.alpha[chain]
        end_of[a] = end
    if sorted(end_of.values()) != list(range(n)):
        raise ValueError("volume-word orbit map is not a bijection")
    source = {end: a for a, end in end_of.items()}
    table = {}
    for u in range(n):
        a = source[u]
        if not alpha_of[a]:
            continue
        for v in range(n):
            b = source[v]
            table[(u, v)] = (alpha_of[b] / alpha_of[a], (a, b))
    return table


def volume_coefficients(wgf: WgfData) -> dict:
    """Every top-degree index word's coefficient over the volume element."""
    return dict(wgf.alpha)
