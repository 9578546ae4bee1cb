"""Quantum symmetrizers, graded kernels and the woven-graded-frame data.

For a braiding c on an n-dimensional space, the degree-d symmetrizer is
the sum of the braid lifts of all d! permutations.  It is assembled by
the factored recursion

    QS_d = (QS_{d-1} (x) id) o (id + c_{d-1} (id + c_{d-2} ( ... (id + c_1))))

which is valid because the coset decomposition S_d = S_{d-1} . {cycles}
splits lengths additively, so each lift factors through the braid
monoid.  The naive per-permutation sum stays available as a cross-check
(:func:`symmetrizer_by_permutations`).

Degree d contributes ker QS_d to the defining ideal; the quotient's
graded dimension ("hilbert") drops to 1 at the top degree and to 0 one
step later.  From the one-dimensional top the module extracts the volume
class, the coefficient table alpha, and the two n x n boundary pairings
whose inverses give left and right dual bases; their invertibility is the
frame condition checked here.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Optional, Sequence

from .braiding import BraidingTensor, WordV, matsumoto_lift
from .exactla import SingularMatrixError, Subspace, invert
from .scalars import Scalar


class TopNotFound(Exception):
    """Raised when no top degree is confirmed within limits.

    reason is "budget" (an elimination would exceed the work budget) or
    "max-degree" (the scan ran out of degrees with the quotient still
    growing or stable above 1).
    """

    def __init__(self, reason: str, degree: int, hilbert: list[int]):
        self.reason = reason
        self.degree = degree
        self.hilbert = hilbert
        super().__init__(f"no top through degree {degree} ({reason}); h = {hilbert}")


class WgfError(Exception):
    """A structural failure of the frame conditions (not a budget issue)."""


def all_words(n: int, d: int) -> list[WordV]:
    return [tuple(w) for w in product(range(n), repeat=d)]


def vword_str(w: WordV, n: int) -> str:
    if not w:
        return "1"
    sep = "" if n < 10 else "."
    return sep.join(f"x{i + 1}" for i in w)


Columns = dict[WordV, dict[WordV, Scalar]]


def symmetrizer_columns(c: BraidingTensor, d: int,
                        prev: Optional[Columns] = None) -> Columns:
    """Columns of QS_d, reusing QS_{d-1} when provided."""
    n, field = c.n, c.field
    one = field.one
    if d == 0:
        return {(): {(): one}}
    if d == 1:
        return {(i,): {(i,): one} for i in range(n)}
    if prev is None:
        prev = symmetrizer_columns(c, d - 1)
    # Horner chain: T = id + c_p o T for p = 0 .. d-2
    T: Columns = {w: {w: one} for w in all_words(n, d)}
    for p in range(d - 1):
        nxt: Columns = {}
        for w, col in T.items():
            acc: dict[WordV, Scalar] = {w: one}
            for u, cu in col.items():
                for v, cv in c.apply_at(u, p).items():
                    got = acc.get(v)
                    got = cu * cv if got is None else got + cu * cv
                    if got:
                        acc[v] = got
                    elif v in acc:
                        del acc[v]
            nxt[w] = acc
        T = nxt
    out: Columns = {}
    for w, col in T.items():
        acc: dict[WordV, Scalar] = {}
        for u, cu in col.items():
            for u2, c2 in prev[u[:-1]].items():
                v = u2 + (u[-1],)
                got = acc.get(v)
                got = cu * c2 if got is None else got + cu * c2
                if got:
                    acc[v] = got
                elif v in acc:
                    del acc[v]
        out[w] = acc
    return out


def symmetrizer_by_permutations(c: BraidingTensor, d: int) -> Columns:
    """Reference assembly: sum of matsumoto lifts over all of S_d."""
    out: Columns = {w: {} for w in all_words(c.n, d)}
    for perm in permutations(range(d)):
        lift = matsumoto_lift(c, perm)
        for w, col in lift.items():
            acc = out[w]
            for v, cv in col.items():
                got = acc.get(v)
                got = cv if got is None else got + cv
                if got:
                    acc[v] = got
                elif v in acc:
                    del acc[v]
    return out


class NicholsData:
    """Degreewise kernels of the symmetrizers of one braiding.

    Degrees are computed on demand; each one costs an exact elimination on
    an n^d square matrix, so ensure_degree refuses (TopNotFound with
    reason "budget") when the estimated work n^(3d) exceeds the budget.
    """

    def __init__(self, c: BraidingTensor, work_budget: int = 200_000_000):
        self.c = c
        self.n = c.n
        self.field = c.field
        self.work_budget = work_budget
        self.kernels: dict[int, Subspace] = {}
        self._qs_cols: dict[int, Columns] = {}

    # -- degree bookkeeping ------------------------------------------------

    def ensure_degree(self, d: int):
        if d in self.kernels:
            return
        for dd in range(2, d + 1):
            if dd not in self.kernels:
                self._compute_degree(dd)

    def _compute_degree(self, d: int):
        dim = self.n ** d
        if dim ** 3 > self.work_budget:
            raise TopNotFound("budget", d, self.hilbert_known())
        prev = self._qs_cols.get(d - 1)
        cols = symmetrizer_columns(self.c, d, prev)
        self._qs_cols[d] = cols
        words = all_words(self.n, d)
        pos = {w: i for i, w in enumerate(words)}
        zero = self.field.zero
        rows = [[zero] * dim for _ in range(dim)]
        for w, col in cols.items():
            j = pos[w]
            for v, cv in col.items():
                rows[pos[v]][j] = cv
        from .exactla import kernel_basis

        ker = kernel_basis(rows, dim, self.field)
        S = Subspace(dim, self.field)
        for v in ker:
            S.extend_with(v)
        self.kernels[d] = S
        # QS columns two degrees back are no longer needed for the recursion
        self._qs_cols.pop(d - 2, None)

    def words(self, d: int) -> list[WordV]:
        return all_words(self.n, d)

    def kernel(self, d: int) -> Subspace:
        if d < 2:
            S = Subspace(self.n ** d, self.field)
            self.kernels.setdefault(d, S)
            return self.kernels[d]
        self.ensure_degree(d)
        return self.kernels[d]

    def hilbert(self, d: int) -> int:
        if d == 0:
            return 1
        if d == 1:
            return self.n
        self.ensure_degree(d)
        return self.n ** d - self.kernels[d].dim

    def hilbert_known(self) -> list[int]:
        out = [1, self.n]
        for d in sorted(self.kernels):
            if d >= 2:
                out.append(self.n ** d - self.kernels[d].dim)
        return out

    def basis_words(self, d: int) -> list[WordV]:
        """Quotient basis: the non-pivot words of the degree-d kernel."""
        words = self.words(d)
        return [words[j] for j in self.kernel(d).non_pivots()]

    def class_coords(self, d: int, vec) -> list[Scalar]:
        """Coordinates of a vector (dict word->coeff or full list) in the
        quotient basis of degree d."""
        if isinstance(vec, dict):
            words = self.words(d)
            pos = {w: i for i, w in enumerate(words)}
            full = [self.field.zero] * len(words)
            for w, cv in vec.items():
                full[pos[w]] = cv
            vec = full
        return self.kernel(d).quotient_coords(vec)

    def word_class(self, w: WordV) -> list[Scalar]:
        return self.class_coords(len(w), {w: self.field.one})

    def product_class(self, da: int, va: dict, db: int, vb: dict) -> list[Scalar]:
        """Class of (class rep va) * (class rep vb) in degree da+db."""
        prod: dict[WordV, Scalar] = {}
        for wa, ca in va.items():
            for wb, cb in vb.items():
                w = wa + wb
                got = prod.get(w)
                got = ca * cb if got is None else got + ca * cb
                if got:
                    prod[w] = got
                elif w in prod:
                    del prod[w]
        return self.class_coords(da + db, prod)

    # -- defining relations ------------------------------------------------

    def new_relations(self, d: int) -> list[dict[WordV, Scalar]]:
        """Kernel elements of degree d modulo V.K_{d-1} + K_{d-1}.V."""
        self.ensure_degree(d)
        words = self.words(d)
        pos = {w: i for i, w in enumerate(words)}
        dim = self.n ** d
        S = Subspace(dim, self.field)
        if d > 2:
            prev = self.kernel(d - 1)
            prev_words = self.words(d - 1)
            for row in prev.rows:
                support = [(prev_words[i], cv) for i, cv in enumerate(row) if cv]
                for a in range(self.n):
                    left = [self.field.zero] * dim
                    right = [self.field.zero] * dim
                    for w, cv in support:
                        left[pos[(a,) + w]] = cv
                        right[pos[w + (a,)]] = cv
                    S.extend_with(left)
                    S.extend_with(right)
        out = []
        for row in self.kernel(d).rows:
            if S.extend_with(row):
                out.append({words[i]: cv for i, cv in enumerate(row) if cv})
        return out

    # -- top detection and frame data -------------------------------------

    def detect_top(self, max_degree: int = 8) -> int:
        """Smallest N with h(N) = 1 and h(N+1) = 0.

        Raises TopNotFound when the scan exhausts max_degree or the
        budget, and WgfError if the quotient dies without passing through
        a one-dimensional top.
        """
        for d in range(2, max_degree + 1):
            h = self.hilbert(d)
            if h == 1:
                if self.hilbert(d + 1) == 0:
                    return d
            elif h == 0:
                raise WgfError(
                    f"graded dimension jumps to 0 at degree {d} without a"
                    f" one-dimensional top (h = {self.hilbert_known()})"
                )
        raise TopNotFound("max-degree", max_degree, self.hilbert_known())


class WgfData:
    """Volume class, alpha table and dual bases at the top degree."""

    def __init__(self, nd: NicholsData, top: int,
                 volume_word: Optional[WordV] = None):
        self.nd = nd
        self.top = top
        n, field = nd.n, nd.field
        if nd.hilbert(top) != 1:
            raise WgfError(f"degree {top} is not one-dimensional")
        if nd.hilbert(top - 1) != n:
            raise WgfError(
                f"degree below the top has dimension {nd.hilbert(top - 1)},"
                f" expected {n}"
            )
        if volume_word is None:
            volume_word = next(
                w for w in nd.words(top) if any(nd.word_class(w))
            )
        gamma = nd.word_class(volume_word)[0]
        if not gamma:
            raise WgfError(
                f"requested volume word {vword_str(volume_word, n)} has zero class"
            )
        self.volume_word = volume_word
        self.gamma = gamma
        self.alpha: dict[WordV, Scalar] = {
            w: nd.word_class(w)[0] / gamma for w in nd.words(top)
        }
        self.basis_below = nd.basis_words(top - 1)
        assert len(self.basis_below) == n
        left = [
            [self.alpha[(i,) + u] for u in self.basis_below] for i in range(n)
        ]
        right = [
            [self.alpha[u + (i,)] for u in self.basis_below] for i in range(n)
        ]
        try:
            self.left_coeffs = invert(left, field)  # columns: omega^j over e_u
        except SingularMatrixError as e:
            raise WgfError("left boundary pairing is singular; no left dual"
                           f" basis (kernel witness {e.witness})") from e
        try:
            self.right_coeffs = invert(right, field)
        except SingularMatrixError as e:
            raise WgfError("right boundary pairing is singular; no right dual"
                           f" basis (kernel witness {e.witness})") from e
        self.left_pairing = left
        self.right_pairing = right

    def left_dual(self, j: int) -> dict[WordV, Scalar]:
        """omega^j as a combination of the degree-(top-1) basis classes,
        satisfying x_i . omega^j = delta_i^j . volume."""
        return {
            u: self.left_coeffs[ui][j]
            for ui, u in enumerate(self.basis_below)
            if self.left_coeffs[ui][j]
        }

    def right_dual(self, j: int) -> dict[WordV, Scalar]:
        return {
            u: self.right_coeffs[ui][j]
            for ui, u in enumerate(self.basis_below)
            if self.right_coeffs[ui][j]
        }

    def nonzero_alpha(self) -> dict[WordV, Scalar]:
        return {w: a for w, a in self.alpha.items() if a}
