"""The quadratic coefficient bialgebra of a braiding and its r-form.

Generators t_i^j (flat ids from :mod:`qfa.ncpoly`); for every index tuple
(i, j, r, s) the exchange relation

    sum_{k,l} c_{ij}^{kl} t_k^r t_l^s  =  sum_{k,l} c_{kl}^{rs} t_i^k t_j^l

is collected, and the presentation keeps the RREF span of all of them
(canonical, deterministic).  Scaling the braiding rescales both sides the
same way, so the presentation only depends on c up to nonzero scale.

The dual r-form is defined on generators by r(t_i^k, t_j^l) = c_{ji}^{kl}
and extended to products by the two convolution laws: the right argument
is peeled first (r(a, bc) = r(a_(2), b) r(a_(1), c)), then single right
letters recurse down the left argument (r(ab, c) = r(a, c_(1)) r(b,
c_(2))).  Values on word pairs are memoized.

The Hayashi matrix of a group-like candidate g is R_ia = r(t_i^a, g); if
R is invertible the induced map J(t_i^j) = sum R_ia (R^-1)_bj t_a^b is the
conjugation automorphism with g a = J(a) g.
"""

from __future__ import annotations

from .braiding import BraidingTensor
from .exactla import SingularMatrixError, Subspace, invert
from .gbasis import TruncatedGB
from .ncpoly import NCPoly, Word, coproduct_word, counit_word, gen_id
from .scalars import Scalar


class FrtPresentation:
    def __init__(self, c: BraidingTensor):
        self.c = c
        self.n = c.n
        self.field = c.field
        self.ngens = c.n * c.n
        self._words2 = sorted(
            ((g1, g2) for g1 in range(self.ngens) for g2 in range(self.ngens))
        )
        self._pos2 = {w: i for i, w in enumerate(self._words2)}
        self.span = Subspace(len(self._words2), self.field)
        for p in self._raw_relations():
            self.span.extend_with(self._vec(p))
        self.relations = [self._poly(row) for row in self.span.rows]
        self._gb_cache: dict[tuple[int, int], TruncatedGB] = {}

    def _raw_relations(self):
        n = self.n
        rows: dict[tuple[int, int], dict[tuple[int, int], Scalar]] = {}
        for ij in self.c.cols:
            for kl, cv in self.c.cols[ij].items():
                rows.setdefault(kl, {})[ij] = cv
        for i in range(n):
            for j in range(n):
                col = self.c.column(i, j)
                for r in range(n):
                    for s in range(n):
                        terms: dict[Word, Scalar] = {}
                        for (k, l), cv in col.items():
                            w = (gen_id(k, r, n), gen_id(l, s, n))
                            got = terms.get(w)
                            got = cv if got is None else got + cv
                            if got:
                                terms[w] = got
                            elif w in terms:
                                del terms[w]
                        for (k, l), cv in rows.get((r, s), {}).items():
                            w = (gen_id(i, k, n), gen_id(j, l, n))
                            got = terms.get(w)
                            got = -cv if got is None else got - cv
                            if got:
                                terms[w] = got
                            elif w in terms:
                                del terms[w]
                        if terms:
                            yield NCPoly(terms)

    def _vec(self, p: NCPoly):
        v = [self.field.zero] * len(self._words2)
        for w, cv in p.terms.items():
            v[self._pos2[w]] = cv
        return v

    def _poly(self, row) -> NCPoly:
        return NCPoly({self._words2[i]: cv for i, cv in enumerate(row) if cv})

    def contains_quadratic(self, p: NCPoly) -> bool:
        """Membership in the degree-2 relation span (exact)."""
        if not p:
            return True
        if not (p.is_homogeneous() and p.degree() == 2):
            return False
        return self.span.contains(self._vec(p))

    def same_ideal_as(self, polys: list[NCPoly]) -> bool:
        """Do the given quadratic relations span exactly the same space?"""
        S = Subspace(len(self._words2), self.field)
        for p in polys:
            S.extend_with(self._vec(p))
        return S.dim == self.span.dim and all(
            self.span.contains(r) for r in S.rows
        )

    def groebner(self, through_degree: int, budget: int = 2_000_000) -> TruncatedGB:
        key = (through_degree, budget)
        got = self._gb_cache.get(key)
        if got is None:
            for (d0, b0), gb in self._gb_cache.items():
                if b0 == budget and d0 >= through_degree and not gb.budget_exhausted:
                    return gb
            got = TruncatedGB(self.ngens, self.field, self.relations,
                              through_degree, budget)
            self._gb_cache[key] = got
        return got


class RForm:
    def __init__(self, c: BraidingTensor):
        self.c = c
        self.n = c.n
        self.field = c.field
        self._memo: dict[tuple[Word, Word], Scalar] = {}

    def on_gens(self, i: int, a: int, j: int, b: int) -> Scalar:
        """r(t_i^a, t_j^b) = c_{ji}^{ab}."""
        return self.c.entry(j, i, a, b)

    def eval_words(self, u: Word, v: Word) -> Scalar:
        memo = self._memo
        got = memo.get((u, v))
        if got is not None:
            return got
        n, field = self.n, self.field
        if not v:
            val = field.one if counit_word(u, n) else field.zero
        elif not u:
            val = field.one if counit_word(v, n) else field.zero
        elif len(v) > 1:
            v0, vr = v[:1], v[1:]
            acc = field.zero
            for left, right in coproduct_word(u, n):
                f = self.eval_words(right, v0)
                if f:
                    g = self.eval_words(left, vr)
                    if g:
                        acc = acc + f * g
            val = acc
        elif len(u) > 1:
            # single letter on the right: chain the middle index down u
            j, b = divmod(v[0], n)
            acc = field.zero
            u0, ur = u[0], u[1:]
            i, a = divmod(u0, n)
            for k in range(n):
                f = self.on_gens(i, a, j, k)
                if f:
                    g = self.eval_words(ur, (gen_id(k, b, n),))
                    if g:
                        acc = acc + f * g
            val = acc
        else:
            i, a = divmod(u[0], n)
            j, b = divmod(v[0], n)
            val = self.on_gens(i, a, j, b)
        memo[(u, v)] = val
        return val

    def eval_polys(self, p: NCPoly, q: NCPoly) -> Scalar:
        acc = self.field.zero
        for wp, cp in p.terms.items():
            for wq, cq in q.terms.items():
                f = self.eval_words(wp, wq)
                if f:
                    acc = acc + cp * cq * f
        return acc


def cqt3_generator_residual(frt: FrtPresentation, rform: RForm,
                            i: int, j: int, u: int, v: int) -> NCPoly:
    """r(x_(1), y_(1)) x_(2) y_(2) - y_(1) x_(1) r(x_(2), y_(2)) for the
    generators x = t_i^j, y = t_u^v; must land in the relation span."""
    n, field = frt.n, frt.field
    terms: dict[Word, Scalar] = {}
    for k in range(n):
        for m in range(n):
            f = rform.on_gens(i, k, u, m)
            if f:
                w = (gen_id(k, j, n), gen_id(m, v, n))
                got = terms.get(w)
                got = f if got is None else got + f
                if got:
                    terms[w] = got
                elif w in terms:
                    del terms[w]
            g = rform.on_gens(k, j, m, v)
            if g:
                w = (gen_id(u, m, n), gen_id(i, k, n))
                got = terms.get(w)
                got = -g if got is None else got - g
                if got:
                    terms[w] = got
                elif w in terms:
                    del terms[w]
    return NCPoly(terms)


def check_cqt3_on_generators(frt: FrtPresentation, rform: RForm):
    """(ok, witness): the defining compatibility of the r-form with the
    exchange relations, checked exactly on all generator pairs."""
    n = frt.n
    for i in range(n):
        for j in range(n):
            for u in range(n):
                for v in range(n):
                    res = cqt3_generator_residual(frt, rform, i, j, u, v)
                    if not frt.contains_quadratic(res):
                        return False, (i, j, u, v, res)
    return True, None


class HayashiMap:
    """The conjugation endomorphism induced by a group-like element."""

    def __init__(self, frt: FrtPresentation, rform: RForm, g: NCPoly):
        self.frt = frt
        self.n = frt.n
        self.field = frt.field
        n = self.n
        self.matrix = [
            [rform.eval_polys(NCPoly.gen(i, a, n, self.field.one), g)
             for a in range(n)]
            for i in range(n)
        ]
        try:
            self.inverse_matrix = invert(self.matrix, self.field)
        except SingularMatrixError as e:
            raise ValueError(
                "Hayashi matrix of the candidate group-like is singular"
            ) from e

    def apply_gen(self, i: int, j: int) -> NCPoly:
        n = self.n
        terms: dict[Word, Scalar] = {}
        for a in range(n):
            ria = self.matrix[i][a]
            if not ria:
                continue
            for b in range(n):
                cv = ria * self.inverse_matrix[b][j]
                if cv:
                    terms[(gen_id(a, b, n),)] = cv
        return NCPoly(terms)

    def apply_poly(self, p: NCPoly) -> NCPoly:
        n = self.n
        out = NCPoly({})
        for w, cv in p.terms.items():
            prod = NCPoly({(): self.field.one})
            for g in w:
                prod = prod * self.apply_gen(*divmod(g, n))
            out = out + prod.scale(cv)
        return out

    def is_identity_on_generators(self) -> bool:
        n = self.n
        one = self.field.one
        for i in range(n):
            for j in range(n):
                if self.apply_gen(i, j) != NCPoly.gen(i, j, n, one):
                    return False
        return True

    def generator_table(self) -> dict[tuple[int, int], NCPoly]:
        n = self.n
        return {(i, j): self.apply_gen(i, j) for i in range(n) for j in range(n)}

    def squares_to_identity(self) -> bool:
        n = self.n
        one = self.field.one
        for i in range(n):
            for j in range(n):
                if self.apply_poly(self.apply_gen(i, j)) != NCPoly.gen(i, j, n, one):
                    return False
        return True
