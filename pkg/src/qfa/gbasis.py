"""Degree-truncated noncommutative Groebner bases for graded ideals.

Input relations must be homogeneous (the quadratic coefficient ideals here
always are); completion runs degree by degree in the deglex order of
:mod:`qfa.ncpoly`.  Because generators and S-polynomials are homogeneous,
an obstruction of degree d only ever involves elements of degree < d, so
once the degree-d loop drains the basis is a Groebner basis "through
degree d": normal forms are canonical for polynomials of degree <= d and
ideal membership of such elements is decided exactly.

Work is metered in rewritten monomials; exceeding the budget aborts
completion cleanly at the last fully finished degree and flags the basis
as partial.  Normal forms stay available up to that degree.
"""

from __future__ import annotations

import hashlib
import heapq
from typing import Iterable

from .ncpoly import NCPoly, Word, deglex_key
from .scalars import format_scalar


class BudgetExceeded(RuntimeError):
    pass


def _heap_key(w: Word):
    # heapq is a min-heap; negate so the deglex-largest word pops first
    return (-len(w), tuple(-g for g in w))


class TruncatedGB:
    def __init__(self, ngens: int, field, relations: Iterable[NCPoly],
                 through_degree: int, budget: int = 2_000_000):
        self.ngens = ngens
        self.field = field
        self.budget = budget
        self.work = 0
        self.budget_exhausted = False
        self.complete_through = 1
        # degree -> {leading word -> tail terms}; the element is X_lw + tail
        self.index: dict[int, dict[Word, dict[Word, object]]] = {}
        self._lengths: list[int] = []
        self._irreducible: set[Word] = set()
        self._nf_word_cache: dict[Word, dict] = {}

        by_degree: dict[int, list[dict]] = {}
        canon: list[NCPoly] = []
        for p in relations:
            if not p:
                continue
            if not p.is_homogeneous():
                raise ValueError("relations must be homogeneous")
            by_degree.setdefault(p.degree(), []).append(dict(p.terms))
            canon.append(p)
        self.source_fingerprint = _fingerprint(canon)
        self._complete(by_degree, through_degree)

    # -- public surface ----------------------------------------------------

    def leading_words(self) -> list[Word]:
        return sorted(
            (w for idx in self.index.values() for w in idx), key=deglex_key
        )

    def elements(self) -> list[NCPoly]:
        out = []
        for L in sorted(self.index):
            for w in sorted(self.index[L], key=deglex_key):
                terms = {w: self.field.one}
                terms.update(self.index[L][w])
                out.append(NCPoly(terms))
        return out

    def normal_form(self, p: NCPoly, rng=None) -> NCPoly:
        """Canonical normal form; deg(p) must not exceed complete_through.

        With rng, reduction sites are chosen at random instead of by the
        fixed rule; on completed degrees the result must agree with the
        deterministic one (the confluence spot checks rely on this).
        """
        if p.degree() > self.complete_through:
            raise ValueError(
                f"normal form only valid through degree {self.complete_through}"
                f" (got degree {p.degree()})"
            )
        return NCPoly(self._nf(dict(p.terms), rng=rng, metered=False))

    def normal_form_word(self, w: Word) -> dict:
        """Cached normal form of a single basis word, as a term dict."""
        got = self._nf_word_cache.get(w)
        if got is None:
            if len(w) > self.complete_through:
                raise ValueError(
                    f"normal form only valid through degree {self.complete_through}"
                )
            got = self._nf({w: self.field.one}, metered=False)
            self._nf_word_cache[w] = got
        return dict(got)

    def is_member(self, p: NCPoly) -> bool:
        return not self.normal_form(p)

    # -- completion --------------------------------------------------------

    def _complete(self, by_degree: dict[int, list[dict]], through: int):
        pending: dict[int, list] = {}
        seq = 0
        try:
            for d in range(2, through + 1):
                for terms in by_degree.get(d, []):
                    seq = self._insert_reduced(dict(terms), pending, through, seq, d)
                heap = pending.pop(d, [])
                heapq.heapify(heap)
                while heap:
                    _, _, u, v, olen = heapq.heappop(heap)
                    s = self._s_poly(u, v, olen)
                    seq = self._insert_reduced(s, pending, through, seq, d)
                self._back_reduce(d)
                self.complete_through = d
        except BudgetExceeded:
            self.budget_exhausted = True
        self._irreducible.clear()
        self._nf_word_cache.clear()

    def _insert_reduced(self, terms: dict, pending, through: int, seq: int,
                        current_degree: int) -> int:
        r = self._nf(terms, metered=True)
        if not r:
            return seq
        lw = max(r, key=deglex_key)
        assert len(lw) == current_degree  # homogeneous, degreewise schedule
        inv = r[lw]
        tail = {w: c / inv for w, c in r.items() if w != lw}
        self._irreducible.clear()
        self._nf_word_cache.clear()
        # obstructions against everything present, both orders, plus self
        pairs = []
        for idx in self.index.values():
            for v in idx:
                for a, b in ((lw, v), (v, lw)):
                    for olen in range(1, min(len(a), len(b))):
                        if a[-olen:] == b[:olen]:
                            pairs.append((a, b, olen))
        for olen in range(1, len(lw)):
            if lw[-olen:] == lw[:olen]:
                pairs.append((lw, lw, olen))
        for a, b, olen in pairs:
            deg = len(a) + len(b) - olen
            if deg <= through:
                seq += 1
                pending.setdefault(deg, []).append((deg, seq, a, b, olen))
        self.index.setdefault(len(lw), {})[lw] = tail
        self._lengths = sorted(self.index)
        return seq

    def _s_poly(self, u: Word, v: Word, olen: int) -> dict:
        """g_u * x_{v-tail-part} - x_{u-head-part} * g_v for the overlap."""
        tail_u = self.index[len(u)][u]
        tail_v = self.index[len(v)][v]
        right = v[olen:]
        left = u[:len(u) - olen]
        out: dict = {}
        for w, c in tail_u.items():
            nw = w + right
            cur = out.get(nw)
            val = c if cur is None else cur + c
            if val:
                out[nw] = val
            elif nw in out:
                del out[nw]
        for w, c in tail_v.items():
            nw = left + w
            cur = out.get(nw)
            val = -c if cur is None else cur - c
            if val:
                out[nw] = val
            elif nw in out:
                del out[nw]
        self.work += len(tail_u) + len(tail_v)
        return out

    def _find_reduction(self, w: Word):
        idx = self.index
        for pos in range(len(w)):
            for L in self._lengths:
                if pos + L > len(w):
                    break
                if w[pos:pos + L] in idx[L]:
                    return pos, L
        return None

    def _find_reductions_all(self, w: Word):
        idx = self.index
        return [
            (pos, L)
            for pos in range(len(w))
            for L in self._lengths
            if pos + L <= len(w) and w[pos:pos + L] in idx[L]
        ]

    def _nf(self, terms: dict, rng=None, metered: bool = True) -> dict:
        terms = dict(terms)
        if rng is None:
            heap = [_heap_key(w) + (w,) for w in terms]
            heapq.heapify(heap)
            while heap:
                w = heapq.heappop(heap)[-1]
                if w not in terms or w in self._irreducible:
                    continue
                hit = self._find_reduction(w)
                if hit is None:
                    self._irreducible.add(w)
                    continue
                for nw in self._rewrite(terms, w, hit):
                    heapq.heappush(heap, _heap_key(nw) + (nw,))
                if metered and self.work > self.budget:
                    raise BudgetExceeded
        else:
            while True:
                sites = [
                    (w, hit) for w in terms for hit in self._find_reductions_all(w)
                ]
                if not sites:
                    break
                w, hit = sites[rng.randrange(len(sites))]
                self._rewrite(terms, w, hit)
                if metered and self.work > self.budget:
                    raise BudgetExceeded
        return terms

    def _rewrite(self, terms: dict, w: Word, hit) -> list[Word]:
        pos, L = hit
        tail = self.index[L][w[pos:pos + L]]
        c = terms.pop(w)
        new_words = []
        pre, post = w[:pos], w[pos + L:]
        for t, tc in tail.items():
            nw = pre + t + post
            cur = terms.get(nw)
            val = -(c * tc) if cur is None else cur - c * tc
            if val:
                terms[nw] = val
                new_words.append(nw)
            elif nw in terms:
                del terms[nw]
        self.work += len(tail) + 1
        return new_words

    def _back_reduce(self, d: int):
        """Canonicalize the degree-d layer: tails reduced against the full
        basis (minus the element itself), fixing earlier same-degree tails
        that predate later leading words."""
        idx = self.index.get(d)
        if not idx:
            return
        for lw in sorted(idx, key=deglex_key):
            self._irreducible.clear()
            tail = idx.pop(lw)
            idx[lw] = self._nf(dict(tail), metered=True)
        self._irreducible.clear()
        self._nf_word_cache.clear()


def _fingerprint(relations: list[NCPoly]) -> str:
    blobs = []
    for p in relations:
        q = p.monic()
        parts = [
            ",".join(map(str, w)) + ":" + format_scalar(c)
            for w, c in q.sorted_terms()
        ]
        blobs.append("|".join(parts))
    blobs.sort()
    h = hashlib.sha256()
    h.update("\n".join(blobs).encode())
    return h.hexdigest()
