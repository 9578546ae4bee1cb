"""Free-algebra words and polynomials in the matrix generators t_i^j.

A generator is identified by its flat id ``i*n + j`` (0-based row i,
column j), so the generator order t_1^1 < t_1^2 < ... < t_n^n is just
integer order on ids.  A word is a tuple of ids; the monomial order is
degree-lexicographic on (len, word).

Polynomials are dicts word -> scalar wrapped in :class:`NCPoly`; the raw
dict helpers are exposed for the reduction-heavy callers.  The comatrix
coproduct and counit act on words by summing over middle index chains.

For n <= 5 generators print as the letters a, b, c, ... in row-major
order (so for n = 2 the matrix of generators is [[a, b], [c, d]]).
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Mapping

from .scalars import Scalar, format_scalar

Word = tuple[int, ...]

_LETTERS = "abcdefghijklmnopqrstuvwxy"


def gen_id(i: int, j: int, n: int) -> int:
    return i * n + j


def gen_ij(g: int, n: int) -> tuple[int, int]:
    return divmod(g, n)


def deglex_key(w: Word):
    return (len(w), w)


def word_str(w: Word, n: int) -> str:
    if not w:
        return "1"
    if n * n <= len(_LETTERS):
        return "".join(_LETTERS[g] for g in w)
    return "*".join("t[%d,%d]" % (g // n + 1, g % n + 1) for g in w)


# -- raw dict plumbing (shared with the Groebner machinery) ----------------


def dict_add_scaled(target: dict, src: Mapping, coeff: Scalar) -> None:
    """target += coeff * src, dropping exact zeros."""
    for w, c in src.items():
        acc = target.get(w)
        acc = coeff * c if acc is None else acc + coeff * c
        if acc:
            target[w] = acc
        elif w in target:
            del target[w]


def dict_mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            c = ca * cb
            acc = out.get(w)
            acc = c if acc is None else acc + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
    return out


class NCPoly:
    """Element of the free algebra on the t_i^j, as {word: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls({})

    @classmethod
    def term(cls, w: Word, coeff: Scalar) -> "NCPoly":
        return cls({w: coeff} if coeff else {})

    @classmethod
    def gen(cls, i: int, j: int, n: int, one: Scalar = 1) -> "NCPoly":
        return cls({(gen_id(i, j, n),): one})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return not (self - other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        dict_add_scaled(out, other.terms, 1)
        return NCPoly(out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        dict_add_scaled(out, other.terms, -1)
        return NCPoly(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return NCPoly(dict_mul(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with nothing here except by convention: they are
        # central, so left and right scaling agree
        return self.scale(other)

    def scale(self, c: Scalar) -> "NCPoly":
        if not c:
            return NCPoly({})
        return NCPoly({w: c * x for w, x in self.terms.items()})

    def degree(self) -> int:
        """Max word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {len(w) for w in self.terms}
        return len(degs) <= 1

    def leading_word(self) -> Word:
        return max(self.terms, key=deglex_key)

    def leading_coeff(self) -> Scalar:
        return self.terms[self.leading_word()]

    def monic(self) -> "NCPoly":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff())

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def pretty(self, n: int) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            cs = format_scalar(c)
            ws = word_str(w, n)
            if ws == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ws)
            elif cs == "-1":
                parts.append("-" + ws)
            else:
                cs2 = f"({cs})" if ("+" in cs or (" - " in cs)) else cs
                parts.append(f"{cs2}*{ws}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"NCPoly({len(self.terms)} terms, deg {self.degree()})"


def parse_word(text: str, n: int) -> Word:
    """Inverse of word_str for the letter alphabet (n <= 5)."""
    if text == "1":
        return ()
    assert n * n <= len(_LETTERS)
    return tuple(_LETTERS.index(ch) for ch in text)


# -- comatrix coalgebra ----------------------------------------------------


def coproduct_word(w: Word, n: int) -> Iterator[tuple[Word, Word]]:
    """All (left, right) word pairs in Delta(t_w), each with coefficient 1.

    Delta(t_i^j) = sum_k t_i^k (x) t_k^j extended multiplicatively: the
    middle indices chain through every letter.
    """
    rows = [g // n for g in w]
    cols = [g % n for g in w]
    for mid in product(range(n), repeat=len(w)):
        left = tuple(r * n + k for r, k in zip(rows, mid))
        right = tuple(k * n + c for k, c in zip(mid, cols))
        yield left, right


def coproduct(p: NCPoly | Mapping, n: int) -> dict[tuple[Word, Word], Scalar]:
    """Delta(p) as {(left word, right word): coefficient}."""
    terms = p.terms if isinstance(p, NCPoly) else p
    out: dict[tuple[Word, Word], Scalar] = {}
    for w, c in terms.items():
        for lw, rw in coproduct_word(w, n):
            key = (lw, rw)
            acc = out.get(key)
            acc = c if acc is None else acc + c
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return out


def counit_word(w: Word, n: int) -> int:
    """eps(t_w): 1 if every letter is diagonal, else 0."""
    return 1 if all(g // n == g % n for g in w) else 0


def counit(p: NCPoly | Mapping, n: int, field) -> Scalar:
    terms = p.terms if isinstance(p, NCPoly) else p
    acc = field.zero
    for w, c in terms.items():
        if counit_word(w, n):
            acc = acc + c
    return acc
