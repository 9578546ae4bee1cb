from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from qfa.ncpoly import (
    NCPoly,
    coproduct,
    coproduct_word,
    counit,
    counit_word,
    deglex_key,
    gen_id,
    gen_ij,
    parse_word,
    word_str,
)
from qfa.scalars import ScalarField

F = ScalarField(1)


def P(d):
    return NCPoly({w: mpq(c) for w, c in d.items()})


def test_gen_ids_row_major():
    assert gen_id(0, 0, 2) == 0 and gen_id(0, 1, 2) == 1 and gen_id(1, 0, 2) == 2
    assert gen_ij(5, 3) == (1, 2)


def test_deglex_order():
    # degree first, then left-to-right generator order
    assert deglex_key(()) < deglex_key((0,))
    assert deglex_key((3,)) < deglex_key((0, 0))
    # t11 t22 < t12 t11 for n = 2: (0,3) vs (1,0)
    assert deglex_key((0, 3)) < deglex_key((1, 0))
    assert max([(0, 3), (1, 0), (3,)], key=deglex_key) == (1, 0)


def test_word_str_letters():
    # n = 2: [[a, b], [c, d]]
    assert word_str((0, 1, 2, 3), 2) == "abcd"
    assert word_str((), 2) == "1"
    assert parse_word("dca", 2) == (3, 2, 0)
    # n = 3 uses a..i
    assert word_str((0, 4, 8), 3) == "aei"
    # beyond the letter range: explicit indices
    assert word_str((0,), 6) == "t[1,1]"


def test_poly_basic_ops():
    a = NCPoly.gen(0, 0, 2)
    d = NCPoly.gen(1, 1, 2)
    p = a * d - d * a
    assert p.terms == {(0, 3): 1, (3, 0): -1}
    assert p.leading_word() == (3, 0)
    assert p.monic().leading_coeff() == 1
    assert (p - p).terms == {}
    assert not (p - p)
    assert p.degree() == 2 and p.is_homogeneous()
    assert (a + d).pretty(2) == "d + a"  # leading word first
    assert (a * a - 2 * d).pretty(2) == "aa - 2*d"


def test_pretty_coefficients():
    Fz = ScalarField(3)
    z = Fz.root(3)
    p = NCPoly({(0,): z, (1,): mpq(1)})
    assert p.pretty(2) == "b + z3*a" or p.pretty(2) == "z3*a + b"


words2 = st.lists(st.integers(min_value=0, max_value=3), min_size=0, max_size=3).map(tuple)
polys2 = st.dictionaries(
    words2, st.integers(min_value=-4, max_value=4).filter(bool).map(mpq), max_size=4
).map(NCPoly)


@settings(max_examples=50, deadline=None)
@given(polys2, polys2, polys2)
def test_mul_associative_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=50, deadline=None)
@given(polys2)
def test_degree_of_product(p):
    x = NCPoly.gen(0, 1, 2)
    if p:
        assert (x * p).degree() == p.degree() + 1


def _triple_coproduct(w, n, first_left):
    out = {}
    for lw, rw in coproduct_word(w, n):
        inner = coproduct_word(lw, n) if first_left else coproduct_word(rw, n)
        for a, b in inner:
            key = (a, b, rw) if first_left else (lw, a, b)
            out[key] = out.get(key, 0) + 1
    return out


@settings(max_examples=40, deadline=None)
@given(words2, st.integers(min_value=2, max_value=3))
def test_coassociativity(w, n):
    w = tuple(g % (n * n) for g in w)
    assert _triple_coproduct(w, n, True) == _triple_coproduct(w, n, False)


@settings(max_examples=40, deadline=None)
@given(words2, st.integers(min_value=2, max_value=3))
def test_counit_axiom(w, n):
    w = tuple(g % (n * n) for g in w)
    left = {}
    for lw, rw in coproduct_word(w, n):
        if counit_word(lw, n):
            left[rw] = left.get(rw, 0) + 1
    assert left == {w: 1}
    right = {}
    for lw, rw in coproduct_word(w, n):
        if counit_word(rw, n):
            right[lw] = right.get(lw, 0) + 1
    assert right == {w: 1}


def test_coproduct_generator():
    got = coproduct(NCPoly.gen(0, 1, 2), 2)
    # Delta(b) = a (x) b + b (x) d
    assert got == {((0,), (1,)): 1, ((1,), (3,)): 1}


def test_counit_poly():
    p = P({(0, 3): 2, (1, 2): 5, (): 7})  # 2*ad + 5*bc + 7
    assert counit(p, 2, F) == 9
