import pytest
from gmpy2 import mpq

from qfa.frt import FrtPresentation, HayashiMap, RForm
from qfa.ncpoly import NCPoly, gen_id, parse_word
from qfa.nichols import NicholsData, WgfData
from qfa.scalars import ScalarField
from qfa.settheoretic import (
    Cocycle,
    Rack,
    SetSolution,
    closed_form_conjugation,
    closed_form_pairing,
    linearize,
    validate,
    volume_coefficients,
)

from test_braiding import (
    _triple_image,
    involutive_pair_braiding,
    involutive_triple_braiding,
    involutive_triple_sibling_braiding,
    neg_flip,
    transposition_rack_braiding,
)
from test_frt import TRIPLE_RELATIONS, pair_rel

F1 = ScalarField(1)

PAIR_IMG = {(0, 0): (1, 1), (1, 1): (0, 0), (0, 1): (0, 1), (1, 0): (1, 0)}


def pair_solution():
    return SetSolution.from_map(2, lambda i, j: PAIR_IMG[(i, j)])


def triple_solution(pair_block_fixed):
    img = _triple_image(pair_block_fixed)
    return SetSolution.from_map(3, lambda i, j: img[(i, j)])


def transposition_rack():
    return Rack(((0, 2, 1), (2, 1, 0), (1, 0, 2)))


def determinant_word_sum(wgf, n):
    """D as a word sum over the free algebra, straight from the volume
    coefficients (the determinant module recomputes this via coactions)."""
    w0 = wgf.volume_word
    terms = {}
    for K, a in wgf.nonzero_alpha().items():
        terms[tuple(gen_id(w0[s], K[s], n) for s in range(len(w0)))] = a
    return NCPoly(terms)


def test_validate_involutive_solutions():
    for sol in (pair_solution(), triple_solution(True), triple_solution(False)):
        rep = validate(sol, Cocycle.constant(sol.n, mpq(-1)))
        assert rep.ok and rep.involutive and rep.nondegenerate


def test_validate_rack():
    rep = validate(transposition_rack(), Cocycle.constant(3, mpq(-1)))
    assert rep.ok and rep.nondegenerate
    assert not rep.involutive  # conjugation solution has s(x,x) = (x,x) only


def test_validate_reports_braid_failure():
    img = {(0, 0): (0, 0), (0, 1): (0, 0), (1, 0): (0, 0), (1, 1): (0, 1)}
    sol = SetSolution.from_map(2, lambda i, j: img[(i, j)])
    assert sol.braid_failure() == (1, 1, 1)
    rep = validate(sol)
    assert not rep.ok and "braid" in rep.failures[0]


def test_validate_reports_rack_failures():
    assert Rack(((0, 0, 2), (0, 1, 2), (0, 1, 2))).axiom_failure() \
        == "row 0 is not a permutation"
    broken = Rack(((1, 0, 2), (0, 1, 2), (0, 1, 2)))  # rows fine, not s-d
    assert broken.axiom_failure() is not None
    rep = validate(broken)
    assert not rep.ok
    # non-constant weight table violating the compatibility identity
    rack = transposition_rack()
    q = Cocycle(3, lambda i, j: mpq(2) if (i, j) == (0, 1) else mpq(1))
    assert q.rack_identity_failure(rack) is not None
    assert validate(rack, q).failures


def test_constant_weight_always_compatible():
    # both sides of the identity reduce to q^2
    rack = transposition_rack()
    for q in (mpq(-1), mpq(3), mpq(1, 2)):
        assert Cocycle.constant(3, q).rack_identity_failure(rack) is None


def test_zero_weight_rejected():
    with pytest.raises(ValueError):
        Cocycle(2, [[mpq(1), mpq(0)], [mpq(1), mpq(1)]])


def test_linearize_matches_shared_constructors():
    assert linearize(pair_solution(), Cocycle.constant(2, mpq(-1)),
                     F1) == involutive_pair_braiding()
    assert linearize(transposition_rack().solution(),
                     Cocycle.constant(3, mpq(-1)),
                     F1) == transposition_rack_braiding()
    assert linearize(triple_solution(False), Cocycle.constant(3, mpq(-1)),
                     F1) == involutive_triple_braiding()
    assert linearize(triple_solution(True), Cocycle.constant(3, mpq(-1)),
                     F1) == involutive_triple_sibling_braiding()


def test_nondegeneracy_matches_rigidity():
    cases = [pair_solution(), transposition_rack().solution(),
             triple_solution(True), triple_solution(False)]
    # a degenerate solution: everything collapses onto one pair
    cases.append(SetSolution.from_map(2, lambda i, j: (1, 1)))
    for sol in cases:
        assert sol.braid_failure() is None
        c = linearize(sol, Cocycle.constant(sol.n, mpq(1)), F1)
        assert c.check_rigid()[0] == sol.is_nondegenerate()


def _check_pairing_against_generic(sol, c, wgf):
    rf = RForm(c)
    D = determinant_word_sum(wgf, sol.n)
    cf = closed_form_pairing(sol, Cocycle.constant(sol.n, mpq(-1)), wgf)
    for a in range(sol.n):
        for b in range(sol.n):
            generic = rf.eval_polys(D, NCPoly.gen(a, b, sol.n, c.field.one))
            assert cf(a, b) == generic


def _check_conjugation_against_generic(sol, c, wgf):
    frt = FrtPresentation(c)
    rf = RForm(c)
    D = determinant_word_sum(wgf, sol.n)
    h = HayashiMap(frt, rf, D)
    table = closed_form_conjugation(sol, Cocycle.constant(sol.n, mpq(-1)), wgf)
    assert len(table) == sol.n * sol.n  # no vanishing source coefficients here
    for (u, v), (coeff, (a, b)) in table.items():
        assert NCPoly.term((gen_id(a, b, sol.n),), coeff) == h.apply_gen(u, v)
    return table


def test_closed_forms_pair():
    sol = pair_solution()
    c = involutive_pair_braiding()
    nd = NicholsData(c)
    wgf = WgfData(nd, nd.detect_top())
    assert wgf.volume_word == (0, 0)
    _check_pairing_against_generic(sol, c, wgf)
    table = _check_conjugation_against_generic(sol, c, wgf)
    # central determinant: conjugation fixes every generator
    assert all(val == (1, key) for key, val in table.items())


def test_closed_forms_rack():
    sol = transposition_rack().solution()
    c = transposition_rack_braiding()
    nd = NicholsData(c)
    wgf = WgfData(nd, nd.detect_top(), volume_word=(0, 1, 2, 1))
    cf = closed_form_pairing(sol, Cocycle.constant(3, mpq(-1)), wgf)
    for a in range(3):
        for b in range(3):
            assert cf(a, b) == (F1.one if a == b else F1.zero)
    _check_pairing_against_generic(sol, c, wgf)
    table = _check_conjugation_against_generic(sol, c, wgf)
    assert all(val == (1, key) for key, val in table.items())


def test_closed_forms_triple():
    sol = triple_solution(False)
    c = involutive_triple_braiding()
    nd = NicholsData(c)
    wgf = WgfData(nd, nd.detect_top())
    assert wgf.volume_word == (0, 1, 1)
    _check_pairing_against_generic(sol, c, wgf)
    table = _check_conjugation_against_generic(sol, c, wgf)
    # unsigned column/row swap 2 <-> 3 on both indices
    swap = {0: 0, 1: 2, 2: 1}
    for (u, v), (coeff, out) in table.items():
        assert coeff == 1 and out == (swap[u], swap[v])


def test_closed_forms_triple_sibling():
    sol = triple_solution(True)
    c = involutive_triple_sibling_braiding()
    nd = NicholsData(c)
    wgf = WgfData(nd, nd.detect_top())
    assert wgf.volume_word == (0, 1, 2)
    _check_pairing_against_generic(sol, c, wgf)
    table = _check_conjugation_against_generic(sol, c, wgf)
    # same swap, but four entries pick up a sign: the b, c, d, g slots
    assert table[(0, 1)] == (-1, (0, 2))
    assert table[(0, 2)] == (-1, (0, 1))
    assert table[(1, 0)] == (-1, (2, 0))
    assert table[(2, 0)] == (-1, (1, 0))
    assert table[(1, 2)] == (1, (2, 1))
    assert table[(0, 0)] == (1, (0, 0))


def test_conjugation_needs_constant_weight():
    sol = pair_solution()
    c = involutive_pair_braiding()
    nd = NicholsData(c)
    wgf = WgfData(nd, nd.detect_top())
    q = Cocycle(2, lambda i, j: mpq(2) if i == j else mpq(1))
    with pytest.raises(ValueError):
        closed_form_conjugation(sol, q, wgf)


def test_volume_coefficients_rack():
    nd = NicholsData(transposition_rack_braiding())
    wgf = WgfData(nd, nd.detect_top(), volume_word=(0, 1, 2, 1))
    alpha = volume_coefficients(wgf)
    assert alpha[(0, 1, 2, 1)] == 1
    assert alpha[(0, 1, 0, 2)] == -1
    assert alpha[(0, 1, 2, 0)] == 0
    assert len(alpha) == 81
    nonzero = {w for w, a in alpha.items() if a}
    assert len(nonzero) == 12
    # every nonzero coefficient is a sign
    assert all(alpha[w] in (1, -1) for w in nonzero)


def test_volume_coefficients_negated_flip_are_permutation_signs():
    nd = NicholsData(neg_flip(3))
    wgf = WgfData(nd, nd.detect_top())
    alpha = volume_coefficients(wgf)
    assert wgf.volume_word == (0, 1, 2)
    sign = {(0, 1, 2): 1, (0, 2, 1): -1, (1, 0, 2): -1,
            (1, 2, 0): 1, (2, 0, 1): 1, (2, 1, 0): -1}
    for w, a in alpha.items():
        assert a == sign.get(w, 0)


def _involutions(points):
    if not points:
        yield {}
        return
    first, rest = points[0], points[1:]
    for m in _involutions(rest):
        yield {first: first, **m}
    for idx, other in enumerate(rest):
        for m in _involutions(rest[:idx] + rest[idx + 1:]):
            yield {first: other, other: first, **m}


def test_involutive_triples_classified_by_relations():
    """Among all involutive nondegenerate 3-element solutions, exactly one
    generates the frozen 36-relation quadratic ideal: the repeated-pair
    swapping variant.  (Certificate for which solution the relation list
    belongs to; its verbal sibling generates a different ideal.)"""
    pairs = [(i, j) for i in range(3) for j in range(3)]
    solutions = []
    for m in _involutions(pairs):
        sol = SetSolution.from_map(3, lambda i, j: m[(i, j)])
        if sol.is_nondegenerate() and sol.braid_failure() is None:
            solutions.append(sol)
    assert len(solutions) == 12
    target = [pair_rel(a, b, 3) for a, b in TRIPLE_RELATIONS]
    matching = [
        sol for sol in solutions
        if FrtPresentation(
            linearize(sol, Cocycle.constant(3, mpq(-1)), F1)
        ).same_ideal_as(target)
    ]
    assert len(matching) == 1
    assert matching[0] == triple_solution(False)