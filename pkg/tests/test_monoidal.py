from itertools import product

import pytest

from duoidal import monoidal as mo
from duoidal import vbase as vb


@pytest.mark.parametrize("make", [lambda: mo.cartesian_sets(2), lambda: mo.tensor_vect(2, 2),
                                  lambda: mo.discrete_cyclic(4), mo.discrete_klein,
                                  lambda: mo.graded_z2(2), lambda: mo.idempotent_lax()[0]])
def test_standard_structures_are_monoidal(make):
    assert mo.validate_monoidal(make()).ok


def test_symmetries():
    m = mo.cartesian_sets(3)
    br = mo.cartesian_symmetry(m)
    assert mo.validate_braiding(br).ok and mo.is_symmetric(br)
    v = mo.tensor_vect(3, 2)
    assert mo.validate_braiding(mo.vect_symmetry(v)).ok


def test_lax_braiding_is_not_invertible():
    m, br = mo.idempotent_lax()
    assert mo.validate_braiding(br).ok
    assert not m.cat.is_iso(br(1, 1))
    strict = mo.Braiding(m, br.component)
    assert "iso" in mo.validate_braiding(strict).failed_axioms()


def test_identity_braiding_on_a_noncommutative_monoid_is_rejected():
    # discrete monoid {e, a, b} with xy = y (right zero) is not commutative
    table = [[0, 1, 2], [1, 1, 2], [2, 1, 2]]
    m = mo.discrete_monoidal(range(3), lambda x, y: table[x][y], 0)
    assert mo.validate_monoidal(m).ok
    assert "shape" in mo.validate_braiding(mo.identity_braiding(m)).failed_axioms()


def test_broken_associator_fails_pentagon():
    m = mo.graded_z2(1)
    s = m.cat.from_elem(0, 0, 1)
    bad = mo.MonoidalStructure(m.cat, m.tensor_obj, m.tensor_arr, 0, lambda a, b, c: s, m.lunit, m.runit)
    rep = mo.validate_monoidal(bad)
    assert "pentagon" in rep.failed_axioms() or "triangle" in rep.failed_axioms()


def _brute_force_monoids(n):
    out = 0
    for flat in product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if any(t[t[a][b]][c] != t[a][t[b][c]] for a, b, c in product(range(n), repeat=3)):
            continue
        out += sum(all(t[e][x] == x == t[x][e] for x in range(n)) for e in range(n))
    return out


def test_enumerate_monoids_matches_brute_force():
    m = mo.cartesian_sets(3)
    for n in (1, 2):
        assert len(mo.enumerate_monoids(m, n)) == _brute_force_monoids(n)
    with pytest.raises(vb.BudgetExceeded):
        mo.enumerate_monoids(m, 3)


def test_hom_monoidal_data():
    assert mo.hom_monoidal(mo.cartesian_sets(2)).validate().ok


def test_convolution_monoid_of_sets_is_function_monoid():
    m = mo.cartesian_sets(2)
    c = m.cat
    diag = mo.ComonoidObj(m, 2, c.fn(2, 4, [0, 3]), c.fn(2, 1, [0, 0]))
    z2 = mo.MonoidObj(m, 2, c.fn(4, 2, [0, 1, 1, 0]), c.fn(1, 2, [0]))
    cm = mo.convolution_monoid(diag, z2)
    assert cm.validate().ok and cm.is_commutative()
    # pointwise xor of functions 2 -> 2
    for f in range(4):
        for g in range(4):
            ff, gg = vb.decode_function(f, 2, 2), vb.decode_function(g, 2, 2)
            assert cm.product(f, g) == vb.encode_function([a ^ b for a, b in zip(ff, gg)], 2)


def test_linearized_structure():
    g = mo.discrete_cyclic(2)
    lm = mo.linearize_monoidal(g, 3)
    assert mo.validate_monoidal(lm).ok
    assert mo.validate_braiding(mo.linearize_braiding(mo.identity_braiding(g), lm)).ok
