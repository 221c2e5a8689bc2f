import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from duoidal import ffield
from duoidal import vbase as vb


def test_finset_and_vspace_basics():
    x = vb.finset(["a", "b", "c"])
    assert x.size == 3 and x.label(1) == "b"
    assert vb.vspace(3, 2).elements() == [(1, 0), (0, 1)]
    assert vb.unit(vb.FINSET).size == 1 and vb.zero(vb.finvect(2)).size == 0
    with pytest.raises(ValueError):
        vb.finvect(4)
    with pytest.raises(ValueError):
        vb.finset(["a", "a"])


def test_base_kind_json_round_trip():
    for k in (vb.FINSET, vb.finvect(5)):
        assert vb.BaseKind.from_json(k.to_json()) == k


def test_map_validation_and_mixed_kinds():
    with pytest.raises(ValueError):
        vb.BaseMap(vb.finset(2), vb.finset(2), [0, 2])
    with pytest.raises(vb.KindMismatch):
        vb.BaseMap(vb.finset(1), vb.vspace(2, 1), [0])
    with pytest.raises(vb.NotParallel):
        vb.coequalizer(vb.identity(vb.finset(2)), vb.identity(vb.finset(3)))


def test_symmetric_monoidal_laws_of_the_base():
    for x, y, z in [(vb.finset(2), vb.finset(3), vb.finset(1)), (vb.vspace(2, 2), vb.vspace(2, 1), vb.vspace(2, 2))]:
        s = vb.symmetry(x, y)
        assert vb.compose(vb.symmetry(y, x), s) == vb.identity(vb.tensor(x, y))
        a = vb.associator(x, y, z)
        assert vb.is_invertible(a) is not None
        assert vb.compose(vb.left_unitor(x), vb.unitor_inverse(x, "left")) == vb.identity(x)
        assert vb.compose(vb.right_unitor(x), vb.unitor_inverse(x, "right")) == vb.identity(x)


def test_coequalizer_of_sets_identifies_orbits():
    f = vb.BaseMap(vb.finset(2), vb.finset(4), [0, 2])
    g = vb.BaseMap(vb.finset(2), vb.finset(4), [1, 3])
    q = vb.coequalizer(f, g)
    assert q.value.size == 2
    assert q.projection(0) == q.projection(1) != q.projection(2)
    bad = vb.BaseMap(vb.finset(4), vb.finset(2), [0, 1, 0, 0])
    with pytest.raises(vb.NotCoequalizing):
        q.factor(bad)


def test_vector_coequalizer_factor_uses_source_dimension():
    # regression: lifting used the quotient's dimension instead of the source's
    f = vb.BaseMap(vb.vspace(2, 1), vb.vspace(2, 3), [[1], [1], [0]])
    g = vb.BaseMap(vb.vspace(2, 1), vb.vspace(2, 3), [[0], [0], [0]])
    q = vb.coequalizer(f, g)
    h = vb.BaseMap(vb.vspace(2, 3), vb.vspace(2, 1), [[1, 1, 1]])
    u = q.factor(h)
    assert vb.compose(u, q.projection) == h


def test_equalizer_of_linear_maps_is_the_kernel():
    f = vb.BaseMap(vb.vspace(3, 3), vb.vspace(3, 1), [[1, 2, 0]])
    g = vb.BaseMap(vb.vspace(3, 3), vb.vspace(3, 1), [[0, 0, 0]])
    e = vb.equalizer(f, g)
    assert e.value.size == 2
    assert vb.compose(f, e.inclusion) == vb.compose(g, e.inclusion)


def test_internal_hom_of_sets_evaluates():
    ex = vb.internal_hom(vb.finset(2), vb.finset(3))
    assert ex.value.size == 9
    for code in range(9):
        fn = vb.decode_function(code, 2, 3)
        assert vb.encode_function(fn, 3) == code
        for j in range(2):
            assert ex.ev(code * 2 + j) == fn[j]


def test_budget_flag_and_floor(monkeypatch):
    with vb.budget_scope(300):
        vb.finset(300)
        with pytest.raises(vb.BudgetExceeded):
            vb.finset(301)
    with vb.budget_scope(10):
        vb.finset(vb.MIN_BUDGET)   # small values never trip the guard
    monkeypatch.setenv(vb.BUDGET_ENV, "500")
    assert vb.get_budget() == 500
    with pytest.raises(vb.BudgetExceeded):
        vb.internal_hom(vb.finset(3), vb.finset(9))


def test_union_find():
    uf = vb.UnionFind(5)
    uf.union(0, 3)
    uf.union(3, 4)
    assert uf.find(4) == uf.find(0) != uf.find(1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(1, 5), st.data())
def test_set_coequalizer_matches_relaxation_oracle(nx, ny, data):
    f = data.draw(st.lists(st.integers(0, ny - 1), min_size=nx, max_size=nx))
    g = data.draw(st.lists(st.integers(0, ny - 1), min_size=nx, max_size=nx))
    q = vb.coequalizer(vb.BaseMap(vb.finset(nx), vb.finset(ny), f),
                       vb.BaseMap(vb.finset(nx), vb.finset(ny), g))
    label = oracles.set_classes(ny, list(zip(f, g)))
    assert q.value.size == len(set(label))
    for a in range(ny):
        for b in range(ny):
            assert (q.projection(a) == q.projection(b)) == (label[a] == label[b])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.integers(1, 4), st.data())
def test_ffield_rank_and_nullspace(p, r, c, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    m = np.array(rows, dtype=np.int64)
    rk = ffield.rank(m, p)
    assert rk == oracles.rank_mod_p(m, p)
    ns = ffield.nullspace(m, p)
    assert ns.shape[1] == c - rk
    assert not np.any((m @ ns) % p)


def test_ffield_inverse_and_solve():
    a = np.array([[1, 2], [3, 4]])
    inv = ffield.inverse(a, 5)
    assert np.array_equal((a @ inv) % 5, np.eye(2, dtype=np.int64))
    assert ffield.inverse(np.array([[1, 2], [2, 4]]), 5) is None
    b = np.array([[1], [0]])
    x = ffield.solve(a, b, 5)
    assert np.array_equal((a @ x) % 5, b)
    assert ffield.is_prime(7) and not ffield.is_prime(9)
