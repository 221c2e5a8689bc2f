from itertools import product

import pytest

from duoidal import duoidal as du
from duoidal import hopf as hp
from duoidal import monoidal as mo
from duoidal import warp as wp
from duoidal.fincat import Arrow


@pytest.fixture(scope="module")
def z3():
    return mo.discrete_cyclic(3)


def test_identity_warping_reproduces_the_structure(z3):
    w = wp.identity_warping(z3)
    assert wp.validate_warping(w).ok
    assert wp.same_structure(wp.warp(w), z3).ok


def test_shift_warping_gives_the_shifted_sum(z3):
    w = wp.shift_warping(z3, 1, 2)
    assert wp.validate_warping(w).ok
    warped = wp.warp(w, check=True)
    assert warped.unit == 2
    for a, b in product(range(3), repeat=2):
        assert warped.tensor_obj(a, b) == (a + b + 1) % 3
    assert not wp.same_structure(warped, z3).ok


def test_shift_needs_an_inverse(z3):
    with pytest.raises(mo.StructureError):
        wp.shift_warping(z3, 1, 1)


def test_constant_warping_is_rejected(z3):
    # discrete: k has no arrow to pick; sets: k exists but cannot be invertible
    assert wp.validate_warping(wp.constant_warping(z3)).failed_axioms() == {"shape"}
    failed = wp.validate_warping(wp.constant_warping(mo.cartesian_sets(2))).failed_axioms()
    assert {"iso", "shape"} <= failed


def test_synthesized_warping_finds_the_inverse(z3):
    T = wp.shift_functor(z3, 1)
    w = wp.synthesize_warping(z3, T, lambda a, b: z3.cat.identity(z3.t(T(a), T(b))))
    assert w.K == 2
    assert wp.validate_warping(w).ok
    assert wp.same_structure(wp.warp(w), wp.warp(wp.shift_warping(z3, 1, 2))).ok


def test_warping_from_a_duoidal_structure():
    m = mo.cartesian_sets(2)
    br = mo.cartesian_symmetry(m)
    d = du.from_braided(m, br)
    wit = hp.braided_witness(d, br)
    w = wp.warping_from_duoidal(d, wit)
    assert w.K == d.J
    assert wp.validate_warping(w).ok
    rho = hp.consequences(d, wit, wit)["18-right"]
    assert wp.check_warp_iso(wp.warp(w), d.h, rho).ok
    # only half of the witness is enough
    half = hp.ClosednessWitness(ii_left=wit.ii_left, ii_right=wit.ii_right)
    assert wp.validate_warping(wp.warping_from_duoidal(d, half)).ok
    with pytest.raises(mo.StructureError):
        wp.warping_from_duoidal(d, None)


def test_warped_duoidal_from_identity_warping(z3):
    d = wp.duoidal_from_warped_lax_braided(z3, mo.identity_braiding(z3), wp.identity_warping(z3))
    assert du.validate_duoidal(d).ok
    m, br = mo.idempotent_lax()
    d = wp.duoidal_from_warped_lax_braided(m, br, wp.identity_warping(m))
    assert du.validate_duoidal(d).ok


def test_shift_warping_has_no_monoidal_structure(z3):
    rep = wp.warping_monoidality(wp.shift_warping(z3, 1, 2), mo.identity_braiding(z3))
    assert "T-monoidal" in rep.failed_axioms()
    with pytest.raises(mo.StructureError) as info:
        wp.duoidal_from_warped_lax_braided(z3, mo.identity_braiding(z3), wp.shift_warping(z3, 1, 2))
    assert "T-monoidal" in info.value.report.failed_axioms()


def test_odd_counit_breaks_monoidality():
    g = mo.graded_z2(1)
    base = wp.identity_warping(g)
    s = Arrow(0, 0, 1)
    w = wp.WarpingData(g, base.T, base.K, base.v, s, lambda A: s, phi=base.phi, phi0=base.phi0,
                       k_mult=base.k_mult, k_unit=base.k_unit)
    assert wp.validate_warping(w).ok
    failed = wp.warping_monoidality(w, mo.identity_braiding(g)).failed_axioms()
    assert {"k-monoidal", "v0-monoid"} <= failed


def test_structures_must_match(z3):
    other = mo.discrete_cyclic(3)
    with pytest.raises(mo.StructureError):
        wp.duoidal_from_warped_lax_braided(other, mo.identity_braiding(z3), wp.identity_warping(z3))
