import pytest

from duoidal import duoidal as du
from duoidal import monoidal as mo
from duoidal import tannaka as tk
from duoidal import vbase as vb


def _involutions(n):
    # a(n) = a(n-1) + (n-1) a(n-2)
    a = [1, 1]
    for k in range(2, n + 1):
        a.append(a[-1] + (k - 1) * a[-2])
    return a[n]


@pytest.fixture(scope="module")
def setup():
    m = mo.cartesian_sets(4)
    d = du.from_braided(m, mo.cartesian_symmetry(m))
    z2 = du.cartesian_bimonoid(d, [[0, 1], [1, 0]], name="Z/2")
    return d, z2


def test_module_enumeration_matches_involution_count(setup):
    d, z2 = setup
    for n in range(3):
        assert len(tk.enumerate_modules(d, z2.monoid(), n)) == _involutions(n)
    with pytest.raises(vb.BudgetExceeded):
        tk.enumerate_modules(d, z2.monoid(), 3)


def test_regular_and_trivial_modules(setup):
    d, z2 = setup
    assert tk.is_module(d, z2.monoid(), tk.regular_module(d, z2.monoid()))
    assert tk.is_module(d, z2.monoid(), tk.trivial_module(d, z2.monoid(), 2))
    c = d.cat
    bad = tk.ModuleObject(2, c.fn(4, 2, [1, 0, 0, 1]))
    assert "unit" in tk.module_report(d, z2.monoid(), bad).failed_axioms()


def test_module_category_is_a_category(setup):
    d, z2 = setup
    mc = tk.build_module_category(d, z2.monoid(), carriers=[0, 1, 2])
    assert len(mc.objects) == 4
    from duoidal.fincat import validate_category
    assert validate_category(mc).ok


def test_end_recovers_the_monoid(setup):
    d, z2 = setup
    mc = tk.build_module_category(d, z2.monoid(), carriers=[0, 1, 2])
    end = tk.end_of_representable(mc)
    assert end.report.ok
    assert end.endo.carrier.size == end.points.carrier.size == 2
    assert vb.is_invertible(end.comparison) is not None


def test_enriched_hom_counts_equivariant_maps(setup):
    d, z2 = setup
    mc = tk.build_module_category(d, z2.monoid(), carriers=[0, 1, 2])
    point = tk.trivial_module(d, z2.monoid(), 1)
    reg = tk.regular_module(d, z2.monoid())
    e, incl = tk.enriched_hom(mc, point, tk.trivial_module(d, z2.monoid(), 2))
    assert e == 2 and incl.tgt == 2
    # the regular action has no fixed points
    assert tk.enriched_hom(mc, point, reg)[0] == 0
    # [A * M, B] has 16 elements, beyond the declared objects
    assert tk.enriched_hom(mc, reg, reg) is None


def test_lift_extract_round_trip(setup):
    d, z2 = setup
    mc = tk.build_module_category(d, z2.monoid(), carriers=[0, 1, 2])
    lifted = tk.lift_bimonoid_to_monoidal(z2, mc)
    assert tk.validate_lifted(lifted).ok
    back = tk.extract_bimonoid_from_monoidal(lifted)
    assert back.tables() == z2.tables()
    assert tk.compare_lifts(lifted, tk.lift_bimonoid_to_monoidal(back, mc)).ok


def test_first_factor_lift_is_monoidal_but_not_a_bimonoid_lift(setup):
    d, z2 = setup
    mc = tk.build_module_category(d, z2.monoid(), carriers=[0, 1, 2])
    twisted = tk.first_factor_lift(mc)
    rep = tk.validate_lifted(twisted)
    assert not rep.ok and "module" in rep.failed_axioms()


def test_restriction_along_the_unit(setup):
    d, z2 = setup
    unit = du.unit_bimonoid(d)
    mz = tk.build_module_category(d, z2.monoid(), carriers=[0, 1, 2])
    mu = tk.build_module_category(d, unit.monoid(), carriers=[0, 1, 2])
    r = tk.mod_of_morphism(z2.unit, mz, mu)
    assert tk.restriction_triangle(r).ok
