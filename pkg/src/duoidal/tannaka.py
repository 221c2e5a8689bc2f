"""Module categories over monoids in the horizontal structure, and the
correspondence between bimonoid structures on M and monoidal structures on
the category of right M-modules lifting the vertical tensor.

Module categories are realized as underlying V-categories: the hom from
(A, alpha) to (B, beta) is the equalizer, inside F(A, B), of
f -> f . alpha and f -> beta . (f * 1).  When internal homs exist the same
equalizer can be formed inside [A, B] (:func:`enriched_hom`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

import numpy as np

from . import ffield
from . import vbase as vb
from .duoidal import Bimonoid, DuoidalStructure, validate_bimonoid
from .fincat import Arrow, CategoryError, FinCat, TensorCategory, VFunctor, extend
from .monoidal import (BaseMonoid, MonoidalStructure, MonoidObj, StructureError, validate_monoid,
                       validate_monoidal)
from .report import Report

ENUMERATION_LIMIT = 64


# internal homs --------------------------------------------------------------------

@dataclass(eq=False)
class InternalHom:
    """[y, z] with ev: [y, z] * y -> z, universal against the declared objects."""

    structure: MonoidalStructure
    y: object
    z: object
    obj: object
    ev: Arrow

    def transpose_map(self, w) -> vb.BaseMap:
        """F(w, [y, z]) -> F(w * y, z), g -> ev . (g * 1)."""
        m = self.structure
        c = m.cat
        src, tgt = c.hom(w, self.obj), c.hom(m.t(w, self.y), self.z)
        iy = c.identity(self.y)
        return vb.from_function(src, tgt, lambda e: c.elem(c.compose(self.ev, m.t(c.from_elem(w, self.obj, e), iy))))

    def curry(self, w, f: Arrow) -> Arrow:
        """The unique g: w -> [y, z] with ev . (g * 1) = f: w * y -> z."""
        c = self.structure.cat
        inv = vb.is_invertible(self.transpose_map(w))
        if inv is None:
            raise StructureError("%r is not universal against %r" % (self.obj, w))
        return c.from_elem(w, self.obj, inv(c.elem(f)))

    def to_json(self):
        return {"y": self.y, "z": self.z, "obj": self.obj, "ev": self.ev.to_json()}


def internal_hom_search(h: MonoidalStructure, y, z, candidates: Sequence | None = None,
                        test_objects: Sequence | None = None) -> InternalHom | None:
    """Search candidate objects X and counits ev: X * y -> z representing F(- * y, z)."""
    c = h.cat
    cands = list(c.objects if candidates is None else candidates)
    tests = list(c.objects if test_objects is None else test_objects)
    for x in cands:
        # sizes must match before any counit is tried
        if any(c.hom(w, x).size != c.hom(h.t(w, y), z).size for w in tests):
            continue
        for ev in c.arrows(h.t(x, y), z):
            ih = InternalHom(h, y, z, x, ev)
            if all(vb.is_invertible(ih.transpose_map(w)) is not None for w in tests):
                return ih
    return None


# modules ------------------------------------------------------------------------

@dataclass(frozen=True)
class ModuleObject:
    """A right M-module (A, alpha: A * M -> A)."""

    carrier: object
    action: Arrow

    def to_json(self):
        from .report import describe
        return {"carrier": describe(self.carrier), "action": describe(self.action.val)}


def module_report(d: DuoidalStructure, monoid: MonoidObj, x: ModuleObject) -> Report:
    h, c = d.h, d.cat
    A, M, al = x.carrier, monoid.carrier, x.action
    rep = Report("module")
    typed = al.src == h.t(A, M) and al.tgt == A
    rep.check("typed", "shape", typed, carrier=A)
    if not typed:
        return rep
    iA, iM = c.identity(A), c.identity(M)
    rep.check("action-unit", "unit", c.compose(al, h.t(iA, monoid.unit)) == h.runit(A), carrier=A)
    lhs = c.compose(al, h.t(al, iM))
    rhs = c.compose_all(al, h.t(iA, monoid.mult), h.assoc(A, M, M))
    rep.check("action-assoc", "assoc", lhs == rhs, carrier=A)
    return rep


def is_module(d: DuoidalStructure, monoid: MonoidObj, x: ModuleObject) -> bool:
    return module_report(d, monoid, x).ok


def enumerate_modules(d: DuoidalStructure, monoid: MonoidObj, carrier,
                      limit: int = ENUMERATION_LIMIT) -> list[ModuleObject]:
    """Every right module structure on ``carrier`` (hom sizes <= limit)."""
    c, h = d.cat, d.h
    src = h.t(carrier, monoid.carrier)
    if c.hom(src, carrier).size > limit:
        raise vb.BudgetExceeded("module enumeration over %d candidate actions"
                                % c.hom(src, carrier).size)
    return [ModuleObject(carrier, al) for al in c.arrows(src, carrier)
            if is_module(d, monoid, ModuleObject(carrier, al))]


def regular_module(d: DuoidalStructure, monoid: MonoidObj) -> ModuleObject:
    return ModuleObject(monoid.carrier, monoid.mult)


def trivial_module(d: DuoidalStructure, monoid: MonoidObj, carrier) -> ModuleObject:
    """(A, r . (1 * eps)) for a monoid with a point-free counit; here: the action through J."""
    h, c = d.h, d.cat
    eps = _unique_arrow(c, monoid.carrier, h.unit)
    return ModuleObject(carrier, c.compose(h.runit(carrier), h.t(c.identity(carrier), eps)))


def _unique_arrow(c: FinCat, a, b) -> Arrow:
    gens = c.generators(a, b)
    if c.base.is_set and len(gens) == 1:
        return gens[0]
    raise StructureError("no canonical arrow %r -> %r" % (a, b))


class ModuleCategory(FinCat):
    """Right modules over a monoid in the horizontal structure.

    Arrows carry the underlying arrow's ``val``; ``elem`` indexes the
    equalizer subobject of F(A, B).
    """

    def __init__(self, d: DuoidalStructure, monoid: MonoidObj, objects: Sequence[ModuleObject],
                 name: str = "", check: bool = True):
        self.d = d
        self.monoid = monoid
        self.base = d.cat.base
        self.objects = list(objects)
        self.name = name or "Mod(%s)" % (monoid.name or monoid.carrier,)
        self._homs: dict = {}
        if check:
            for x in self.objects:
                rep = module_report(d, monoid, x)
                if not rep.ok:
                    raise StructureError("not a module: %r (%s)" % (x, sorted(rep.failed_axioms())))

    @property
    def underlying(self) -> FinCat:
        return self.d.cat

    def has_object(self, a) -> bool:
        return isinstance(a, ModuleObject)

    def pair_maps(self, x: ModuleObject, y: ModuleObject) -> tuple[vb.BaseMap, vb.BaseMap]:
        """The parallel pair F(A, B) -> F(A * M, B) whose equalizer is the hom."""
        c, h = self.d.cat, self.d.h
        A, B, M = x.carrier, y.carrier, self.monoid.carrier
        src, tgt = c.hom(A, B), c.hom(h.t(A, M), B)
        iM = c.identity(M)

        def pre(e):
            return c.elem(c.compose(c.from_elem(A, B, e), x.action))

        def post(e):
            return c.elem(c.compose(y.action, h.t(c.from_elem(A, B, e), iM)))
        return vb.from_function(src, tgt, pre), vb.from_function(src, tgt, post)

    def subobject(self, x: ModuleObject, y: ModuleObject) -> vb.Subobject:
        key = (x, y)
        s = self._homs.get(key)
        if s is None:
            s = self._homs[key] = vb.equalizer(*self.pair_maps(x, y))
        return s

    def hom(self, a, b) -> vb.BaseValue:
        return self.subobject(a, b).value

    def forget(self, f: Arrow) -> Arrow:
        return Arrow(f.src.carrier, f.tgt.carrier, f.val)

    def wrap(self, x: ModuleObject, y: ModuleObject, f: Arrow) -> Arrow:
        return Arrow(x, y, f.val)

    def is_module_map(self, x: ModuleObject, y: ModuleObject, f: Arrow) -> bool:
        c, h = self.d.cat, self.d.h
        if f.src != x.carrier or f.tgt != y.carrier:
            return False
        iM = c.identity(self.monoid.carrier)
        return c.compose(f, x.action) == c.compose(y.action, h.t(f, iM))

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise CategoryError("cannot compose module maps")
        u = self.d.cat.compose(self.forget(g), self.forget(f))
        return Arrow(f.src, g.tgt, u.val)

    def identity(self, a) -> Arrow:
        return Arrow(a, a, self.d.cat.identity(a.carrier).val)

    def elem(self, f: Arrow):
        c = self.d.cat
        e = c.elem(self.forget(f))
        inc = self.subobject(f.src, f.tgt).inclusion
        if self.base.is_set:
            try:
                return inc.data.index(e)
            except ValueError:
                raise CategoryError("arrow is not a module map") from None
        x = ffield.solve(np.asarray(inc.data), vb.as_vec(e), self.base.p)
        if x is None:
            raise CategoryError("arrow is not a module map")
        return tuple(int(v) for v in x[:, 0])

    def from_elem(self, a, b, e) -> Arrow:
        u = self.subobject(a, b).inclusion(e)
        return Arrow(a, b, self.d.cat.from_elem(a.carrier, b.carrier, u).val)

    def inverse(self, f: Arrow) -> Arrow | None:
        inv = self.d.cat.inverse(self.forget(f))
        return None if inv is None else Arrow(f.tgt, f.src, inv.val)

    def forgetful(self) -> VFunctor:
        """U_M: forgets the action."""
        return VFunctor(self, self.d.cat, lambda x: x.carrier, self.forget, name="U")


def build_module_category(d: DuoidalStructure, monoid: MonoidObj, carriers: Sequence | None = None,
                          objects: Sequence[ModuleObject] | None = None,
                          limit: int = ENUMERATION_LIMIT) -> ModuleCategory:
    """Modules on the given carriers (enumerated) or an explicit object list."""
    rep = validate_monoid(monoid)
    if not rep.ok:
        raise StructureError("not a monoid: %s" % sorted(rep.failed_axioms()))
    if objects is None:
        carriers = d.cat.objects if carriers is None else carriers
        objects = [x for a in carriers for x in enumerate_modules(d, monoid, a, limit)]
    return ModuleCategory(d, monoid, objects)


def enriched_hom(mc: ModuleCategory, x: ModuleObject, y: ModuleObject) -> tuple | None:
    """The hom object of F^{*M} as an equalizer inside [A, B] (horizontal internal homs).

    Returns (E, e: E -> [A, B]) or None if some internal hom or the equalizer
    is not found among the declared objects.
    """
    d = mc.d
    h, c = d.h, d.cat
    A, B, M = x.carrier, y.carrier, mc.monoid.carrier
    ab = internal_hom_search(h, A, B)
    amb = internal_hom_search(h, h.t(A, M), B)
    if ab is None or amb is None:
        return None
    X = ab.obj
    # [A,B] * (A*M) -> B in the two ways, then curried
    ia = h.assoc_inv(X, A, M)
    p1 = c.compose(ab.ev, h.t(c.identity(X), x.action))
    p2 = c.compose_all(y.action, h.t(ab.ev, c.identity(M)), ia)
    q1, q2 = amb.curry(X, p1), amb.curry(X, p2)
    for E in c.objects:
        for e in c.arrows(E, X):
            if c.compose(q1, e) != c.compose(q2, e):
                continue
            if _is_equalizer(c, e, q1, q2):
                return E, e
    return None


def _is_equalizer(c: FinCat, e: Arrow, q1: Arrow, q2: Arrow) -> bool:
    for w in c.objects:
        src = c.hom(w, e.src)
        post = vb.from_function(src, c.hom(w, e.tgt), lambda k: c.elem(c.compose(e, c.from_elem(w, e.src, k))))
        f1 = vb.from_function(c.hom(w, e.tgt), c.hom(w, q1.tgt),
                              lambda k: c.elem(c.compose(q1, c.from_elem(w, e.tgt, k))))
        f2 = vb.from_function(c.hom(w, e.tgt), c.hom(w, q2.tgt),
                              lambda k: c.elem(c.compose(q2, c.from_elem(w, e.tgt, k))))
        eq = vb.equalizer(f1, f2)
        if eq.value.size != src.size:
            return False
        try:
            fac = eq.factor(post)
        except vb.NotCoequalizing:
            return False
        except ValueError:
            return False
        if vb.is_invertible(fac) is None:
            return False
    return True


# restriction and the tensor of monoids ---------------------------------------------------

def mod_of_morphism(f: Arrow, target: ModuleCategory, source: ModuleCategory) -> VFunctor:
    """Restriction along f: N -> M, from modules over M to modules over N."""
    d = target.d
    c, h = d.cat, d.h
    if f.src != source.monoid.carrier or f.tgt != target.monoid.carrier:
        raise StructureError("morphism does not match the module categories")

    def obj(x: ModuleObject) -> ModuleObject:
        return ModuleObject(x.carrier, c.compose(x.action, h.t(c.identity(x.carrier), f)))
    return VFunctor(target, source, obj, lambda g: Arrow(obj(g.src), obj(g.tgt), g.val), name="mod f")


def restriction_triangle(r: VFunctor, objects: Sequence | None = None) -> Report:
    """U_N . mod f = U_M, on objects and on every generator."""
    mm, mn = r.source, r.target
    rep = Report("restriction triangle")
    objs = list(mm.objects if objects is None else objects)
    for x in objs:
        rx = r(x)
        rep.check("is-module", "module", is_module(mn.d, mn.monoid, rx), object=x)
        rep.check("objects", "triangle", rx.carrier == x.carrier, object=x)
    for x, y in product(objs, repeat=2):
        for g in mm.generators(x, y):
            rep.check("arrows", "triangle", mn.forget(r(g)) == mm.forget(g), objects=(x, y))
    return rep


def monoid_circ(d: DuoidalStructure, m: MonoidObj, n: MonoidObj) -> MonoidObj:
    """M o N with multiplication (mu o mu) . gamma and unit (eta o eta) . delta."""
    c = d.cat
    M, N = m.carrier, n.carrier
    mult = c.compose(d.circ(m.mult, n.mult), d.gamma(M, N, M, N))
    unit = c.compose(d.circ(m.unit, n.unit), d.delta)
    return MonoidObj(d.h, d.circ(M, N), mult, unit, name="(%s o %s)" % (m.name, n.name))


def _same_monoid(a: MonoidObj, b: MonoidObj) -> bool:
    return a.carrier == b.carrier and a.mult == b.mult and a.unit == b.unit


def phi_object(d: DuoidalStructure, m: MonoidObj, n: MonoidObj, x: ModuleObject, y: ModuleObject) -> ModuleObject:
    c = d.cat
    act = c.compose(d.circ(x.action, y.action), d.gamma(x.carrier, y.carrier, m.carrier, n.carrier))
    return ModuleObject(d.circ(x.carrier, y.carrier), act)


def phi_monoidal(mm: ModuleCategory, mn: ModuleCategory, mmn: ModuleCategory) -> VFunctor:
    """Phi: Mod(M) (x) Mod(N) -> Mod(M o N), (A, a), (B, b) -> (A o B, (a o b) . gamma)."""
    d = mm.d
    if mn.d is not d or mmn.d is not d:
        raise StructureError("module categories over different duoidal structures")
    if not _same_monoid(mmn.monoid, monoid_circ(d, mm.monoid, mn.monoid)):
        raise StructureError("target module category is not over M o N")
    src = TensorCategory(mm, mn)
    c = d.cat

    def obj(o):
        return phi_object(d, mm.monoid, mn.monoid, o[0], o[1])

    def gen(hh):
        (_, f, g), = src.components(hh)
        u = d.circ(mm.forget(f), mn.forget(g))
        return Arrow(obj(hh.src), obj(hh.tgt), u.val)

    def arr(h):
        return extend(mmn, obj(h.src), obj(h.tgt), gen, (src, h))
    return VFunctor(src, mmn, obj, arr, name="Phi")


def phi_square(phi: VFunctor, objects: Sequence | None = None) -> Report:
    """U_{MoN} . Phi = o . (U_M x U_N), exactly."""
    src = phi.source
    d = phi.target.d
    rep = Report("Phi square")
    objs = list(src.objects if objects is None else objects)
    for o in objs:
        p = phi(o)
        rep.check("is-module", "module", is_module(d, phi.target.monoid, p), object=o)
        rep.check("objects", "(13)", p.carrier == d.circ(o[0].carrier, o[1].carrier), object=o)
    for o1, o2 in product(objs, repeat=2):
        for hh in src.generators(o1, o2):
            (_, f, g), = src.components(hh)
            ok = phi.target.forget(phi(hh)) == d.circ(src.a.forget(f), src.b.forget(g))
            rep.check("arrows", "(13)", ok, objects=(o1, o2))
    return rep


# the end of the forgetful functor ---------------------------------------------------------

@dataclass(eq=False)
class EndResult:
    """End of U_M computed through its representing object (M, mu)."""

    representing: ModuleObject
    endo: BaseMonoid
    points: BaseMonoid
    comparison: vb.BaseMap
    monoid: MonoidObj | None
    report: Report = field(default_factory=Report)


def points_monoid(d: DuoidalStructure, m: MonoidObj) -> BaseMonoid:
    """F(J, M) with u . v = mu . (u * v) . l^{-1}_J."""
    h, c = d.h, d.cat
    J, M = h.unit, m.carrier
    P = c.hom(J, M)
    lj = h.lunit_inv(J)

    def fn(e):
        i, j = vb.split_element(c.base, e, P.size)
        u, v = c.from_elem(J, M, i), c.from_elem(J, M, j)
        return c.elem(c.compose_all(m.mult, h.t(u, v), lj))
    if c.base.is_set:
        mult = vb.from_function(vb.tensor(P, P), P, fn)
    else:
        raise StructureError("points monoid needs a set-enriched carrier")
    return BaseMonoid(P, mult, vb.constant_point(P, c.elem(m.unit)))


def end_of_representable(mc: ModuleCategory) -> EndResult:
    d, m = mc.d, mc.monoid
    h, c = d.h, d.cat
    if not c.base.is_set:
        raise StructureError("end computation is implemented for set-enriched carriers")
    R = regular_module(d, m)
    rep = Report("end of U")
    mrep = module_report(d, m, R)
    rep.merge(mrep, "regular/")
    if not mrep.ok:
        raise StructureError("representing object not found: (M, mu) is not a module")
    J, M = h.unit, m.carrier
    # representability: Mod(R, X) -> F(J, UX), f -> f . eta
    for x in mc.objects:
        yon = vb.from_function(mc.hom(R, x), c.hom(J, x.carrier),
                               lambda e, x=x: c.elem(c.compose(mc.forget(mc.from_elem(R, x, e)), m.unit)))
        rep.check("representable", "yoneda", vb.is_invertible(yon) is not None, object=x)
    E = mc.hom(R, R)
    comp = mc.comp_map(R, R, R)
    endo = BaseMonoid(E, comp, vb.constant_point(E, mc.elem(mc.identity(R))))
    pts = points_monoid(d, m)
    li = h.lunit_inv(M)
    iM = c.identity(M)

    def theta(e):
        u = c.from_elem(J, M, e)
        left = c.compose_all(m.mult, h.t(u, iM), li)
        return mc.elem(Arrow(R, R, left.val))
    cmp = vb.from_function(pts.carrier, E, theta)
    rep.check("bijective", "iso", vb.is_invertible(cmp) is not None)
    hom_ok = (vb.compose(cmp, pts.mult) == vb.compose(endo.mult, vb.tensor(cmp, cmp))
              and vb.compose(cmp, pts.unit) == endo.unit)
    rep.check("multiplicative", "monoid-morphism", hom_ok)
    recovered = _recover_monoid(d, m, endo, cmp) if rep.ok else None
    if recovered is not None:
        vr = validate_monoid(recovered)
        rep.merge(vr, "recovered/")
        rep.check("equals-input", "counit", _same_monoid(recovered, m))
    else:
        rep.check("recovered", "well-pointed", False)
    return EndResult(R, endo, pts, cmp, recovered, rep)


def _recover_monoid(d: DuoidalStructure, m: MonoidObj, endo: BaseMonoid, cmp: vb.BaseMap) -> MonoidObj | None:
    """Transport the endomorphism monoid back to an arrow M * M -> M, determined on points."""
    h, c = d.h, d.cat
    J, M = h.unit, m.carrier
    inv = vb.is_invertible(cmp)
    n = c.hom(J, M).size
    lj = h.lunit_inv(J)
    want = {(i, j): inv(endo.product(cmp(i), cmp(j))) for i in range(n) for j in range(n)}
    pts = {(i, j): c.compose(h.t(c.from_elem(J, M, i), c.from_elem(J, M, j)), lj)
           for i in range(n) for j in range(n)}
    mult = None
    for cand in c.arrows(h.t(M, M), M):
        if all(c.elem(c.compose(cand, pts[k])) == v for k, v in want.items()):
            mult = cand
            break
    if mult is None:
        return None
    unit = c.from_elem(J, M, inv(endo.unit_element()))
    return MonoidObj(h, M, mult, unit, name="end")


# lifted monoidal structures ------------------------------------------------------------------

@dataclass(eq=False)
class LiftedMonoidalStructure:
    """A monoidal structure on a module category over the vertical tensor.

    ``tensor_action(X, Y)`` is the action on U X o U Y; the unit object is
    (1, unit_action).  Constraints are those of the vertical structure.
    """

    mc: ModuleCategory
    tensor_action: Callable
    unit_action: Arrow
    name: str = ""
    structure: MonoidalStructure = field(init=False)

    def __post_init__(self):
        d, mc = self.mc.d, self.mc
        v, c = d.v, d.cat
        cache: dict = {}

        def tobj(x, y):
            key = (x, y)
            if key not in cache:
                cache[key] = ModuleObject(v.t(x.carrier, y.carrier), self.tensor_action(x, y))
            return cache[key]

        def tarr(f, g):
            u = v.t(mc.forget(f), mc.forget(g))
            return Arrow(tobj(f.src, g.src), tobj(f.tgt, g.tgt), u.val)
        self.unit_object = ModuleObject(v.unit, self.unit_action)
        U = self.unit_object

        def assoc(x, y, z):
            return Arrow(tobj(tobj(x, y), z), tobj(x, tobj(y, z)), v.assoc(x.carrier, y.carrier, z.carrier).val)

        def assoc_inv(x, y, z):
            return Arrow(tobj(x, tobj(y, z)), tobj(tobj(x, y), z),
                         v.assoc_inv(x.carrier, y.carrier, z.carrier).val)
        self.structure = MonoidalStructure(
            mc, tobj, tarr, U, assoc,
            lambda x: Arrow(tobj(U, x), x, v.lunit(x.carrier).val),
            lambda x: Arrow(tobj(x, U), x, v.runit(x.carrier).val),
            assoc_inv=assoc_inv,
            lunit_inv=lambda x: Arrow(x, tobj(U, x), v.lunit_inv(x.carrier).val),
            runit_inv=lambda x: Arrow(x, tobj(x, U), v.runit_inv(x.carrier).val),
            name=self.name or "lifted")

    def tensor(self, x, y) -> ModuleObject:
        return self.structure.t(x, y)


def validate_lifted(L: LiftedMonoidalStructure, objects: Sequence | None = None) -> Report:
    """Monoidal axioms, module laws of every tensor, constraints being module maps,
    and U strong monoidal (identity comparisons) into the vertical structure."""
    mc, d = L.mc, L.mc.d
    m = L.structure
    objs = list(mc.objects if objects is None else objects)
    rep = Report("lifted structure %s" % L.name)
    rep.check("unit-module", "module", is_module(d, mc.monoid, m.unit))
    for x, y in product(objs, repeat=2):
        t = m.t(x, y)
        rep.check("tensor-module", "module", is_module(d, mc.monoid, t), objects=(x, y))
        rep.check("comparison", "strong-monoidal", t.carrier == d.circ(x.carrier, y.carrier), objects=(x, y))
    for x in objs:
        for name, f in (("lunit", m.lunit(x)), ("runit", m.runit(x))):
            rep.check(name + "-module-map", "module", mc.is_module_map(f.src, f.tgt, mc.forget(f)), object=x)
    for x, y, z in product(objs, repeat=3):
        f = m.assoc(x, y, z)
        rep.check("assoc-module-map", "module", mc.is_module_map(f.src, f.tgt, mc.forget(f)), objects=(x, y, z))
    if rep.ok:
        rep.merge(validate_monoidal(m, objs), "monoidal/")
    return rep


def lift_bimonoid_to_monoidal(b: Bimonoid, mc: ModuleCategory) -> LiftedMonoidalStructure:
    """(A, a) (x) (B, b) = (A o B, (a o b) . gamma . (1 * delta_M)); unit (1, mu_1 . (1 * eps))."""
    d = b.duoidal
    if d is not mc.d or b.carrier != mc.monoid.carrier or b.mult != mc.monoid.mult or b.unit != mc.monoid.unit:
        raise StructureError("bimonoid does not match the module category's monoid")
    rep = validate_bimonoid(b)
    if not rep.ok:
        raise StructureError("not a bimonoid: %s" % sorted(rep.failed_axioms()))
    c, h = d.cat, d.h
    M = b.carrier

    def action(x, y):
        A, B = x.carrier, y.carrier
        return c.compose_all(d.circ(x.action, y.action), d.gamma(A, B, M, M),
                             h.t(c.identity(d.circ(A, B)), b.comult))
    unit_action = c.compose(d.mu, h.t(c.identity(d.one), b.counit))
    return LiftedMonoidalStructure(mc, action, unit_action, name="lift(%s)" % b.name)


def extract_bimonoid_from_monoidal(L: LiftedMonoidalStructure, objects: Sequence | None = None) -> Bimonoid:
    """delta_M = rho . ((eta o eta) . delta * 1) . l^{-1} with rho the action on R (x) R;
    eps = nu . (tau * 1) . l^{-1} with nu the unit object's action."""
    mc, d = L.mc, L.mc.d
    pre = validate_lifted(L, objects)
    if not pre.ok:
        raise StructureError("not a lifted monoidal structure: %s" % sorted(pre.failed_axioms()))
    c, h = d.cat, d.h
    m = mc.monoid
    M = m.carrier
    R = regular_module(d, m)
    rho = L.tensor(R, R).action
    li = h.lunit_inv(M)
    iM = c.identity(M)
    point = c.compose(d.circ(m.unit, m.unit), d.delta)
    comult = c.compose_all(rho, h.t(point, iM), li)
    counit = c.compose_all(L.unit_action, h.t(d.tau, iM), li)
    b = Bimonoid(d, M, m.mult, m.unit, comult, counit, name="extracted")
    b.report = validate_bimonoid(b)
    return b


def _module_isos(mc: ModuleCategory, x: ModuleObject, y: ModuleObject):
    c = mc.d.cat
    if x.carrier != y.carrier:
        return
    ident = c.identity(x.carrier)
    if mc.is_module_map(x, y, ident):
        yield ident
    for f in c.arrows(x.carrier, y.carrier):
        if f != ident and mc.is_module_map(x, y, f) and c.inverse(f) is not None:
            yield f


def compare_lifts(L1: LiftedMonoidalStructure, L2: LiftedMonoidalStructure,
                  objects: Sequence | None = None) -> Report:
    """Search an identity-on-objects monoidal iso (Mod, L1) -> (Mod, L2).

    Components psi_{X,Y}: X (x)1 Y -> X (x)2 Y are chosen per pair, preferring
    the identity, and then checked for coherence on the declared triples.
    """
    mc = L1.mc
    if L2.mc is not mc:
        raise StructureError("lifts over different module categories")
    m1, m2 = L1.structure, L2.structure
    c = mc.d.cat
    objs = list(mc.objects if objects is None else objects)
    rep = Report("comparison")
    chosen: dict = {}

    def psi(x, y):
        if (x, y) not in chosen:
            s, t = m1.t(x, y), m2.t(x, y)
            f = next(_module_isos(mc, s, t), None)
            chosen[(x, y)] = None if f is None else Arrow(s, t, f.val)
        return chosen[(x, y)]

    u = next(_module_isos(mc, m1.unit, m2.unit), None)
    rep.check("unit-component", "iso", u is not None)
    pairs_ok = True
    for x, y in product(objs, repeat=2):
        ok = psi(x, y) is not None
        pairs_ok &= ok
        rep.check("component", "iso", ok, objects=(x, y))
    if u is None or not pairs_ok:
        return rep
    psi0 = Arrow(m1.unit, m2.unit, u.val)
    for x, y, z in product(objs, repeat=3):
        a, b2, g = psi(m1.t(x, y), z), psi(x, m1.t(y, z)), psi(y, z)
        if a is None or b2 is None or g is None:
            rep.check("component", "iso", False, objects=(x, y, z))
            continue
        lhs = mc.compose_all(m2.assoc(x, y, z), m2.t(psi(x, y), mc.identity(z)), a)
        rhs = mc.compose_all(m2.t(mc.identity(x), g), b2, m1.assoc(x, y, z))
        rep.check("assoc-coherence", "monoidal-functor", lhs == rhs, objects=(x, y, z))
    for x in objs:
        pl, pr = psi(m1.unit, x), psi(x, m1.unit)
        if pl is None or pr is None:
            rep.check("component", "iso", False, object=x)
            continue
        lhs = mc.compose_all(m2.lunit(x), m2.t(psi0, mc.identity(x)), pl)
        rep.check("left-unit-coherence", "monoidal-functor", lhs == m1.lunit(x), object=x)
        rhs = mc.compose_all(m2.runit(x), m2.t(mc.identity(x), psi0), pr)
        rep.check("right-unit-coherence", "monoidal-functor", rhs == m1.runit(x), object=x)
    return rep


def first_factor_lift(mc: ModuleCategory) -> LiftedMonoidalStructure:
    """M acts on the first factor only; not monoidal over U (used as a negative example)."""
    d = mc.d
    c, h, v = d.cat, d.h, d.v
    M = mc.monoid.carrier

    def action(x, y):
        A, B = x.carrier, y.carrier
        # (A o B) * M -> (A o B) * (M o J) -> (A * M) o (B * J) -> A o B
        return c.compose_all(v.t(x.action, h.runit(B)), d.gamma(A, B, M, h.unit),
                             h.t(c.identity(v.t(A, B)), v.runit_inv(M)))
    eps1 = _unique_arrow(c, h.t(d.one, M), d.one)
    return LiftedMonoidalStructure(mc, action, eps1, name="first-factor")
