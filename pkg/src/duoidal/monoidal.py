"""Monoidal and (lax) braided structures on finite V-categories.

Constraint components are produced by callables indexed by object tuples, so
lazy carriers work; inverses are supplied or found on demand and cached.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Sequence

import numpy as np

from . import vbase as vb
from .fincat import (Arrow, FinCat, LinearizedCategory, SkeletalSets, SkeletalVect,
                     TensorCategory, VFunctor, discrete, extend, linearize)
from .report import Report


class StructureError(ValueError):
    pass


class MonoidalStructure:
    """(cat, tensor, unit, a, l, r).

    ``tensor_arr`` must accept arbitrary arrows; over FinVect it has to be
    bilinear (see :func:`duoidal.fincat.extend`).
    """

    def __init__(self, cat: FinCat, tensor_obj: Callable, tensor_arr: Callable, unit,
                 assoc: Callable, lunit: Callable, runit: Callable, *,
                 assoc_inv: Callable | None = None, lunit_inv: Callable | None = None,
                 runit_inv: Callable | None = None, name: str = ""):
        self.cat = cat
        self.tensor_obj = tensor_obj
        self.tensor_arr = tensor_arr
        self.unit = unit
        self.assoc, self.lunit, self.runit = assoc, lunit, runit
        self._given = {"a": assoc_inv, "l": lunit_inv, "r": runit_inv}
        self._inv_cache: dict = {}
        self.name = name

    def t(self, x, y):
        """Tensor of two objects or of two arrows."""
        if isinstance(x, Arrow):
            return self.tensor_arr(x, y)
        return self.tensor_obj(x, y)

    def id(self, a) -> Arrow:
        return self.cat.identity(a)

    def _inv(self, key, fwd: Callable, *objs) -> Arrow:
        ck = (key,) + objs
        if ck not in self._inv_cache:
            given = self._given[key]
            if given is not None:
                inv = given(*objs)
            else:
                inv = self.cat.inverse(fwd(*objs))
                if inv is None:
                    raise StructureError("constraint %s%r is not invertible" % (key, objs))
            self._inv_cache[ck] = inv
        return self._inv_cache[ck]

    def assoc_inv(self, a, b, c) -> Arrow:
        return self._inv("a", self.assoc, a, b, c)

    def lunit_inv(self, a) -> Arrow:
        return self._inv("l", self.lunit, a)

    def runit_inv(self, a) -> Arrow:
        return self._inv("r", self.runit, a)

    def tensor_functor(self) -> VFunctor:
        src = TensorCategory(self.cat, self.cat)

        def arr(h):
            def gen(hh):
                (_, f, g), = src.components(hh)
                return self.tensor_arr(f, g)
            return extend(self.cat, self.t(*h.src), self.t(*h.tgt), gen, (src, h))
        return VFunctor(src, self.cat, lambda o: self.t(*o), arr, name="tensor")

    def __repr__(self):
        return "<MonoidalStructure %s>" % (self.name or self.cat.name)


class Braiding:
    def __init__(self, structure: MonoidalStructure, component: Callable, lax: bool = False,
                 name: str = ""):
        self.structure = structure
        self.component = component
        self.lax = lax
        self.name = name

    def __call__(self, a, b) -> Arrow:
        return self.component(a, b)


@dataclass(eq=False)
class MonoidObj:
    structure: MonoidalStructure
    carrier: Any
    mult: Arrow
    unit: Arrow
    name: str = ""


@dataclass(eq=False)
class ComonoidObj:
    structure: MonoidalStructure
    carrier: Any
    comult: Arrow
    counit: Arrow
    name: str = ""


# validation ------------------------------------------------------------------------

def _gens(cat: FinCat, a, b):
    return cat.generators(a, b)


def check_tensor_functor(m: MonoidalStructure, objs: Sequence, rep: Report) -> None:
    c = m.cat
    for a, b in product(objs, repeat=2):
        ab = m.t(a, b)
        rep.check("tensor-object", "functor", c.has_object(ab), objects=(a, b))
        rep.check("tensor-identity", "functor", m.t(m.id(a), m.id(b)) == m.id(ab), objects=(a, b))
    # functoriality in each variable separately, plus interchange
    for a, b, d in product(objs, repeat=3):
        pairs = [(g, f) for f in _gens(c, a, b) for g in _gens(c, b, d)]
        if not pairs:
            continue
        for x in objs:
            ix = m.id(x)
            for g, f in pairs:
                gf = c.compose(g, f)
                rep.check("tensor-composition-left", "functor",
                          c.compose(m.t(g, ix), m.t(f, ix)) == m.t(gf, ix),
                          objects=(a, b, d, x), arrows=(c.elem(f), c.elem(g)))
                rep.check("tensor-composition-right", "functor",
                          c.compose(m.t(ix, g), m.t(ix, f)) == m.t(ix, gf),
                          objects=(x, a, b, d), arrows=(c.elem(f), c.elem(g)))
    for a, a2, b, b2 in product(objs, repeat=4):
        for f in _gens(c, a, a2):
            for g in _gens(c, b, b2):
                fg = m.t(f, g)
                lhs = c.compose(m.t(f, m.id(b2)), m.t(m.id(a), g))
                rhs = c.compose(m.t(m.id(a2), g), m.t(f, m.id(b)))
                rep.check("tensor-interchange", "functor", lhs == fg and rhs == fg,
                          objects=(a, a2, b, b2), arrows=(c.elem(f), c.elem(g)))


def validate_monoidal(m: MonoidalStructure, objects: Sequence | None = None,
                      functoriality: bool = True) -> Report:
    c = m.cat
    objs = list(c.objects if objects is None else objects)
    rep = Report("monoidal %s" % (m.name or c.name))
    t, I = m.t, m.unit
    rep.check("unit-object", "shape", c.has_object(I), unit=I)
    if functoriality:
        check_tensor_functor(m, objs, rep)
    for a, b, d in product(objs, repeat=3):
        al = m.assoc(a, b, d)
        ok = al.src == t(t(a, b), d) and al.tgt == t(a, t(b, d))
        rep.check("assoc-typed", "shape", ok, objects=(a, b, d))
        rep.check("assoc-invertible", "iso", c.is_iso(al), objects=(a, b, d))
    for a in objs:
        la, ra = m.lunit(a), m.runit(a)
        rep.check("unitor-typed", "shape", la.src == t(I, a) and la.tgt == a
                  and ra.src == t(a, I) and ra.tgt == a, object=a)
        rep.check("unitor-invertible", "iso", c.is_iso(la) and c.is_iso(ra), object=a)
    # naturality, one variable at a time
    for a, a2 in product(objs, repeat=2):
        for f in _gens(c, a, a2):
            rep.check("Nat_l", "Nat_l", c.compose(m.lunit(a2), t(m.id(I), f)) == c.compose(f, m.lunit(a)),
                      pair=(a, a2), arrow=c.elem(f))
            rep.check("Nat_r", "Nat_r", c.compose(m.runit(a2), t(f, m.id(I))) == c.compose(f, m.runit(a)),
                      pair=(a, a2), arrow=c.elem(f))
            for x, y in product(objs, repeat=2):
                ix, iy = m.id(x), m.id(y)
                checks = (
                    (m.assoc(a2, x, y), t(t(f, ix), iy), t(f, t(ix, iy)), m.assoc(a, x, y), (a, x, y)),
                    (m.assoc(x, a2, y), t(t(ix, f), iy), t(ix, t(f, iy)), m.assoc(x, a, y), (x, a, y)),
                    (m.assoc(x, y, a2), t(t(ix, iy), f), t(ix, t(iy, f)), m.assoc(x, y, a), (x, y, a)),
                )
                for pos, (al2, lhs_f, rhs_f, al, objs3) in enumerate(checks):
                    ok = c.compose(al2, lhs_f) == c.compose(rhs_f, al)
                    rep.check("Nat_a", "Nat_a", ok, variable=pos, objects=objs3, target=a2,
                              arrow=c.elem(f))
    for a, b, d, e in product(objs, repeat=4):
        lhs = c.compose(m.assoc(a, b, t(d, e)), m.assoc(t(a, b), d, e))
        rhs = c.compose_all(t(m.id(a), m.assoc(b, d, e)), m.assoc(a, t(b, d), e),
                            t(m.assoc(a, b, d), m.id(e)))
        rep.check("pentagon", "pentagon", lhs == rhs, objects=(a, b, d, e))
    for a, b in product(objs, repeat=2):
        lhs = c.compose(t(m.id(a), m.lunit(b)), m.assoc(a, I, b))
        rep.check("triangle", "triangle", lhs == t(m.runit(a), m.id(b)), objects=(a, b))
    return rep


def validate_braiding(br: Braiding, objects: Sequence | None = None) -> Report:
    m = br.structure
    c = m.cat
    t, I = m.t, m.unit
    objs = list(c.objects if objects is None else objects)
    rep = Report("braiding %s" % br.name)
    for a, b in product(objs, repeat=2):
        cab = br(a, b)
        rep.check("braiding-typed", "shape", cab.src == t(a, b) and cab.tgt == t(b, a), objects=(a, b))
        if not br.lax:
            rep.check("braiding-invertible", "iso", c.is_iso(cab), objects=(a, b))
    if "shape" in rep.failed_axioms():
        return rep
    for a, a2 in product(objs, repeat=2):
        for f in _gens(c, a, a2):
            for x in objs:
                ix = m.id(x)
                rep.check("braiding-natural", "Nat_c",
                          c.compose(br(a2, x), t(f, ix)) == c.compose(t(ix, f), br(a, x)),
                          variable=0, objects=(a, x), target=a2, arrow=c.elem(f))
                rep.check("braiding-natural", "Nat_c",
                          c.compose(br(x, a2), t(ix, f)) == c.compose(t(f, ix), br(x, a)),
                          variable=1, objects=(x, a), target=a2, arrow=c.elem(f))
    for a, b, d in product(objs, repeat=3):
        lhs = c.compose_all(m.assoc(b, d, a), br(a, t(b, d)), m.assoc(a, b, d))
        rhs = c.compose_all(t(m.id(b), br(a, d)), m.assoc(b, a, d), t(br(a, b), m.id(d)))
        rep.check("hexagon-1", "hexagon", lhs == rhs, objects=(a, b, d))
        lhs = c.compose_all(m.assoc_inv(d, a, b), br(t(a, b), d), m.assoc_inv(a, b, d))
        rhs = c.compose_all(t(br(a, d), m.id(b)), m.assoc_inv(a, d, b), t(m.id(a), br(b, d)))
        rep.check("hexagon-2", "hexagon", lhs == rhs, objects=(a, b, d))
    for a in objs:
        rep.check("braiding-unit", "unit", c.compose(m.lunit(a), br(a, I)) == m.runit(a), object=a, side="left")
        rep.check("braiding-unit", "unit", c.compose(m.runit(a), br(I, a)) == m.lunit(a), object=a, side="right")
    return rep


def is_symmetric(br: Braiding, objects: Sequence | None = None) -> bool:
    m = br.structure
    objs = list(m.cat.objects if objects is None else objects)
    return all(m.cat.compose(br(b, a), br(a, b)) == m.id(m.t(a, b)) for a, b in product(objs, repeat=2))


def validate_monoid(x: MonoidObj | ComonoidObj) -> Report:
    m = x.structure
    c, t, M, I = m.cat, m.t, x.carrier, m.unit
    iM = m.id(M)
    if isinstance(x, MonoidObj):
        rep = Report("monoid %s" % x.name)
        mu, eta = x.mult, x.unit
        rep.check("typed", "shape", mu.src == t(M, M) and mu.tgt == M and eta.src == I and eta.tgt == M)
        lhs = c.compose(mu, t(mu, iM))
        rhs = c.compose_all(mu, t(iM, mu), m.assoc(M, M, M))
        rep.check("associativity", "assoc", lhs == rhs, carrier=M)
        rep.check("left-unit", "unit", c.compose(mu, t(eta, iM)) == m.lunit(M), carrier=M)
        rep.check("right-unit", "unit", c.compose(mu, t(iM, eta)) == m.runit(M), carrier=M)
        return rep
    rep = Report("comonoid %s" % x.name)
    de, ep = x.comult, x.counit
    rep.check("typed", "shape", de.src == M and de.tgt == t(M, M) and ep.src == M and ep.tgt == I)
    lhs = c.compose_all(m.assoc(M, M, M), t(de, iM), de)
    rhs = c.compose(t(iM, de), de)
    rep.check("coassociativity", "coassoc", lhs == rhs, carrier=M)
    rep.check("left-counit", "counit", c.compose_all(m.lunit(M), t(ep, iM), de) == iM, carrier=M)
    rep.check("right-counit", "counit", c.compose_all(m.runit(M), t(iM, ep), de) == iM, carrier=M)
    return rep


def monoid_morphism_report(f: Arrow, n: MonoidObj, mm: MonoidObj) -> Report:
    """f : N -> M respects multiplication and unit."""
    m = n.structure
    c = m.cat
    rep = Report("monoid morphism")
    rep.check("typed", "shape", f.src == n.carrier and f.tgt == mm.carrier)
    rep.check("multiplicative", "mult", c.compose(f, n.mult) == c.compose(mm.mult, m.t(f, f)))
    rep.check("unital", "unit", c.compose(f, n.unit) == mm.unit)
    return rep


def trivial_monoid(m: MonoidalStructure) -> MonoidObj:
    I = m.unit
    return MonoidObj(m, I, m.lunit(I), m.id(I), name="unit")


def trivial_comonoid(m: MonoidalStructure) -> ComonoidObj:
    I = m.unit
    return ComonoidObj(m, I, m.lunit_inv(I), m.id(I), name="unit")


def enumerate_monoids(m: MonoidalStructure, carrier, limit: int = 64) -> list[MonoidObj]:
    """All monoid structures on ``carrier`` (FinSet, hom sizes <= limit)."""
    c = m.cat
    mm, uu = c.hom(m.t(carrier, carrier), carrier), c.hom(m.unit, carrier)
    if mm.size > limit or uu.size > limit:
        raise vb.BudgetExceeded("monoid enumeration over %d x %d candidates" % (mm.size, uu.size))
    out = []
    for mu in c.arrows(m.t(carrier, carrier), carrier):
        for eta in c.arrows(m.unit, carrier):
            cand = MonoidObj(m, carrier, mu, eta)
            if validate_monoid(cand).ok:
                out.append(cand)
    return out


# monoidality of hom -------------------------------------------------------------

class HomMonoidalData:
    """The maps box: C(W,X) (x) C(Y,Z) -> C(W.Y, X.Z) and j: I -> C(I,I)."""

    def __init__(self, m: MonoidalStructure, braiding: Braiding | None = None):
        self.m = m
        self.braiding = braiding

    def box(self, w, x, y, z) -> vb.BaseMap:
        m, c = self.m, self.m.cat
        hwx, hyz = c.hom(w, x), c.hom(y, z)
        gwx, gyz = c.generators(w, x), c.generators(y, z)

        def fn(e):
            k = e if c.base.is_set else e.index(1)
            i, j = divmod(k, hyz.size)
            return c.elem(m.t(gwx[i], gyz[j]))
        return vb.from_function(vb.tensor(hwx, hyz), c.hom(m.t(w, y), m.t(x, z)), fn)

    def j(self) -> vb.BaseMap:
        c, I = self.m.cat, self.m.unit
        return vb.constant_point(c.hom(I, I), c.elem(c.identity(I)))

    def validate(self, objects: Sequence | None = None) -> Report:
        m, c = self.m, self.m.cat
        t, I = m.t, m.unit
        objs = list(c.objects if objects is None else objects)
        rep = Report("hom monoidal")
        homs = {(a, b): c.generators(a, b) for a, b in product(objs, repeat=2)}
        for (u, v), (w, x), (y, z) in product(homs, repeat=3):
            for f in homs[(u, v)]:
                for g in homs[(w, x)]:
                    for h in homs[(y, z)]:
                        lhs = c.compose_all(m.assoc(v, x, z), t(t(f, g), h), m.assoc_inv(u, w, y))
                        rep.check("hom-assoc", "Nat_a", lhs == t(f, t(g, h)),
                                  objects=(u, v, w, x, y, z), arrows=(c.elem(f), c.elem(g), c.elem(h)))
        iI = m.id(I)
        for (y, z), gens in homs.items():
            for h in gens:
                lhs = c.compose_all(m.lunit(z), t(iI, h), m.lunit_inv(y))
                rep.check("hom-left-unit", "Nat_l", lhs == h, pair=(y, z), arrow=c.elem(h))
                lhs = c.compose_all(m.runit(z), t(h, iI), m.runit_inv(y))
                rep.check("hom-right-unit", "Nat_r", lhs == h, pair=(y, z), arrow=c.elem(h))
        br = self.braiding
        if br is not None:
            for (w, x), (y, z) in product(homs, repeat=2):
                cinv = c.inverse(br(w, y))
                for f in homs[(w, x)]:
                    for g in homs[(y, z)]:
                        lhs = c.compose_all(br(x, z), t(f, g), cinv)
                        rep.check("hom-braided", "braided", lhs == t(g, f),
                                  objects=(w, x, y, z), arrows=(c.elem(f), c.elem(g)))
        # the tables themselves agree with the arrow-level tensor
        for (w, x), (y, z) in product(homs, repeat=2):
            bx = self.box(w, x, y, z)
            ok = all(bx(vb.tensor_elements(c.base, c.elem(f), c.elem(g), c.hom(y, z).size))
                     == c.elem(t(f, g)) for f in homs[(w, x)] for g in homs[(y, z)])
            rep.check("box-table", "shape", ok, objects=(w, x, y, z))
        return rep


def hom_monoidal(m: MonoidalStructure, braiding: Braiding | None = None,
                 objects: Sequence | None = None) -> HomMonoidalData:
    data = HomMonoidalData(m, braiding)
    rep = data.validate(objects)
    if not rep.ok:
        raise StructureError("hom monoidality fails:\n" + rep.summary())
    data.report = rep
    return data


@dataclass(eq=False)
class BaseMonoid:
    """A monoid in the base: carrier value, mult: X (x) X -> X, unit: I -> X."""

    carrier: vb.BaseValue
    mult: vb.BaseMap
    unit: vb.BaseMap

    def product(self, x, y):
        return self.mult(vb.tensor_elements(self.carrier.kind, x, y, self.carrier.size))

    def unit_element(self):
        return vb.point_of(self.unit)

    def table(self) -> list:
        """Products of generators: a matrix of ints (FinSet) or vectors (FinVect)."""
        gens = self.carrier.elements()
        return [[self.product(x, y) for y in gens] for x in gens]

    def validate(self) -> Report:
        x = self.carrier
        ix = vb.identity(x)
        rep = Report("base monoid")
        lhs = vb.compose(self.mult, vb.tensor(self.mult, ix))
        rhs = vb.compose_all(self.mult, vb.tensor(ix, self.mult), vb.associator(x, x, x))
        rep.check("associativity", "assoc", lhs == rhs)
        rep.check("left-unit", "unit", vb.compose(self.mult, vb.tensor(self.unit, ix)) == vb.left_unitor(x))
        rep.check("right-unit", "unit", vb.compose(self.mult, vb.tensor(ix, self.unit)) == vb.right_unitor(x))
        return rep

    def is_commutative(self) -> bool:
        return vb.compose(self.mult, vb.symmetry(self.carrier, self.carrier)) == self.mult


def convolution_monoid(co: ComonoidObj, mon: MonoidObj) -> BaseMonoid:
    """hom(C, A) with f * g = mu . (f (x) g) . delta and unit eta . eps."""
    if co.structure is not mon.structure:
        raise StructureError("comonoid and monoid live in different monoidal structures")
    m = mon.structure
    c = m.cat
    C, A = co.carrier, mon.carrier
    h = c.hom(C, A)
    gens = c.generators(C, A)

    def conv(f, g):
        return c.compose_all(mon.mult, m.t(f, g), co.comult)

    def fn(e):
        k = e if c.base.is_set else e.index(1)
        i, j = divmod(k, h.size)
        return c.elem(conv(gens[i], gens[j]))
    mult = vb.from_function(vb.tensor(h, h), h, fn)
    unit = vb.constant_point(h, c.elem(c.compose(mon.unit, co.counit)))
    return BaseMonoid(h, mult, unit)


# standard instances ------------------------------------------------------------------

def _ident3(cat):
    return lambda a, b, d: cat.identity(a * b * d)


def cartesian_sets(max_declared: int = 3) -> MonoidalStructure:
    """Skeletal FinSet with the cartesian product (lexicographic order)."""
    cat = SkeletalSets(max_declared)

    @functools.lru_cache(maxsize=1 << 16)
    def tarr(f, g):
        nb = g.tgt
        return Arrow(f.src * g.src, f.tgt * g.tgt, tuple([x * nb + y for x in f.val for y in g.val]))

    def ident(*objs):
        n = 1
        for o in objs:
            n *= o
        return cat.identity(n)
    return MonoidalStructure(cat, lambda a, b: a * b, tarr, 1,
                             lambda a, b, d: ident(a, b, d), lambda a: ident(a), lambda a: ident(a),
                             assoc_inv=lambda a, b, d: ident(a, b, d), lunit_inv=lambda a: ident(a),
                             runit_inv=lambda a: ident(a), name="(FinSet<=%d, x)" % max_declared)


def cartesian_symmetry(m: MonoidalStructure) -> Braiding:
    cat = m.cat
    return Braiding(m, lambda a, b: cat.fn(a * b, b * a, [j * a + i for i in range(a) for j in range(b)]),
                    name="symmetry")


def tensor_vect(p: int, max_declared: int = 2) -> MonoidalStructure:
    cat = SkeletalVect(p, max_declared)

    @functools.lru_cache(maxsize=1 << 16)
    def tarr(f, g):
        return cat.arrow(f.src * g.src, f.tgt * g.tgt, np.kron(cat.matrix(f), cat.matrix(g)))

    def ident(*objs):
        n = 1
        for o in objs:
            n *= o
        return cat.identity(n)
    return MonoidalStructure(cat, lambda a, b: a * b, tarr, 1,
                             lambda a, b, d: ident(a, b, d), lambda a: ident(a), lambda a: ident(a),
                             assoc_inv=lambda a, b, d: ident(a, b, d), lunit_inv=lambda a: ident(a),
                             runit_inv=lambda a: ident(a), name="(FinVect(F_%d), (x))" % p)


def vect_symmetry(m: MonoidalStructure) -> Braiding:
    cat = m.cat

    def comp(a, b):
        return cat.arrow(a * b, b * a, vb.symmetry(vb.vspace(cat.p, a), vb.vspace(cat.p, b)).data)
    return Braiding(m, comp, name="symmetry")


def discrete_monoidal(elements: Sequence, op: Callable, unit, name: str = "") -> MonoidalStructure:
    """Discrete category on a monoid's elements, tensor = the operation, strict."""
    cat = discrete(elements, name=name)

    def tarr(f, g):
        o = op(f.src, g.src)
        return cat.identity(o)
    return MonoidalStructure(cat, op, tarr, unit,
                             lambda a, b, d: cat.identity(op(op(a, b), d)),
                             lambda a: cat.identity(a), lambda a: cat.identity(a),
                             assoc_inv=lambda a, b, d: cat.identity(op(op(a, b), d)),
                             lunit_inv=lambda a: cat.identity(a), runit_inv=lambda a: cat.identity(a),
                             name=name)


def discrete_cyclic(n: int) -> MonoidalStructure:
    return discrete_monoidal(range(n), lambda a, b: (a + b) % n, 0, name="Z/%d" % n)


def discrete_klein() -> MonoidalStructure:
    """Z/2 x Z/2 with objects 0..3 and xor as the group law."""
    return discrete_monoidal(range(4), lambda a, b: a ^ b, 0, name="Z/2xZ/2")


def identity_braiding(m: MonoidalStructure) -> Braiding:
    """c = identity, for discrete commutative instances."""
    return Braiding(m, lambda a, b: m.id(m.t(a, b)), name="identity")


def linearize_monoidal(m: MonoidalStructure, p: int,
                       lc: LinearizedCategory | None = None) -> MonoidalStructure:
    """Free F_p-linear version of a FinSet-enriched monoidal structure."""
    if lc is None:
        lc = linearize(m.cat, p)
    u = m.cat

    def tarr(f, g):
        def gen(ff, gg):
            return lc.lift(m.tensor_arr(u.from_elem(ff.src, ff.tgt, ff.val.index(1)),
                                        u.from_elem(gg.src, gg.tgt, gg.val.index(1))))
        return extend(lc, m.t(f.src, g.src), m.t(f.tgt, g.tgt), gen, (lc, f), (lc, g))

    def lift(fn):
        return lambda *objs: lc.lift(fn(*objs))
    return MonoidalStructure(lc, m.tensor_obj, tarr, m.unit, lift(m.assoc), lift(m.lunit), lift(m.runit),
                             assoc_inv=lift(m.assoc_inv), lunit_inv=lift(m.lunit_inv),
                             runit_inv=lift(m.runit_inv), name="F_%d[%s]" % (p, m.name))


def linearize_braiding(br: Braiding, lm: MonoidalStructure) -> Braiding:
    lc = lm.cat
    return Braiding(lm, lambda a, b: lc.lift(br(a, b)), lax=br.lax, name=br.name)


def idempotent_lax() -> tuple[MonoidalStructure, Braiding]:
    """A lax braided monoidal category whose braiding is not invertible.

    Objects I = 0 and X = 1 with X (x) X = X.  hom(X, X) = {1, e} with
    e e = e, the tensor of arrows is multiplication, and c_{X,X} = e.
    """
    from .fincat import from_composition
    homs = {(0, 0): 1, (1, 1): 2}
    cat = from_composition([0, 1], homs, lambda a, b, c, g, f: g * f if a == 1 else 0,
                           {0: 0, 1: 1}, name="idempotent")
    # in hom(X, X) index 1 is the identity and index 0 the idempotent e

    def tobj(a, b):
        return a | b

    def tarr(f, g):
        o_src, o_tgt = tobj(f.src, g.src), tobj(f.tgt, g.tgt)
        if o_src == 0:
            return cat.identity(0)
        vf = f.val if f.src == 1 else 1
        vg = g.val if g.src == 1 else 1
        return Arrow(o_src, o_tgt, vf * vg)
    ident = cat.identity
    m = MonoidalStructure(cat, tobj, tarr, 0,
                          lambda a, b, d: ident(a | b | d), ident, ident,
                          assoc_inv=lambda a, b, d: ident(a | b | d), lunit_inv=ident, runit_inv=ident,
                          name="idempotent")
    br = Braiding(m, lambda a, b: Arrow(1, 1, 0) if (a, b) == (1, 1) else ident(a | b), lax=True,
                  name="idempotent")
    return m, br


def graded_z2(n: int = 1) -> MonoidalStructure:
    """Objects Z/n, hom(a, a) = Z/2 = {1, s} (s at index 1), tensor a + b and f (x) g = fg.

    With n = 1 this is the group Z/2 seen as a one-object symmetric monoidal
    category (the tensor of arrows is the group law).
    """
    from .fincat import from_composition
    objs = list(range(n))
    homs = {(a, a): 2 for a in objs}
    cat = from_composition(objs, homs, lambda a, b, c, g, f: g ^ f, {a: 0 for a in objs},
                           name="Z/2-graded(%d)" % n)

    def tobj(a, b):
        return (a + b) % n

    def tarr(f, g):
        return Arrow(tobj(f.src, g.src), tobj(f.tgt, g.tgt), f.val ^ g.val)

    ident = cat.identity
    return MonoidalStructure(cat, tobj, tarr, 0, lambda a, b, d: ident(tobj(tobj(a, b), d)),
                             ident, ident, assoc_inv=lambda a, b, d: ident(tobj(tobj(a, b), d)),
                             lunit_inv=ident, runit_inv=ident, name="Z/2-graded(%d)" % n)
