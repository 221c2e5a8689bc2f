"""Finite categories enriched in a base from :mod:`duoidal.vbase`.

Morphisms are :class:`Arrow` values.  Over FinSet an arrow's ``val`` is a
hashable element id of the hom-set (an index for tabulated categories, a
function table for skeletal FinSet); over FinVect it is the coordinate
vector in the hom-space.  Categories may be lazy: ``objects`` lists the
declared objects that validators range over, while ``has_object`` may accept
more (tensor products of declared objects, say).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import ffield
from . import vbase as vb
from .report import Report


@dataclass(frozen=True, slots=True)
class Arrow:
    src: Any
    tgt: Any
    val: Any

    def to_json(self):
        from .report import describe
        return {"src": describe(self.src), "tgt": describe(self.tgt), "val": describe(self.val)}


class CategoryError(ValueError):
    pass


class FinCat:
    """Interface for a finite V-category."""

    base: vb.BaseKind = vb.FINSET
    objects: list = []
    name: str = ""

    def has_object(self, a) -> bool:
        return a in self.objects

    def hom(self, a, b) -> vb.BaseValue:
        raise NotImplementedError

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        raise NotImplementedError

    def identity(self, a) -> Arrow:
        raise NotImplementedError

    # element <-> arrow
    def elem(self, f: Arrow):
        """The element of hom(src, tgt) that f is (an int, or a vector)."""
        return f.val

    def from_elem(self, a, b, e) -> Arrow:
        if isinstance(e, (int, np.integer)):
            return Arrow(a, b, int(e))
        return Arrow(a, b, tuple(int(v) for v in e))

    def generators(self, a, b) -> list[Arrow]:
        return [self.from_elem(a, b, e) for e in self.hom(a, b).elements()]

    def arrows(self, a, b) -> Iterable[Arrow]:
        """Every arrow a -> b (for FinVect, every vector: keep homs tiny)."""
        h = self.hom(a, b)
        if self.base.is_set:
            return self.generators(a, b)
        vb.check_budget(self.base.p ** h.size, "arrow enumeration")
        return [self.from_elem(a, b, tuple(t)) for t in product(range(self.base.p), repeat=h.size)]

    def zero(self, a, b) -> Arrow:
        if self.base.is_set:
            raise CategoryError("no zero arrows over FinSet")
        return self.from_elem(a, b, (0,) * self.hom(a, b).size)

    def inverse(self, f: Arrow) -> Arrow | None:
        a, b = f.src, f.tgt
        ia, ib = self.identity(a), self.identity(b)
        if self.base.is_set:
            for g in self.arrows(b, a):
                if self.compose(g, f) == ia and self.compose(f, g) == ib:
                    return g
            return None
        # g -> (g.f, f.g) is linear; solve for (1_a, 1_b)
        gens = self.generators(b, a)
        cols = [np.concatenate([vb.as_vec(self.compose(g, f).val), vb.as_vec(self.compose(f, g).val)])
                for g in gens]
        rhs = np.concatenate([vb.as_vec(ia.val), vb.as_vec(ib.val)])
        if not cols:
            return Arrow(b, a, ()) if not rhs.any() else None
        x = ffield.solve(np.stack(cols, axis=1), rhs, self.base.p)
        if x is None:
            return None
        return Arrow(b, a, tuple(int(v) for v in x[:, 0]))

    def is_iso(self, f: Arrow) -> bool:
        return self.inverse(f) is not None

    def comp_map(self, a, b, c) -> vb.BaseMap:
        """hom(b, c) (x) hom(a, b) -> hom(a, c) as a base map."""
        hab, hbc, hac = self.hom(a, b), self.hom(b, c), self.hom(a, c)
        src = vb.tensor(hbc, hab)
        gbc, gab = self.generators(b, c), self.generators(a, b)

        def fn(e):
            if self.base.is_set:
                i, j = divmod(e, hab.size)
            else:
                k = e.index(1)
                i, j = divmod(k, hab.size)
            return self.elem(self.compose(gbc[i], gab[j]))
        return vb.from_function(src, hac, fn)

    def ident_map(self, a) -> vb.BaseMap:
        return vb.constant_point(self.hom(a, a), self.elem(self.identity(a)))

    def compose_all(self, *arrows: Arrow) -> Arrow:
        """compose_all(h, g, f) = h . g . f."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.compose(g, out)
        return out

    def __repr__(self):
        return "<%s %s>" % (type(self).__name__, self.name or self.objects)


# linear helpers -----------------------------------------------------------------

def expand(cat: FinCat, f: Arrow) -> list[tuple[int, Arrow]]:
    """f as a combination of generators (a single term over FinSet)."""
    if cat.base.is_set:
        return [(1, f)]
    n = len(f.val)
    return [(c, Arrow(f.src, f.tgt, vb.basis_vector(n, i))) for i, c in enumerate(f.val) if c]


def lincomb(cat: FinCat, a, b, terms: Iterable[tuple[int, Arrow]]) -> Arrow:
    p = cat.base.p
    acc = np.zeros(cat.hom(a, b).size, dtype=np.int64)
    for c, t in terms:
        acc = acc + c * vb.as_vec(t.val)
    return Arrow(a, b, tuple(int(v) for v in acc % p))


def extend(out: FinCat, a, b, fn: Callable, *parts: tuple[FinCat, Arrow]) -> Arrow:
    """Multilinear extension of ``fn`` from generators to arbitrary arrows."""
    if out.base.is_set:
        return fn(*[f for _, f in parts])
    p = out.base.p
    terms = []
    for combo in product(*[expand(c, f) for c, f in parts]):
        coef = 1
        for c, _ in combo:
            coef = coef * c % p
        terms.append((coef, fn(*[g for _, g in combo])))
    return lincomb(out, a, b, terms)


# concrete categories --------------------------------------------------------------

class TableCategory(FinCat):
    """A FinSet-enriched category given by explicit tables.

    ``homs[(a, b)]`` is the hom size, ``comp[(a, b, c)][g][f]`` the index of
    g . f, and ``ident[a]`` the index of the identity.
    """

    def __init__(self, objects: Sequence, homs: dict, comp: dict, ident: dict,
                 name: str = "", arrow_labels: dict | None = None):
        self.base = vb.FINSET
        self.objects = list(objects)
        self._homs = dict(homs)
        self._comp = comp
        self._ident = dict(ident)
        self.name = name
        self.arrow_labels = arrow_labels or {}
        self._objset = set(self.objects)

    def has_object(self, a) -> bool:
        return a in self._objset

    def hom(self, a, b) -> vb.BaseValue:
        labels = self.arrow_labels.get((a, b))
        n = self._homs.get((a, b), 0)
        return vb.BaseValue(vb.FINSET, n, tuple(labels) if labels else None)

    def hom_size(self, a, b) -> int:
        return self._homs.get((a, b), 0)

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise CategoryError("cannot compose %r after %r" % (g, f))
        return Arrow(f.src, g.tgt, self._comp[(f.src, f.tgt, g.tgt)][g.val][f.val])

    def identity(self, a) -> Arrow:
        return Arrow(a, a, self._ident[a])

    def from_elem(self, a, b, e) -> Arrow:
        return Arrow(a, b, int(e))

    def generators(self, a, b) -> list[Arrow]:
        return [Arrow(a, b, i) for i in range(self.hom_size(a, b))]

    def to_json(self):
        idx = {o: i for i, o in enumerate(self.objects)}
        n = len(self.objects)
        homs = [[self.hom_size(a, b) for b in self.objects] for a in self.objects]
        comp = {}
        for a, b, c in product(self.objects, repeat=3):
            if self.hom_size(a, b) and self.hom_size(b, c):
                comp["%d,%d,%d" % (idx[a], idx[b], idx[c])] = [list(r) for r in self._comp[(a, b, c)]]
        return {"objects": n, "homs": homs, "comp": comp,
                "ident": [self._ident[a] for a in self.objects]}

    @classmethod
    def from_json(cls, obj, name: str = ""):
        n = obj["objects"]
        objects = list(range(n))
        homs = {(a, b): obj["homs"][a][b] for a in objects for b in objects}
        comp = {}
        for key, table in obj["comp"].items():
            a, b, c = (int(t) for t in key.split(","))
            comp[(a, b, c)] = [list(r) for r in table]
        ident = {a: obj["ident"][a] for a in objects}
        return cls(objects, homs, comp, ident, name=name)


def from_composition(objects: Sequence, homs: dict, compose: Callable[[Any, Any, Any, int, int], int],
                     ident: dict, name: str = "") -> TableCategory:
    """Tabulate a category from a composition function (a, b, c, g, f) -> index."""
    comp = {}
    for a, b, c in product(objects, repeat=3):
        nab, nbc = homs.get((a, b), 0), homs.get((b, c), 0)
        if nab and nbc:
            comp[(a, b, c)] = [[compose(a, b, c, g, f) for f in range(nab)] for g in range(nbc)]
    return TableCategory(objects, homs, comp, ident, name=name)


def discrete(objects: Sequence, name: str = "") -> TableCategory:
    objects = list(objects)
    homs = {(a, a): 1 for a in objects}
    return from_composition(objects, homs, lambda a, b, c, g, f: 0, {a: 0 for a in objects},
                            name=name or "discrete(%d)" % len(objects))


def monoid_category(table: Sequence[Sequence[int]], unit: int = 0, name: str = "") -> TableCategory:
    """One object, hom = the monoid; composition g . f = table[g][f]."""
    n = len(table)
    return from_composition([0], {(0, 0): n}, lambda a, b, c, g, f: table[g][f], {0: unit},
                            name=name or "monoid(%d)" % n)


def cyclic_table(n: int) -> list[list[int]]:
    return [[(g + f) % n for f in range(n)] for g in range(n)]


def product_table(t1, t2) -> list[list[int]]:
    n2 = len(t2)
    n = len(t1) * n2
    return [[t1[g // n2][f // n2] * n2 + t2[g % n2][f % n2] for f in range(n)] for g in range(n)]


def group_category(n: int) -> TableCategory:
    return monoid_category(cyclic_table(n), 0, name="Z/%d" % n)


def poset(objects: Sequence, leq: Callable[[Any, Any], bool], name: str = "") -> TableCategory:
    objects = list(objects)
    homs = {(a, b): 1 for a in objects for b in objects if leq(a, b)}
    return from_composition(objects, homs, lambda a, b, c, g, f: 0, {a: 0 for a in objects},
                            name=name or "poset")


def unit_category(base: vb.BaseKind = vb.FINSET) -> FinCat:
    """The unit V-category: one object whose hom is the base unit."""
    if base.is_set:
        return monoid_category([[0]], 0, name="J")
    return linearize(monoid_category([[0]], 0, name="J"), base.p)


class SkeletalSets(FinCat):
    """Skeletal FinSet enriched over itself: objects are sizes, hom(m, n) = n^m.

    Arrows carry their function table as ``val``.  Every natural number is an
    object; ``objects`` holds the declared ones (0..max_declared).
    """

    def __init__(self, max_declared: int = 3):
        self.base = vb.FINSET
        self.objects = list(range(max_declared + 1))
        self.name = "FinSet<=%d" % max_declared

    def has_object(self, a) -> bool:
        return isinstance(a, int) and a >= 0

    def hom(self, a, b) -> vb.BaseValue:
        return vb.internal_hom(vb.finset(a), vb.finset(b)).value

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise CategoryError("cannot compose %r after %r" % (g, f))
        return Arrow(f.src, g.tgt, tuple(map(g.val.__getitem__, f.val)))

    def identity(self, a) -> Arrow:
        return Arrow(a, a, tuple(range(a)))

    def elem(self, f: Arrow) -> int:
        return vb.encode_function(f.val, f.tgt)

    def from_elem(self, a, b, e) -> Arrow:
        return Arrow(a, b, vb.decode_function(int(e), a, b))

    def fn(self, a, b, table: Sequence[int]) -> Arrow:
        return Arrow(a, b, tuple(table))

    def generators(self, a, b) -> list[Arrow]:
        vb.check_budget(b ** a, "hom enumeration")
        return [Arrow(a, b, t) for t in product(range(b), repeat=a)]

    def inverse(self, f: Arrow) -> Arrow | None:
        m = vb.is_invertible(vb.BaseMap(vb.finset(f.src), vb.finset(f.tgt), f.val))
        return None if m is None else Arrow(f.tgt, f.src, m.data)


class SkeletalVect(FinCat):
    """Skeletal FinVect over F_p: objects are dimensions, arrows n x m matrices (row-major)."""

    def __init__(self, p: int, max_declared: int = 2):
        self.base = vb.finvect(p)
        self.p = p
        self.objects = list(range(max_declared + 1))
        self.name = "FinVect(F_%d)<=%d" % (p, max_declared)

    def has_object(self, a) -> bool:
        return isinstance(a, int) and a >= 0

    def hom(self, a, b) -> vb.BaseValue:
        return vb.vspace(self.p, a * b)

    def matrix(self, f: Arrow) -> np.ndarray:
        return vb.as_vec(f.val).reshape(f.tgt, f.src)

    def arrow(self, a, b, mat) -> Arrow:
        m = vb.as_vec(mat).reshape(b, a) % self.p
        return Arrow(a, b, tuple(m.reshape(-1).tolist()))

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise CategoryError("cannot compose %r after %r" % (g, f))
        return self.arrow(f.src, g.tgt, self.matrix(g) @ self.matrix(f))

    def identity(self, a) -> Arrow:
        return self.arrow(a, a, np.eye(a, dtype=np.int64))

    def from_elem(self, a, b, e) -> Arrow:
        return Arrow(a, b, tuple(int(v) for v in e))

    def inverse(self, f: Arrow) -> Arrow | None:
        if f.src != f.tgt:
            return None
        m = ffield.inverse(self.matrix(f), self.p)
        return None if m is None else self.arrow(f.tgt, f.src, m)


class TensorCategory(FinCat):
    """a (x) b: objects are pairs, hom((x, y), (x', y')) = a(x, x') (x) b(y, y')."""

    def __init__(self, a: FinCat, b: FinCat):
        if a.base != b.base:
            raise vb.KindMismatch("categories over different bases")
        self.a, self.b = a, b
        self.base = a.base
        self.objects = [(x, y) for x in a.objects for y in b.objects]
        self.name = "(%s)(x)(%s)" % (a.name, b.name)

    def has_object(self, o) -> bool:
        return isinstance(o, tuple) and len(o) == 2 and self.a.has_object(o[0]) and self.b.has_object(o[1])

    def hom(self, s, t) -> vb.BaseValue:
        return vb.tensor(self.a.hom(s[0], t[0]), self.b.hom(s[1], t[1]))

    def pair(self, f: Arrow, g: Arrow) -> Arrow:
        """The arrow f (x) g built from arrows of the factors."""
        src, tgt = (f.src, g.src), (f.tgt, g.tgt)
        if self.base.is_set:
            return Arrow(src, tgt, (f.val, g.val))
        return Arrow(src, tgt, vb.tensor_elements(self.base, f.val, g.val, len(g.val)))

    def components(self, h: Arrow) -> list[tuple[int, Arrow, Arrow]]:
        """h as a combination of pure tensors of generators."""
        (x, y), (x2, y2) = h.src, h.tgt
        if self.base.is_set:
            return [(1, Arrow(x, x2, h.val[0]), Arrow(y, y2, h.val[1]))]
        nb = self.b.hom(y, y2).size
        na = self.a.hom(x, x2).size
        out = []
        for k, c in enumerate(h.val):
            if c:
                i, j = divmod(k, nb)
                out.append((c, Arrow(x, x2, vb.basis_vector(na, i)), Arrow(y, y2, vb.basis_vector(nb, j))))
        return out

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise CategoryError("cannot compose")
        if self.base.is_set:
            (g1, g2), (f1, f2) = g.val, f.val
            a1 = self.a.compose(Arrow(f.tgt[0], g.tgt[0], g1), Arrow(f.src[0], f.tgt[0], f1))
            a2 = self.b.compose(Arrow(f.tgt[1], g.tgt[1], g2), Arrow(f.src[1], f.tgt[1], f2))
            return Arrow(f.src, g.tgt, (a1.val, a2.val))
        terms = []
        for cg, g1, g2 in self.components(g):
            for cf, f1, f2 in self.components(f):
                terms.append((cg * cf, self.pair(self.a.compose(g1, f1), self.b.compose(g2, f2))))
        return lincomb(self, f.src, g.tgt, terms)

    def identity(self, o) -> Arrow:
        return self.pair(self.a.identity(o[0]), self.b.identity(o[1]))

    def elem(self, f: Arrow):
        if self.base.is_set:
            (x, y), (x2, y2) = f.src, f.tgt
            i = self.a.elem(Arrow(x, x2, f.val[0]))
            j = self.b.elem(Arrow(y, y2, f.val[1]))
            return i * self.b.hom(y, y2).size + j
        return f.val

    def from_elem(self, s, t, e) -> Arrow:
        if self.base.is_set:
            i, j = divmod(int(e), self.b.hom(s[1], t[1]).size)
            return self.pair(self.a.from_elem(s[0], t[0], i), self.b.from_elem(s[1], t[1], j))
        return Arrow(s, t, tuple(int(v) for v in e))


def tensor_categories(a: FinCat, b: FinCat) -> TensorCategory:
    return TensorCategory(a, b)


class LinearizedCategory(FinCat):
    """Free F_p-linear category on a FinSet-enriched one."""

    def __init__(self, cat: FinCat, p: int):
        if not cat.base.is_set:
            raise vb.KindMismatch("linearize expects a FinSet-enriched category")
        self.under = cat
        self.base = vb.finvect(p)
        self.p = p
        self.objects = list(cat.objects)
        self.name = "F_%d[%s]" % (p, cat.name)

    def has_object(self, a) -> bool:
        return self.under.has_object(a)

    def hom(self, a, b) -> vb.BaseValue:
        return vb.vspace(self.p, self.under.hom(a, b).size)

    def lift(self, f: Arrow) -> Arrow:
        """The basis vector of a set-level arrow."""
        n = self.under.hom(f.src, f.tgt).size
        return Arrow(f.src, f.tgt, vb.basis_vector(n, self.under.elem(f)))

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        u = self.under

        def gen(gg, ff):
            return self.lift(u.compose(u.from_elem(gg.src, gg.tgt, gg.val.index(1)),
                                       u.from_elem(ff.src, ff.tgt, ff.val.index(1))))
        return extend(self, f.src, g.tgt, gen, (self, g), (self, f))

    def identity(self, a) -> Arrow:
        return self.lift(self.under.identity(a))

    def from_elem(self, a, b, e) -> Arrow:
        return Arrow(a, b, tuple(int(v) for v in e))


def linearize(cat: FinCat, p: int) -> LinearizedCategory:
    return LinearizedCategory(cat, p)


# functors and natural transformations -----------------------------------------------

class VFunctor:
    def __init__(self, source: FinCat, target: FinCat, obj: Callable, arr: Callable, name: str = ""):
        self.source, self.target = source, target
        self.obj, self.arr = obj, arr
        self.name = name

    def __call__(self, x):
        return self.arr(x) if isinstance(x, Arrow) else self.obj(x)

    def hom_map(self, a, b) -> vb.BaseMap:
        s, t = self.source, self.target
        return vb.from_function(s.hom(a, b), t.hom(self.obj(a), self.obj(b)),
                                lambda e: t.elem(self.arr(s.from_elem(a, b, e))))

    def __repr__(self):
        return "<VFunctor %s>" % (self.name or "%s -> %s" % (self.source.name, self.target.name))


def identity_functor(c: FinCat) -> VFunctor:
    return VFunctor(c, c, lambda a: a, lambda f: f, name="id")


def compose_functors(g: VFunctor, f: VFunctor) -> VFunctor:
    return VFunctor(f.source, g.target, lambda a: g.obj(f.obj(a)), lambda h: g.arr(f.arr(h)),
                    name="%s.%s" % (g.name, f.name))


def tensor_functors(f: VFunctor, g: VFunctor) -> VFunctor:
    src = TensorCategory(f.source, g.source)
    tgt = TensorCategory(f.target, g.target)

    def arr(h):
        return extend(tgt, (f.obj(h.src[0]), g.obj(h.src[1])), (f.obj(h.tgt[0]), g.obj(h.tgt[1])),
                      lambda hh: _tensor_gen(src, tgt, f, g, hh), (src, h))
    return VFunctor(src, tgt, lambda o: (f.obj(o[0]), g.obj(o[1])), arr,
                    name="(%s)(x)(%s)" % (f.name, g.name))


def _tensor_gen(src: TensorCategory, tgt: TensorCategory, f: VFunctor, g: VFunctor, h: Arrow) -> Arrow:
    (_, h1, h2), = src.components(h)
    return tgt.pair(f.arr(h1), g.arr(h2))


class VNatural:
    def __init__(self, source: VFunctor, target: VFunctor, component: Callable, name: str = ""):
        if source.source is not target.source or source.target is not target.target:
            raise CategoryError("natural transformation between non-parallel functors")
        self.source, self.target = source, target
        self.component = component
        self.name = name

    def __call__(self, a) -> Arrow:
        return self.component(a)


def identity_natural(f: VFunctor) -> VNatural:
    return VNatural(f, f, lambda a: f.target.identity(f.obj(a)), name="1")


# validators ------------------------------------------------------------------------

def validate_category(c: FinCat, objects: Sequence | None = None) -> Report:
    objs = list(c.objects if objects is None else objects)
    rep = Report("category %s" % c.name)
    for a in objs:
        i = c.identity(a)
        rep.check("identity-typed", "shape", i.src == a and i.tgt == a, object=a)
    for a, b in product(objs, repeat=2):
        ia, ib = c.identity(a), c.identity(b)
        for f in c.generators(a, b):
            rep.check("left-unit", "unit", c.compose(ib, f) == f, pair=(a, b), arrow=c.elem(f))
            rep.check("right-unit", "unit", c.compose(f, ia) == f, pair=(a, b), arrow=c.elem(f))
    for a, b, d in product(objs, repeat=3):
        gab = c.generators(a, b)
        if not gab:
            continue
        gbd = c.generators(b, d)
        if not gbd:
            continue
        for e in objs:
            for h in c.generators(d, e):
                for g in gbd:
                    hg = c.compose(h, g)
                    for f in gab:
                        ok = c.compose(hg, f) == c.compose(h, c.compose(g, f))
                        rep.check("associativity", "assoc", ok, objects=(a, b, d, e),
                                  arrows=(c.elem(f), c.elem(g), c.elem(h)))
    return rep


def validate_functor(f: VFunctor, objects: Sequence | None = None) -> Report:
    s, t = f.source, f.target
    objs = list(s.objects if objects is None else objects)
    rep = Report("functor %s" % f.name)
    for a in objs:
        rep.check("preserves-identity", "functor", f.arr(s.identity(a)) == t.identity(f.obj(a)), object=a)
    for a, b, c in product(objs, repeat=3):
        for g in s.generators(b, c):
            for h in s.generators(a, b):
                ok = f.arr(s.compose(g, h)) == t.compose(f.arr(g), f.arr(h))
                rep.check("preserves-composition", "functor", ok, objects=(a, b, c),
                          arrows=(s.elem(h), s.elem(g)))
    return rep


def validate_natural(n: VNatural, objects: Sequence | None = None) -> Report:
    F, G = n.source, n.target
    s, t = F.source, F.target
    objs = list(s.objects if objects is None else objects)
    rep = Report("natural %s" % n.name)
    for a in objs:
        th = n(a)
        rep.check("component-typed", "shape", th.src == F.obj(a) and th.tgt == G.obj(a), object=a)
    for a, b in product(objs, repeat=2):
        for f in s.generators(a, b):
            ok = t.compose(G.arr(f), n(a)) == t.compose(n(b), F.arr(f))
            rep.check("naturality", "natural", ok, pair=(a, b), arrow=s.elem(f))
    return rep


def functors_equal(f: VFunctor, g: VFunctor, objects: Sequence | None = None) -> bool:
    s = f.source
    objs = list(s.objects if objects is None else objects)
    if any(f.obj(a) != g.obj(a) for a in objs):
        return False
    return all(f.arr(h) == g.arr(h) for a, b in product(objs, repeat=2) for h in s.generators(a, b))
