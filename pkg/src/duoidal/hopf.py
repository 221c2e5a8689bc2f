"""Fusion morphisms, Hopf classification, and closedness witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from . import vbase as vb
from .duoidal import Bimonoid, DuoidalStructure, validate_bimonoid
from .fincat import Arrow, SkeletalSets, SkeletalVect
from .monoidal import Braiding, StructureError
from .report import Report


@dataclass(eq=False)
class FusionPair:
    bimonoid: Bimonoid
    v_left: Arrow
    v_right: Arrow

    def base_maps(self) -> tuple[vb.BaseMap, vb.BaseMap]:
        cat = self.bimonoid.duoidal.cat
        return arrow_as_base_map(cat, self.v_left), arrow_as_base_map(cat, self.v_right)


def arrow_as_base_map(cat, f: Arrow) -> vb.BaseMap:
    """The arrow as a function table / matrix, for skeletal set and vector space carriers."""
    if isinstance(cat, SkeletalSets):
        return vb.BaseMap(vb.finset(f.src), vb.finset(f.tgt), f.val)
    if isinstance(cat, SkeletalVect):
        return vb.BaseMap(vb.vspace(cat.p, f.src), vb.vspace(cat.p, f.tgt), cat.matrix(f))
    raise TypeError("no base-map reading of arrows in %s" % cat.name)


def build_fusion(b: Bimonoid, check: bool = True) -> FusionPair:
    """v_l = (l o mu) . gamma . (1 * delta) and v_r = (mu o l) . gamma . (1 * delta)."""
    if check:
        rep = validate_bimonoid(b)
        if not rep.ok:
            raise StructureError("not a bimonoid: %s" % sorted(rep.failed_axioms()))
    d = b.duoidal
    c, h = d.cat, d.h
    M, J = b.carrier, d.J
    one_d = lambda X: h.t(c.identity(X), b.comult)
    vl = c.compose_all(d.circ(h.lunit(M), b.mult), d.gamma(J, M, M, M), one_d(d.circ(J, M)))
    vr = c.compose_all(d.circ(b.mult, h.lunit(M)), d.gamma(M, J, M, M), one_d(d.circ(M, J)))
    return FusionPair(b, vl, vr)


@dataclass(frozen=True)
class HopfClass:
    left: bool
    right: bool

    @property
    def hopf(self) -> bool:
        return self.left and self.right

    def to_json(self):
        return {"left": self.left, "right": self.right, "hopf": self.hopf}


def classify_hopf(fp: FusionPair) -> HopfClass:
    c = fp.bimonoid.duoidal.cat
    return HopfClass(c.inverse(fp.v_left) is not None, c.inverse(fp.v_right) is not None)


def monad_fusion_instance(b: Bimonoid, x, y) -> tuple[Arrow, Arrow]:
    """v_l(X, Y): (X o (Y*M)) * M -> (X*M) o (Y*M) and v_r(X, Y): ((X*M) o Y) * M -> (X*M) o (Y*M)."""
    d = b.duoidal
    c, h = d.cat, d.h
    M = b.carrier
    iX, iY = c.identity(x), c.identity(y)
    iXM, iYM = c.identity(h.t(x, M)), c.identity(h.t(y, M))
    src_l = d.circ(x, h.t(y, M))
    vl = c.compose_all(d.circ(iXM, h.t(iY, b.mult)), d.circ(iXM, h.assoc(y, M, M)),
                       d.gamma(x, h.t(y, M), M, M), h.t(c.identity(src_l), b.comult))
    src_r = d.circ(h.t(x, M), y)
    vr = c.compose_all(d.circ(h.t(iX, b.mult), iYM), d.circ(h.assoc(x, M, M), iYM),
                       d.gamma(h.t(x, M), y, M, M), h.t(c.identity(src_r), b.comult))
    return vl, vr


def fusion_unit_coherence(b: Bimonoid, fp: FusionPair | None = None) -> Report:
    """(l o l) . v_l(J, J) = v_l . ((1 o l) * 1), and the mirror identity for v_r."""
    d = b.duoidal
    c, h = d.cat, d.h
    M, J = b.carrier, d.J
    fp = fp or build_fusion(b, check=False)
    vl, vr = monad_fusion_instance(b, J, J)
    ll = d.circ(h.lunit(M), h.lunit(M))
    iM, iJ = c.identity(M), c.identity(J)
    rep = Report("fusion at (J, J)")
    lhs = c.compose(ll, vl)
    rhs = c.compose(fp.v_left, h.t(d.circ(iJ, h.lunit(M)), iM))
    rep.check("left", "unit-coherence", lhs == rhs)
    lhs = c.compose(ll, vr)
    rhs = c.compose(fp.v_right, h.t(d.circ(h.lunit(M), iJ), iM))
    rep.check("right", "unit-coherence", lhs == rhs)
    return rep


# closedness ---------------------------------------------------------------------------

def _unit(d: DuoidalStructure, which: str, args):
    o = d.J if which == "J" else d.one
    return d.cat.identity(o) if args and isinstance(args[0], Arrow) else o


# name -> (arity, source, target, label); source/target work on objects and on arrows
SHAPES: dict[str, tuple] = {
    "ii-left": (3, lambda d, X, W, Y: d.circ(X, d.star(W, Y)),
                lambda d, X, W, Y: d.star(W, d.circ(X, Y)), "(ii)"),
    "ii-right": (3, lambda d, W, X, Y: d.circ(d.star(W, X), Y),
                 lambda d, W, X, Y: d.star(W, d.circ(X, Y)), "(ii)"),
    "iip-left": (2, lambda d, X, Y: d.star(X, d.circ(_unit(d, "J", (X,)), Y)),
                 lambda d, X, Y: d.circ(X, Y), "(ii)'"),
    "iip-right": (2, lambda d, X, Y: d.star(Y, d.circ(X, _unit(d, "J", (X,)))),
                  lambda d, X, Y: d.circ(X, Y), "(ii)'"),
    "18-left": (2, lambda d, Y, W: d.circ(Y, d.star(W, _unit(d, "1", (Y,)))),
                lambda d, Y, W: d.star(W, Y), "(18)"),
    "18-right": (2, lambda d, W, Y: d.circ(d.star(W, _unit(d, "1", (W,))), Y),
                 lambda d, W, Y: d.star(W, Y), "(18)"),
    "19-left": (1, lambda d, X: d.star(_unit(d, "1", (X,)), d.circ(_unit(d, "J", (X,)), X)),
                lambda d, X: X, "(19)"),
    "19-right": (1, lambda d, X: d.star(_unit(d, "1", (X,)), d.circ(X, _unit(d, "J", (X,)))),
                 lambda d, X: X, "(19)"),
    "20-left": (1, lambda d, X: d.circ(_unit(d, "J", (X,)), d.star(X, _unit(d, "1", (X,)))),
                lambda d, X: X, "(20)"),
    "20-right": (1, lambda d, X: d.circ(d.star(X, _unit(d, "1", (X,))), _unit(d, "J", (X,))),
                 lambda d, X: X, "(20)"),
}


@dataclass(eq=False)
class ClosednessWitness:
    """Candidate components; each entry maps object tuples to arrows.

    ii_left(X, W, Y): X o (W * Y) -> W * (X o Y)
    ii_right(W, X, Y): (W * X) o Y -> W * (X o Y)
    iip_left(X, Y): X * (J o Y) -> X o Y
    iip_right(X, Y): Y * (X o J) -> X o Y
    """

    ii_left: Callable | None = None
    ii_right: Callable | None = None
    iip_left: Callable | None = None
    iip_right: Callable | None = None
    name: str = ""

    def has_ii(self) -> bool:
        return self.ii_left is not None and self.ii_right is not None

    def has_iip(self) -> bool:
        return self.iip_left is not None and self.iip_right is not None


def check_family(d: DuoidalStructure, shape: str, fn: Callable, objects: Sequence, rep: Report,
                 id_prefix: str = "") -> bool:
    """Typing, invertibility and naturality (one variable at a time) of a component family."""
    arity, src, tgt, label = SHAPES[shape]
    c = d.cat
    ok = True
    name = id_prefix + shape
    for objs in product(objects, repeat=arity):
        try:
            phi = fn(*objs)
        except (StructureError, KeyError, ValueError) as e:
            ok &= rep.check(name + "-defined", label, False, objects=objs, error=str(e))
            continue
        typed = phi.src == src(d, *objs) and phi.tgt == tgt(d, *objs)
        ok &= rep.check(name + "-typed", label, typed, objects=objs)
        if not typed:
            continue
        ok &= rep.check(name + "-invertible", label, c.inverse(phi) is not None, objects=objs)
        for i in range(arity):
            for o2 in objects:
                for f in c.generators(objs[i], o2):
                    objs2 = objs[:i] + (o2,) + objs[i + 1:]
                    args = tuple(f if k == i else c.identity(o) for k, o in enumerate(objs))
                    lhs = c.compose(tgt(d, *args), phi)
                    rhs = c.compose(fn(*objs2), src(d, *args))
                    ok &= rep.check(name + "-natural", label, lhs == rhs,
                                    objects=objs, variable=i, arrow=c.elem(f), target=o2)
    return ok


def _inv(d: DuoidalStructure, f: Arrow) -> Arrow:
    g = d.cat.inverse(f)
    if g is None:
        raise StructureError("component is not invertible")
    return g


def iip_from_ii(d: DuoidalStructure, w: ClosednessWitness) -> ClosednessWitness:
    c, h, v = d.cat, d.h, d.v
    J = d.J

    def left(X, Y):
        # X * (J o Y) -> (X * J) o Y -> X o Y
        return c.compose(v.t(h.runit(X), c.identity(Y)), _inv(d, w.ii_right(X, J, Y)))

    def right(X, Y):
        # Y * (X o J) -> X o (Y * J) -> X o Y
        return c.compose(v.t(c.identity(X), h.runit(Y)), _inv(d, w.ii_left(X, Y, J)))
    return ClosednessWitness(iip_left=left, iip_right=right, name="(ii)' from (ii)")


def ii_from_iip(d: DuoidalStructure, w: ClosednessWitness) -> ClosednessWitness:
    c, h = d.cat, d.h

    def left(X, W, Y):
        # X o (W * Y) -> (W * Y) * (X o J) -> W * (Y * (X o J)) -> W * (X o Y)
        return c.compose_all(h.t(c.identity(W), w.iip_right(X, Y)),
                             h.assoc(W, Y, d.circ(X, d.J)),
                             _inv(d, w.iip_right(X, h.t(W, Y))))

    def right(W, X, Y):
        # (W * X) o Y -> (W * X) * (J o Y) -> W * (X * (J o Y)) -> W * (X o Y)
        return c.compose_all(h.t(c.identity(W), w.iip_left(X, Y)),
                             h.assoc(W, X, d.circ(d.J, Y)),
                             _inv(d, w.iip_left(h.t(W, X), Y)))
    return ClosednessWitness(ii_left=left, ii_right=right, name="(ii) from (ii)'")


def consequences(d: DuoidalStructure, ii: ClosednessWitness, iip: ClosednessWitness) -> dict:
    c, h, v = d.cat, d.h, d.v
    one = d.one

    def c18l(Y, W):
        return c.compose(h.t(c.identity(W), v.runit(Y)), ii.ii_left(Y, W, one))

    def c18r(W, Y):
        return c.compose(h.t(c.identity(W), v.lunit(Y)), ii.ii_right(W, one, Y))

    def c19l(X):
        return c.compose(v.lunit(X), iip.iip_left(one, X))

    def c19r(X):
        return c.compose(v.runit(X), iip.iip_right(X, one))

    def c20l(X):
        return c.compose(h.runit(X), c18l(d.J, X))

    def c20r(X):
        return c.compose(h.runit(X), c18r(X, d.J))
    return {"18-left": c18l, "18-right": c18r, "19-left": c19l, "19-right": c19r,
            "20-left": c20l, "20-right": c20r}


def check_closedness(w: ClosednessWitness, d: DuoidalStructure, objects: Sequence | None = None) -> Report:
    """Check the supplied isomorphisms, derive the missing half, then the consequences."""
    if not (w.has_ii() or w.has_iip()):
        raise StructureError("closedness witness has neither (ii) nor (ii)' components")
    objs = list(d.cat.objects if objects is None else objects)
    rep = Report("closedness %s" % w.name)
    ok = True
    if w.has_ii():
        ok &= check_family(d, "ii-left", w.ii_left, objs, rep)
        ok &= check_family(d, "ii-right", w.ii_right, objs, rep)
    if w.has_iip():
        ok &= check_family(d, "iip-left", w.iip_left, objs, rep)
        ok &= check_family(d, "iip-right", w.iip_right, objs, rep)
    if not ok:
        return rep
    ii = w if w.has_ii() else ii_from_iip(d, w)
    iip = w if w.has_iip() else iip_from_ii(d, w)
    if not w.has_ii():
        check_family(d, "ii-left", ii.ii_left, objs, rep, id_prefix="derived-")
        check_family(d, "ii-right", ii.ii_right, objs, rep, id_prefix="derived-")
    if not w.has_iip():
        check_family(d, "iip-left", iip.iip_left, objs, rep, id_prefix="derived-")
        check_family(d, "iip-right", iip.iip_right, objs, rep, id_prefix="derived-")
    if not rep.ok:
        return rep
    for shape, fn in consequences(d, ii, iip).items():
        check_family(d, shape, fn, objs, rep, id_prefix="consequence-")
    return rep


def braided_witness(d: DuoidalStructure, br: Braiding) -> ClosednessWitness:
    """Witness for a braided structure used as both tensors (from_braided)."""
    m = br.structure
    c = m.cat
    ident = c.identity

    def ii_left(X, W, Y):
        # X(WY) -> (XW)Y -> (WX)Y -> W(XY)
        return c.compose_all(m.assoc(W, X, Y), m.t(br(X, W), ident(Y)), m.assoc_inv(X, W, Y))

    def ii_right(W, X, Y):
        return m.assoc(W, X, Y)

    def iip_left(X, Y):
        return m.t(ident(X), m.lunit(Y))

    def iip_right(X, Y):
        # Y(XJ) -> YX -> XY
        return c.compose(br(Y, X), m.t(ident(Y), m.runit(X)))
    return ClosednessWitness(ii_left, ii_right, iip_left, iip_right, name="braided")


def identity_witness(d: DuoidalStructure) -> ClosednessWitness:
    """Identity components; valid when the shapes agree on objects (e.g. discrete groups)."""
    c = d.cat

    def make(shape):
        _, src, tgt, _ = SHAPES[shape]

        def fn(*objs):
            a, b = src(d, *objs), tgt(d, *objs)
            if a != b:
                raise StructureError("identity witness needs %r = %r" % (a, b))
            return c.identity(a)
        return fn
    return ClosednessWitness(make("ii-left"), make("ii-right"), make("iip-left"), make("iip-right"),
                             name="identity")
