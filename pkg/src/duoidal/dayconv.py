"""Produoidal data, coends, and Day convolution of finite presheaves.

Presheaves are FinSet-valued on a FinSet-enriched carrier.  Coends range over
the carrier's declared objects; the lifted duoidal structure is only checked
when the declared objects are closed under both tensors (otherwise the
re-bracketing maps would need slots that do not exist).

The lifted maps are defined on representatives ``[s, m, n]`` and pushed
through the coend's universal property, so an ill-defined formula raises
instead of silently picking a representative.
"""
from __future__ import annotations

from itertools import product
from typing import Any, Callable, Sequence

from . import vbase as vb
from .duoidal import DuoidalStructure, validate_duoidal
from .fincat import Arrow, FinCat
from .monoidal import MonoidalStructure
from .report import Report


class PresheafError(ValueError):
    pass


class Presheaf:
    """Contravariant functor: values per object, and act(f): P(tgt f) -> P(src f)."""

    def __init__(self, cat: FinCat, values: dict, action: Callable[[Arrow], vb.BaseMap], name: str = ""):
        self.cat = cat
        self.values = dict(values)
        self._action = action
        self._acache: dict = {}
        self.name = name

    def __call__(self, a) -> vb.BaseValue:
        return self.values[a]

    def act(self, f: Arrow) -> vb.BaseMap:
        key = (f.src, f.tgt, f.val)
        m = self._acache.get(key)
        if m is None:
            m = self._acache[key] = self._action(f)
        return m

    def sizes(self) -> dict:
        return {a: self.values[a].size for a in self.cat.objects}

    def to_json(self):
        return self.name or repr(self)

    def __repr__(self):
        return "<Presheaf %s %s>" % (self.name, [self.values[a].size for a in self.cat.objects])


def validate_presheaf(p: Presheaf) -> Report:
    c = p.cat
    objs = c.objects
    rep = Report("presheaf %s" % p.name)
    for a in objs:
        rep.check("identity", "functor", p.act(c.identity(a)) == vb.identity(p(a)), object=a)
    for a, b, d in product(objs, repeat=3):
        for g in c.generators(b, d):
            for f in c.generators(a, b):
                ok = p.act(c.compose(g, f)) == vb.compose(p.act(f), p.act(g))
                rep.check("composition", "functor", ok, objects=(a, b, d), arrows=(c.elem(f), c.elem(g)))
    return rep


def representable(cat: FinCat, b, name: str = "") -> Presheaf:
    values = {x: cat.hom(x, b) for x in cat.objects}

    def action(f):
        return vb.from_function(values[f.tgt], values[f.src],
                                lambda e: cat.elem(cat.compose(cat.from_elem(f.tgt, b, e), f)))
    return Presheaf(cat, values, action, name=name or "y(%s)" % (b,))


def constant(cat: FinCat, size: int, name: str = "") -> Presheaf:
    values = {x: vb.finset(size) for x in cat.objects}
    return Presheaf(cat, values, lambda f: vb.identity(values[f.src]), name=name or "const(%d)" % size)


def empty_presheaf(cat: FinCat) -> Presheaf:
    return constant(cat, 0, name="0")


class PresheafMap:
    def __init__(self, source: Presheaf, target: Presheaf, components: dict):
        self.source, self.target = source, target
        self.components = dict(components)

    def __getitem__(self, a) -> vb.BaseMap:
        return self.components[a]

    def is_natural(self) -> bool:
        return not natural_failures(self)


def natural_failures(m: PresheafMap) -> list:
    c = m.source.cat
    bad = []
    for a, b in product(c.objects, repeat=2):
        for h in c.generators(a, b):
            # h: a -> b, actions go b -> a
            lhs = vb.compose(m.target.act(h), m[b])
            rhs = vb.compose(m[a], m.source.act(h))
            if lhs != rhs:
                bad.append((a, b, c.elem(h)))
    return bad


# coends --------------------------------------------------------------------------

class CoendResult:
    """Coend as a quotient of the coproduct of the object slots."""

    def __init__(self, slots: list, slot_values: list, quotient: vb.Quotient, injections: list):
        self.slots = slots
        self.slot_values = slot_values
        self.quotient = quotient
        self.value = quotient.value
        self._inj = injections
        self._offsets = []
        off = 0
        for v in slot_values:
            self._offsets.append(off)
            off += v.size
        self._index = {k: i for i, k in enumerate(slots)}

    def injection(self, key) -> vb.BaseMap:
        """slot value -> coend."""
        return vb.compose(self.quotient.projection, self._inj[self._index[key]])

    def cls(self, key, e) -> int:
        """Class of element e of the given slot (FinSet)."""
        i = self._index[key]
        return self.quotient.projection(self._offsets[i] + e)

    def representative(self, q: int):
        """(slot key, element) for the canonical representative of a class."""
        k = self.quotient.section[q]
        for i in range(len(self._offsets) - 1, -1, -1):
            if k >= self._offsets[i] and self.slot_values[i].size:
                return self.slots[i], k - self._offsets[i]
        raise PresheafError("empty coend has no representatives")

    def factor(self, maps: dict, target: vb.BaseValue) -> vb.BaseMap:
        """The map out of the coend induced by one map per slot; raises if not dinatural."""
        src, _ = vb.coproduct(self.slot_values, kind=target.kind)
        cp = vb.copair([maps[k] for k in self.slots], src, target)
        return self.quotient.factor(cp)


def coend(slots: Sequence[tuple[Any, vb.BaseValue]], relations: Sequence[tuple], kind: vb.BaseKind = vb.FINSET) -> CoendResult:
    """Coequalizer of the two action maps from morphism slots to object slots.

    ``relations`` holds tuples (W, key1, map1, key2, map2) with map_i: W -> slot key_i.
    """
    keys = [k for k, _ in slots]
    values = [v for _, v in slots]
    index = {k: i for i, k in enumerate(keys)}
    total, injections = vb.coproduct(values, kind=kind)
    rel_values = [r[0] for r in relations]
    rel_total, rel_inj = vb.coproduct(rel_values, kind=kind)
    left = vb.copair([vb.compose(injections[index[k1]], m1) for (_, k1, m1, _, _) in relations],
                     rel_total, total)
    right = vb.copair([vb.compose(injections[index[k2]], m2) for (_, _, _, k2, m2) in relations],
                      rel_total, total)
    q = vb.coequalizer(left, right)
    return CoendResult(keys, values, q, injections)


# produoidal data ------------------------------------------------------------------

STAR, CIRC = "*", "o"


class ProduoidalData:
    """S(A; X, Y) = F(A, X * Y), R(A; X, Y) = F(A, X o Y), H = F(-, J), K = F(-, 1).

    ``s_action`` / ``r_action`` override the contravariant action in A, as a
    function (h, s) -> arrow with h: A' -> A and s: A -> X (.) Y.
    """

    def __init__(self, d: DuoidalStructure, s_action: Callable | None = None,
                 r_action: Callable | None = None):
        self.d = d
        self.cat = d.cat
        self._aact = {STAR: s_action, CIRC: r_action}
        self._conv: dict = {}
        self._keep: list = []
        self.H = representable(self.cat, d.J, name="H")
        self.K = representable(self.cat, d.one, name="K")

    def structure(self, which) -> MonoidalStructure:
        return self.d.h if which == STAR else self.d.v

    def tensor(self, which, x, y):
        return self.structure(which).t(x, y)

    def value(self, which, a, x, y) -> vb.BaseValue:
        return self.cat.hom(a, self.tensor(which, x, y))

    def S(self, a, x, y) -> vb.BaseValue:
        return self.value(STAR, a, x, y)

    def R(self, a, x, y) -> vb.BaseValue:
        return self.value(CIRC, a, x, y)

    def act_a(self, which, h: Arrow, s: Arrow) -> Arrow:
        fn = self._aact[which]
        if fn is not None:
            return fn(h, s)
        return self.cat.compose(s, h)

    def act_x(self, which, f: Arrow, y, s: Arrow) -> Arrow:
        m = self.structure(which)
        return self.cat.compose(m.t(f, self.cat.identity(y)), s)

    def act_y(self, which, g: Arrow, x, s: Arrow) -> Arrow:
        m = self.structure(which)
        return self.cat.compose(m.t(self.cat.identity(x), g), s)

    def unit_presheaf(self, which) -> Presheaf:
        return self.H if which == STAR else self.K

    def closed(self) -> bool:
        objs = set(self.cat.objects)
        ok = all(self.tensor(w, x, y) in objs for w in (STAR, CIRC) for x in objs for y in objs)
        return ok and self.d.J in objs and self.d.one in objs

    def convolve(self, which, m: Presheaf, n: Presheaf) -> "DayPresheaf":
        key = (which, id(m), id(n))
        out = self._conv.get(key)
        if out is None:
            out = self._conv[key] = DayPresheaf(self, which, m, n)
            self._keep.append((m, n))
        return out


def produoidal_from_duoidal(d: DuoidalStructure, **overrides) -> ProduoidalData:
    return ProduoidalData(d, **overrides)


class DayPresheaf(Presheaf):
    """(M (.) N)(A) = coend over X, Y of P(A; X, Y) x M(X) x N(Y)."""

    def __init__(self, p: ProduoidalData, which, m: Presheaf, n: Presheaf):
        if m.cat is not p.cat or n.cat is not p.cat:
            raise PresheafError("presheaves over a different carrier")
        self.p, self.which, self.m, self.n = p, which, m, n
        c = p.cat
        objs = c.objects
        self.coends: dict = {}
        self._slots: dict = {}
        values = {}
        # identity generators only relate an element to itself
        gens = {(x, x2): [f for f in c.generators(x, x2) if x != x2 or f != c.identity(x)]
                for x, x2 in product(objs, repeat=2)}
        for a in objs:
            slots = []
            for x, y in product(objs, repeat=2):
                v = vb.tensor(vb.tensor(p.value(which, a, x, y), m(x)), n(y))
                self._slots[(a, x, y)] = v
                slots.append(((x, y), v))
            rels = []
            for x, x2, y in product(objs, repeat=3):
                for f in gens[(x, x2)]:
                    rels.append(self._rel_x(a, f, y))
            for x, y, y2 in product(objs, repeat=3):
                for g in gens[(y, y2)]:
                    rels.append(self._rel_y(a, g, x))
            ce = coend(slots, rels)
            self.coends[a] = ce
            values[a] = ce.value
        super().__init__(c, values, self._act, name="(%s %s %s)" % (m.name, which, n.name))

    # element codecs
    def _split(self, a, x, y, e):
        nm, nn = self.m(x).size, self.n(y).size
        sm, k = divmod(e, nn)
        s, mm = divmod(sm, nm)
        return self.p.cat.from_elem(a, self.p.tensor(self.which, x, y), s), mm, k

    def _join(self, x, y, s: Arrow, mm, k) -> int:
        c = self.p.cat
        return (c.elem(s) * self.m(x).size + mm) * self.n(y).size + k

    def _rel_x(self, a, f: Arrow, y):
        p, w = self.p, self.which
        x, x2 = f.src, f.tgt
        src = vb.tensor(vb.tensor(p.value(w, a, x, y), self.m(x2)), self.n(y))
        ma = self.m.act(f)

        def to_x2(e):
            s, mm, k = self._split_with(a, x, y, x2, e)
            return self._join(x2, y, p.act_x(w, f, y, s), mm, k)

        def to_x(e):
            s, mm, k = self._split_with(a, x, y, x2, e)
            return self._join(x, y, s, ma(mm), k)
        return (src, (x2, y), vb.from_function(src, self._slot(a, x2, y), to_x2),
                (x, y), vb.from_function(src, self._slot(a, x, y), to_x))

    def _rel_y(self, a, g: Arrow, x):
        p, w = self.p, self.which
        y, y2 = g.src, g.tgt
        src = vb.tensor(vb.tensor(p.value(w, a, x, y), self.m(x)), self.n(y2))
        na = self.n.act(g)

        def to_y2(e):
            nn = self.n(y2).size
            sm, k = divmod(e, nn)
            s_i, mm = divmod(sm, self.m(x).size)
            s = p.cat.from_elem(a, p.tensor(w, x, y), s_i)
            return self._join(x, y2, p.act_y(w, g, x, s), mm, k)

        def to_y(e):
            nn = self.n(y2).size
            sm, k = divmod(e, nn)
            s_i, mm = divmod(sm, self.m(x).size)
            s = p.cat.from_elem(a, p.tensor(w, x, y), s_i)
            return self._join(x, y, s, mm, na(k))
        return (src, (x, y2), vb.from_function(src, self._slot(a, x, y2), to_y2),
                (x, y), vb.from_function(src, self._slot(a, x, y), to_y))

    def _split_with(self, a, x, y, x2, e):
        # element of S(A; x, y) x M(x2) x N(y)
        nm, nn = self.m(x2).size, self.n(y).size
        sm, k = divmod(e, nn)
        s, mm = divmod(sm, nm)
        return self.p.cat.from_elem(a, self.p.tensor(self.which, x, y), s), mm, k

    def _slot(self, a, x, y) -> vb.BaseValue:
        return self._slots[(a, x, y)]

    def cls(self, a, x, y, s: Arrow, mm: int, k: int) -> int:
        return self.coends[a].cls((x, y), self._join(x, y, s, mm, k))

    def rep(self, a, q: int):
        """(x, y, s, m, n) representing the class q at a."""
        (x, y), e = self.coends[a].representative(q)
        s, mm, k = self._split(a, x, y, e)
        return x, y, s, mm, k

    def induced(self, target: Presheaf, fn: Callable) -> dict:
        """Components of the presheaf map [s, m, n] -> fn(a, x, y, s, m, n)."""
        comps = {}
        for a in self.p.cat.objects:
            ce = self.coends[a]
            maps = {}
            for (x, y) in ce.slots:
                slot = self._slot(a, x, y)
                maps[(x, y)] = vb.from_function(
                    slot, target(a), lambda e, x=x, y=y, a=a: fn(a, x, y, *self._split(a, x, y, e)))
            comps[a] = ce.factor(maps, target(a))
        return comps

    def _act(self, h: Arrow) -> vb.BaseMap:
        a2, a = h.src, h.tgt
        p = self.p
        ce = self.coends[a]
        maps = {}
        for (x, y) in ce.slots:
            maps[(x, y)] = vb.from_function(
                self._slot(a, x, y), self.values[a2],
                lambda e, x=x, y=y: self.cls(a2, x, y, p.act_a(self.which, h, self._split(a, x, y, e)[0]),
                                             *self._split(a, x, y, e)[1:]))
        return ce.factor(maps, self.values[a2])


def day_convolve(p: ProduoidalData, which: str, m: Presheaf, n: Presheaf) -> DayPresheaf:
    if which not in (STAR, CIRC):
        raise ValueError("which must be '*' or 'o'")
    return p.convolve(which, m, n)


# the lifted structure ------------------------------------------------------------

class PresheafCategory(FinCat):
    """Presheaves and presheaf maps, arrows carrying component tables.

    Only used to instantiate axioms at witnesses; ``generators`` is empty, so
    naturality in the presheaf variables is not enumerated.
    """

    def __init__(self, p: ProduoidalData, witnesses: Sequence[Presheaf]):
        self.p = p
        self.base = vb.FINSET
        self.objects = list(witnesses)
        self.name = "presheaves"

    def has_object(self, a) -> bool:
        return isinstance(a, Presheaf)

    def arrow(self, m: PresheafMap) -> Arrow:
        return Arrow(m.source, m.target, tuple(m[a].data for a in self.p.cat.objects))

    def comps(self, f: Arrow) -> dict:
        objs = self.p.cat.objects
        return {a: vb.BaseMap(f.src(a), f.tgt(a), f.val[i]) for i, a in enumerate(objs)}

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt is not g.src:
            raise PresheafError("cannot compose presheaf maps")
        objs = self.p.cat.objects
        return Arrow(f.src, g.tgt, tuple(tuple(g.val[i][v] for v in f.val[i]) for i in range(len(objs))))

    def identity(self, a) -> Arrow:
        return Arrow(a, a, tuple(tuple(range(a(o).size)) for o in self.p.cat.objects))

    def generators(self, a, b) -> list:
        return []

    def inverse(self, f: Arrow) -> Arrow | None:
        inv = []
        for a, m in self.comps(f).items():
            i = vb.is_invertible(m)
            if i is None:
                return None
            inv.append(i.data)
        return Arrow(f.tgt, f.src, tuple(inv))

    def elem(self, f: Arrow):
        return [list(v) for v in f.val]


def _placeholder(src: vb.BaseValue, tgt: vb.BaseValue) -> vb.BaseMap:
    if src.size and not tgt.size:
        raise PresheafError("no map from a nonempty set to the empty set")
    return vb.BaseMap(src, tgt, [0] * src.size)


class LiftedDuoidal:
    """The duoidal structure on presheaves at a finite set of witnesses."""

    def __init__(self, p: ProduoidalData, witnesses: Sequence[Presheaf]):
        if not p.closed():
            raise PresheafError("declared objects are not closed under the tensors")
        self.p = p
        self.pc = PresheafCategory(p, witnesses)
        self.report = Report("lifted maps")
        self._maps: dict = {}
        d = p.d
        self.h = self._monoidal(STAR)
        self.v = self._monoidal(CIRC)
        self.duoidal = DuoidalStructure(self.h, self.v, self.gamma, self.mu(), self.tau(), self.delta(),
                                        name="presheaves")

    def _record(self, key, m: PresheafMap | None, err: str | None = None) -> None:
        label = key[0]
        at = [x.name if isinstance(x, Presheaf) else x for x in key[1:] if not isinstance(x, tuple)]
        self.report.check(label + "-well-defined", "coend", err is None, witnesses=at)
        if m is not None:
            bad = natural_failures(m)
            self.report.check(label + "-natural", "Nat_A", not bad, witnesses=at,
                              square=bad[0] if bad else None)

    def _build(self, key, source: Presheaf, target: Presheaf, make: Callable) -> Arrow:
        if key in self._maps:
            return self._maps[key]
        try:
            m = PresheafMap(source, target, make())
            self._record(key, m)
        except vb.NotCoequalizing as e:
            # ill-defined on the coend: record it and continue with a placeholder
            self._record(key, None, str(e))
            m = PresheafMap(source, target, {a: _placeholder(source(a), target(a))
                                             for a in self.p.cat.objects})
        arr = self._maps[key] = self.pc.arrow(m)
        return arr

    def conv(self, which, x, y):
        return self.p.convolve(which, x, y)

    def conv_arr(self, which, f: Arrow, g: Arrow) -> Arrow:
        src = self.conv(which, f.src, g.src)
        tgt = self.conv(which, f.tgt, g.tgt)
        fc, gc = self.pc.comps(f), self.pc.comps(g)

        def make():
            return src.induced(tgt, lambda a, x, y, s, mm, k: tgt.cls(a, x, y, s, fc[x](mm), gc[y](k)))
        return self._build(("tensor" + which, f, g, f.val, g.val), src, tgt, make)

    def _monoidal(self, which) -> MonoidalStructure:
        p, c = self.p, self.p.cat
        m = p.structure(which)
        U = p.unit_presheaf(which)

        def assoc(P, Q, R):
            PQ = self.conv(which, P, Q)
            src = self.conv(which, PQ, R)
            QR = self.conv(which, Q, R)
            tgt = self.conv(which, P, QR)

            def fn(a, u, z, s, e, r):
                x, y, t, mm, n = PQ.rep(u, e)
                s2 = c.compose_all(m.assoc(x, y, z), m.t(t, c.identity(z)), s)
                yz = m.t(y, z)
                inner = QR.cls(yz, y, z, c.identity(yz), n, r)
                return tgt.cls(a, x, yz, s2, mm, inner)
            return self._build(("assoc" + which, P, Q, R), src, tgt,
                               lambda: src.induced(tgt, fn))

        def lunit(P):
            src = self.conv(which, U, P)

            def fn(a, x, y, s, j, mm):
                jarr = c.from_elem(x, m.unit, j)
                return P.act(c.compose_all(m.lunit(y), m.t(jarr, c.identity(y)), s))(mm)
            return self._build(("lunit" + which, P), src, P, lambda: src.induced(P, fn))

        def runit(P):
            src = self.conv(which, P, U)

            def fn(a, x, y, s, mm, j):
                jarr = c.from_elem(y, m.unit, j)
                return P.act(c.compose_all(m.runit(x), m.t(c.identity(x), jarr), s))(mm)
            return self._build(("runit" + which, P), src, P, lambda: src.induced(P, fn))

        return MonoidalStructure(self.pc, lambda x, y: self.conv(which, x, y),
                                 lambda f, g: self.conv_arr(which, f, g), U, assoc, lunit, runit,
                                 name="Day(%s)" % which)

    def gamma(self, P, Q, R, T) -> Arrow:
        p, c, d = self.p, self.p.cat, self.p.d
        PQ, RT = self.conv(CIRC, P, Q), self.conv(CIRC, R, T)
        src = self.conv(STAR, PQ, RT)
        PR, QT = self.conv(STAR, P, R), self.conv(STAR, Q, T)
        tgt = self.conv(CIRC, PR, QT)

        def fn(a, x, y, s, e1, e2):
            u, v, r1, mm, n = PQ.rep(x, e1)
            u2, v2, r2, pp, q = RT.rep(y, e2)
            r = c.compose_all(d.gamma(u, v, u2, v2), d.star(r1, r2), s)
            uu, vv = d.star(u, u2), d.star(v, v2)
            left = PR.cls(uu, u, u2, c.identity(uu), mm, pp)
            right = QT.cls(vv, v, v2, c.identity(vv), n, q)
            return tgt.cls(a, uu, vv, r, left, right)
        return self._build(("gamma", P, Q, R, T), src, tgt, lambda: src.induced(tgt, fn))

    def mu(self) -> Arrow:
        p, c, d = self.p, self.p.cat, self.p.d
        K = p.K
        src = self.conv(STAR, K, K)

        def fn(a, x, y, s, k1, k2):
            a1, a2 = c.from_elem(x, d.one, k1), c.from_elem(y, d.one, k2)
            return c.elem(c.compose_all(d.mu, d.star(a1, a2), s))
        return self._build(("mu",), src, K, lambda: src.induced(K, fn))

    def tau(self) -> Arrow:
        p, c, d = self.p, self.p.cat, self.p.d

        def make():
            return {a: vb.from_function(p.H(a), p.K(a),
                                        lambda j, a=a: c.elem(c.compose(d.tau, c.from_elem(a, d.J, j))))
                    for a in c.objects}
        return self._build(("tau",), p.H, p.K, make)

    def delta(self) -> Arrow:
        p, c, d = self.p, self.p.cat, self.p.d
        HH = self.conv(CIRC, p.H, p.H)
        iJ = c.elem(c.identity(d.J))

        def make():
            return {a: vb.from_function(p.H(a), HH(a),
                                        lambda j, a=a: HH.cls(a, d.J, d.J,
                                                              c.compose(d.delta, c.from_elem(a, d.J, j)),
                                                              iJ, iJ))
                    for a in c.objects}
        return self._build(("delta",), p.H, HH, make)


def check_presheaf_duoidal_pointwise(p: ProduoidalData, witnesses: Sequence[Presheaf]) -> Report:
    """Instantiate the duoidal axioms for the lifted structure at the witnesses."""
    lifted = LiftedDuoidal(p, witnesses)
    rep = Report("presheaf duoidal")
    rep.merge(validate_duoidal(lifted.duoidal, list(witnesses)))
    rep.merge(lifted.report)
    return rep


def yoneda_iso(p: ProduoidalData, which: str, a, b) -> PresheafMap:
    """y(a) (.) y(b) -> y(a (.) b), [s, u, v] -> (u (.) v) . s."""
    c = p.cat
    m = p.structure(which)
    ab = m.t(a, b)
    ya, yb = representable(c, a), representable(c, b)
    yab = representable(c, ab)
    src = p.convolve(which, ya, yb)

    def fn(z, x, y, s, u, v):
        return c.elem(c.compose(m.t(c.from_elem(x, a, u), c.from_elem(y, b, v)), s))
    return PresheafMap(src, yab, src.induced(yab, fn))


def check_yoneda(p: ProduoidalData, which: str, pairs: Sequence | None = None) -> Report:
    c = p.cat
    rep = Report("yoneda %s" % which)
    pairs = list(product(c.objects, repeat=2) if pairs is None else pairs)
    for a, b in pairs:
        iso = yoneda_iso(p, which, a, b)
        inv = all(vb.is_invertible(iso[z]) is not None for z in c.objects)
        rep.check("yoneda-invertible", "strong-monoidal", inv, objects=(a, b))
        rep.check("yoneda-natural", "Nat_A", iso.is_natural(), objects=(a, b))
    return rep
