"""Warpings of monoidal categories and the warped tensor A [] B = TA (x) B."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .duoidal import DuoidalStructure, braided_gamma
from .fincat import Arrow, VFunctor, identity_functor, validate_functor
from .hopf import ClosednessWitness, consequences, iip_from_ii, ii_from_iip
from .monoidal import Braiding, MonoidalStructure, StructureError, validate_monoidal
from .report import Report


@dataclass(eq=False)
class WarpingData:
    """(T, K, v, v0, k) on a monoidal structure ``m``.

    v(A, B): T(TA (x) B) -> TA (x) TB, v0: TK -> I, k(A): TA (x) K -> A.
    The optional fields make T a monoidal functor and K a monoid; they are
    only needed for :func:`duoidal_from_warped_lax_braided`.
    """

    m: MonoidalStructure
    T: VFunctor
    K: object
    v: Callable
    v0: Arrow
    k: Callable
    phi: Callable | None = None
    phi0: Arrow | None = None
    k_mult: Arrow | None = None
    k_unit: Arrow | None = None
    name: str = ""


def validate_warping(w: WarpingData, objects: Sequence | None = None) -> Report:
    m, T = w.m, w.T
    c, t = m.cat, m.t
    objs = list(c.objects if objects is None else objects)
    rep = Report("warping %s" % w.name)
    rep.merge(validate_functor(T, objs), "T/")
    I, K = m.unit, w.K
    rep.check("v0-typed", "shape", w.v0.src == T(K) and w.v0.tgt == I)
    rep.check("v0-invertible", "iso", c.inverse(w.v0) is not None)
    for A, B in product(objs, repeat=2):
        v = w.v(A, B)
        typed = v.src == T(t(T(A), B)) and v.tgt == t(T(A), T(B))
        rep.check("v-typed", "shape", typed, objects=(A, B))
        if typed:
            rep.check("v-invertible", "iso", c.inverse(v) is not None, objects=(A, B))
    for A in objs:
        try:
            k = w.k(A)
        except (StructureError, ValueError, IndexError) as e:
            rep.check("k-defined", "shape", False, object=A, error=str(e))
            continue
        typed = k.src == t(T(A), K) and k.tgt == A
        rep.check("k-typed", "shape", typed, object=A)
        if typed:
            rep.check("k-invertible", "iso", c.inverse(k) is not None, object=A)
    if not rep.ok:
        return rep
    iK = c.identity(K)
    for A, B in product(objs, repeat=2):
        for A2 in objs:
            for f in c.generators(A, A2):
                lhs = c.compose(w.v(A2, B), T(t(T(f), c.identity(B))))
                rhs = c.compose(t(T(f), T(c.identity(B))), w.v(A, B))
                rep.check("v-natural", "Nat_v", lhs == rhs, objects=(A, B), variable=0, arrow=c.elem(f))
        for B2 in objs:
            for g in c.generators(B, B2):
                lhs = c.compose(w.v(A, B2), T(t(c.identity(T(A)), g)))
                rhs = c.compose(t(c.identity(T(A)), T(g)), w.v(A, B))
                rep.check("v-natural", "Nat_v", lhs == rhs, objects=(A, B), variable=1, arrow=c.elem(g))
    for A, A2 in product(objs, repeat=2):
        for f in c.generators(A, A2):
            ok = c.compose(w.k(A2), t(T(f), iK)) == c.compose(f, w.k(A))
            rep.check("k-natural", "Nat_k", ok, objects=(A, A2), arrow=c.elem(f))
    for A, B, C in product(objs, repeat=3):
        TA, TB, TC = T(A), T(B), T(C)
        iTC = c.identity(TC)
        lhs = c.compose_all(m.assoc(TA, TB, TC), t(w.v(A, B), iTC), w.v(t(TA, B), C))
        rhs = c.compose_all(t(c.identity(TA), w.v(B, C)), w.v(A, t(TB, C)),
                            T(m.assoc(TA, TB, C)), T(t(w.v(A, B), c.identity(C))))
        rep.check("warp-assoc", "(21)", lhs == rhs, objects=(A, B, C))
    for A in objs:
        TA = T(A)
        lhs = c.compose_all(m.runit(TA), t(c.identity(TA), w.v0), w.v(A, K))
        rep.check("warp-unit", "(22)", lhs == T(w.k(A)), object=A)
    return rep


def warp(w: WarpingData, check: bool = False, objects: Sequence | None = None) -> MonoidalStructure:
    """A [] B = TA (x) B, unit K, a = a . (v (x) 1), l = l . (v0 (x) 1), r = k."""
    if check:
        rep = validate_warping(w, objects)
        if not rep.ok:
            raise StructureError("invalid warping: %s" % sorted(rep.failed_axioms()))
    m, T = w.m, w.T
    c, t = m.cat, m.t

    def tarr(f, g):
        return t(T(f), g)

    def assoc(A, B, C):
        return c.compose(m.assoc(T(A), T(B), C), t(w.v(A, B), c.identity(C)))

    def lunit(B):
        return c.compose(m.lunit(B), t(w.v0, c.identity(B)))
    return MonoidalStructure(c, lambda a, b: t(T(a), b), tarr, w.K, assoc, lunit, w.k,
                             name="warped(%s)" % (w.name or m.name))


def same_structure(m1: MonoidalStructure, m2: MonoidalStructure, objects: Sequence | None = None) -> Report:
    """Table-for-table equality of two monoidal structures on one category."""
    c = m1.cat
    objs = list(c.objects if objects is None else objects)
    rep = Report("structure equality")
    rep.check("unit", "table", m1.unit == m2.unit)
    for a, b in product(objs, repeat=2):
        rep.check("tensor-objects", "table", m1.t(a, b) == m2.t(a, b), objects=(a, b))
    for a, b, a2, b2 in product(objs, repeat=4):
        for f in c.generators(a, a2):
            for g in c.generators(b, b2):
                rep.check("tensor-arrows", "table", m1.t(f, g) == m2.t(f, g), objects=(a, b, a2, b2))
    for a, b, d in product(objs, repeat=3):
        rep.check("assoc", "table", m1.assoc(a, b, d) == m2.assoc(a, b, d), objects=(a, b, d))
    for a in objs:
        rep.check("lunit", "table", m1.lunit(a) == m2.lunit(a), object=a)
        rep.check("runit", "table", m1.runit(a) == m2.runit(a), object=a)
    return rep


# instances -------------------------------------------------------------------------

def identity_warping(m: MonoidalStructure) -> WarpingData:
    c = m.cat
    I = m.unit
    return WarpingData(m, identity_functor(c), I, lambda A, B: c.identity(m.t(A, B)), c.identity(I),
                       m.runit, phi=lambda A, B: c.identity(m.t(A, B)), phi0=c.identity(I),
                       k_mult=m.lunit(I), k_unit=c.identity(I), name="identity")


def shift_functor(m: MonoidalStructure, g) -> VFunctor:
    """A -> g (x) A on a discrete monoidal category."""
    c = m.cat
    return VFunctor(c, c, lambda a: m.t(g, a), lambda f: c.identity(m.t(g, f.src)), name="shift")


def shift_warping(m: MonoidalStructure, g, inverse) -> WarpingData:
    """T = g (x) -, K = g^{-1}, all components identities (discrete groups)."""
    c = m.cat
    T = shift_functor(m, g)
    K = inverse
    if T(K) != m.unit:
        raise StructureError("K is not an inverse of the shift")
    return WarpingData(m, T, K, lambda A, B: c.identity(m.t(T(A), T(B))), c.identity(m.unit),
                       lambda A: c.identity(A), name="shift")


def constant_warping(m: MonoidalStructure) -> WarpingData:
    """T constant at the unit; k cannot be invertible (negative example)."""
    c = m.cat
    I = m.unit
    T = VFunctor(c, c, lambda a: I, lambda f: c.identity(I), name="const")

    def k(A):
        src = m.t(I, I)
        gens = c.generators(src, A)
        if not gens:
            raise StructureError("no arrow %r -> %r" % (src, A))
        return gens[0]
    return WarpingData(m, T, I, lambda A, B: c.identity(m.t(I, I)), m.lunit(I), k, name="constant")


def synthesize_warping(m: MonoidalStructure, T: VFunctor, v: Callable, objects: Sequence | None = None,
                       name: str = "") -> WarpingData:
    """Complete (T, v) to a warping when T is an equivalence on the declared objects.

    K and v0 are found by search (TK iso to I); k is the unique arrow whose
    T-image is r . (1 (x) v0) . v(A, K).
    """
    c = m.cat
    objs = list(c.objects if objects is None else objects)
    I = m.unit
    found = None
    for K in objs:
        for f in c.generators(T(K), I):
            if c.inverse(f) is not None:
                found = (K, f)
                break
        if found:
            break
    if found is None:
        raise StructureError("no object K with TK isomorphic to the unit")
    K, v0 = found
    cache: dict = {}

    def k(A):
        if A not in cache:
            TA = T(A)
            want = c.compose_all(m.runit(TA), m.t(c.identity(TA), v0), v(A, K))
            hits = [f for f in c.generators(m.t(TA, K), A) if T(f) == want]
            if len(hits) != 1:
                raise StructureError("T is not fully faithful at %r" % (A,))
            cache[A] = hits[0]
        return cache[A]
    return WarpingData(m, T, K, v, v0, k, name=name or "synthesized")


# from a duoidal structure ----------------------------------------------------------

def _rho(d: DuoidalStructure, w2) -> Callable:
    """(W * 1) o Y -> W * Y, from a witness or a callable."""
    if callable(w2) and not isinstance(w2, ClosednessWitness):
        return w2
    if not isinstance(w2, ClosednessWitness) or not (w2.has_ii() or w2.has_iip()):
        raise StructureError("warping_from_duoidal needs the isomorphism (W * 1) o Y -> W * Y")
    ii = w2 if w2.has_ii() else ii_from_iip(d, w2)
    iip = w2 if w2.has_iip() else iip_from_ii(d, w2)
    return consequences(d, ii, iip)["18-right"]


def warping_from_duoidal(d: DuoidalStructure, w2) -> WarpingData:
    """Warping of the vertical structure with T = - * 1 and K = J."""
    if w2 is None:
        raise StructureError("warping_from_duoidal needs a witness")
    rho = _rho(d, w2)
    c, h, v = d.cat, d.h, d.v
    one = d.one
    i1 = c.identity(one)
    T = VFunctor(c, c, lambda a: h.t(a, one), lambda f: h.t(f, i1), name="- * 1")

    def inv(f):
        g = c.inverse(f)
        if g is None:
            raise StructureError("witness component is not invertible")
        return g

    def vv(A, B):
        # ((A*1) o B) * 1 -> (A*B) * 1 -> A * (B*1) -> (A*1) o (B*1)
        return c.compose_all(inv(rho(A, h.t(B, one))), h.assoc(A, B, one), h.t(rho(A, B), i1))

    def k(A):
        # (A*1) o J -> A * J -> A
        return c.compose(h.runit(A), rho(A, d.J))
    return WarpingData(v, T, d.J, vv, h.lunit(one), k, name="- * 1")


def check_warp_iso(warped: MonoidalStructure, target: MonoidalStructure, iso: Callable,
                   objects: Sequence | None = None) -> Report:
    """iso(A, B): A [] B -> A * B is natural, invertible and monoidal (identity functor)."""
    c = warped.cat
    objs = list(c.objects if objects is None else objects)
    rep = Report("warp iso")
    rep.check("units", "shape", warped.unit == target.unit)
    for A, B in product(objs, repeat=2):
        f = iso(A, B)
        typed = f.src == warped.t(A, B) and f.tgt == target.t(A, B)
        rep.check("typed", "shape", typed, objects=(A, B))
        rep.check("invertible", "iso", typed and c.inverse(f) is not None, objects=(A, B))
        for A2, B2 in product(objs, repeat=2):
            for g in c.generators(A, A2):
                for h in c.generators(B, B2):
                    lhs = c.compose(target.t(g, h), f)
                    rhs = c.compose(iso(A2, B2), warped.t(g, h))
                    rep.check("natural", "Nat", lhs == rhs, objects=(A, B, A2, B2))
    for A, B, C in product(objs, repeat=3):
        lhs = c.compose_all(target.assoc(A, B, C), target.t(iso(A, B), c.identity(C)), iso(warped.t(A, B), C))
        rhs = c.compose_all(target.t(c.identity(A), iso(B, C)), iso(A, warped.t(B, C)), warped.assoc(A, B, C))
        rep.check("assoc", "monoidal-functor", lhs == rhs, objects=(A, B, C))
    for A in objs:
        rep.check("left-unit", "monoidal-functor",
                  c.compose(target.lunit(A), iso(warped.unit, A)) == warped.lunit(A), object=A)
        rep.check("right-unit", "monoidal-functor",
                  c.compose(target.runit(A), iso(A, warped.unit)) == warped.runit(A), object=A)
    return rep


# duoidal structures from warped lax braided categories ---------------------------------------

def warping_monoidality(w: WarpingData, br: Braiding, objects: Sequence | None = None) -> Report:
    """T monoidal, K a monoid, v and k monoidal natural, v0 a monoid morphism."""
    m, T = w.m, w.T
    c, t = m.cat, m.t
    objs = list(c.objects if objects is None else objects)
    rep = Report("warping monoidality")
    I, K = m.unit, w.K
    if w.phi is None or w.phi0 is None or w.k_mult is None or w.k_unit is None:
        if w.phi is None:
            # report where no candidate structure map TA (x) TB -> T(A (x) B) exists
            for A, B in product(objs, repeat=2):
                if not c.generators(t(T(A), T(B)), T(t(A, B))):
                    rep.check("phi-exists", "T-monoidal", False, objects=(A, B))
            if not c.generators(I, T(I)):
                rep.check("phi0-exists", "T-monoidal", False)
        rep.check("data", "shape", False, missing="phi, phi0, k_mult, k_unit")
        return rep
    m4 = braided_gamma(m, br)
    phi, phi0 = w.phi, w.phi0
    ident = c.identity
    # T monoidal
    for A, B in product(objs, repeat=2):
        f = phi(A, B)
        if not (f.src == t(T(A), T(B)) and f.tgt == T(t(A, B))):
            rep.check("phi-typed", "T-monoidal", False, objects=(A, B))
            return rep
        for A2, B2 in product(objs, repeat=2):
            for g in c.generators(A, A2):
                for h in c.generators(B, B2):
                    ok = c.compose(T(t(g, h)), f) == c.compose(phi(A2, B2), t(T(g), T(h)))
                    rep.check("phi-natural", "T-monoidal", ok, objects=(A, B, A2, B2))
    for A, B, C in product(objs, repeat=3):
        lhs = c.compose_all(T(m.assoc(A, B, C)), phi(t(A, B), C), t(phi(A, B), ident(T(C))))
        rhs = c.compose_all(phi(A, t(B, C)), t(ident(T(A)), phi(B, C)), m.assoc(T(A), T(B), T(C)))
        rep.check("phi-assoc", "T-monoidal", lhs == rhs, objects=(A, B, C))
    for A in objs:
        lhs = c.compose_all(T(m.lunit(A)), phi(I, A), t(phi0, ident(T(A))))
        rep.check("phi-left-unit", "T-monoidal", lhs == m.lunit(T(A)), object=A)
        lhs = c.compose_all(T(m.runit(A)), phi(A, I), t(ident(T(A)), phi0))
        rep.check("phi-right-unit", "T-monoidal", lhs == m.runit(T(A)), object=A)
    # K a monoid
    mu, eta = w.k_mult, w.k_unit
    iK = ident(K)
    rep.check("K-assoc", "K-monoid",
              c.compose(mu, t(mu, iK)) == c.compose_all(mu, t(iK, mu), m.assoc(K, K, K)))
    rep.check("K-unit", "K-monoid",
              c.compose(mu, t(eta, iK)) == m.lunit(K) and c.compose(mu, t(iK, eta)) == m.runit(K))
    # v0: TK -> I a monoid morphism
    TK = T(K)
    mult_tk = c.compose(T(mu), phi(K, K))
    unit_tk = c.compose(T(eta), phi0)
    rep.check("v0-mult", "v0-monoid", c.compose(w.v0, mult_tk) == c.compose(m.lunit(I), t(w.v0, w.v0)))
    rep.check("v0-unit", "v0-monoid", c.compose(w.v0, unit_tk) == ident(I))
    # v monoidal natural
    for A, B, A2, B2 in product(objs, repeat=4):
        TA, TA2 = T(A), T(A2)
        sigma_s = c.compose_all(T(t(phi(A, A2), ident(t(B, B2)))), T(m4(TA, B, TA2, B2)),
                                phi(t(TA, B), t(TA2, B2)))
        sigma_r = c.compose(t(phi(A, A2), phi(B, B2)), m4(TA, T(B), TA2, T(B2)))
        lhs = c.compose(w.v(t(A, A2), t(B, B2)), sigma_s)
        rhs = c.compose(sigma_r, t(w.v(A, B), w.v(A2, B2)))
        rep.check("v-monoidal", "v-monoidal", lhs == rhs, objects=(A, B, A2, B2))
    li = m.lunit_inv(I)
    s0 = c.compose(T(c.compose(t(phi0, ident(I)), li)), phi0)
    r0 = c.compose(t(phi0, phi0), li)
    rep.check("v-monoidal-unit", "v-monoidal", c.compose(w.v(I, I), s0) == r0)
    # k monoidal natural
    for A, A2 in product(objs, repeat=2):
        sigma = c.compose(t(phi(A, A2), mu), m4(T(A), K, T(A2), K))
        ok = c.compose(w.k(t(A, A2)), sigma) == t(w.k(A), w.k(A2))
        rep.check("k-monoidal", "k-monoidal", ok, objects=(A, A2))
    s0 = c.compose(t(phi0, eta), li)
    rep.check("k-monoidal-unit", "k-monoidal", c.compose(w.k(I), s0) == ident(I))
    return rep


def duoidal_from_warped_lax_braided(m: MonoidalStructure, br: Braiding, w: WarpingData,
                                    objects: Sequence | None = None) -> DuoidalStructure:
    """(A, (x), I, [], K) with gamma = (phi (x) 1) . middle-four, mu = mu_K, tau = eta_K,
    delta = (phi0 (x) 1) . l^{-1}."""
    if w.m is not m or br.structure is not m:
        raise StructureError("warping and braiding must live on the given structure")
    rep = validate_warping(w, objects)
    if rep.ok:
        rep.merge(warping_monoidality(w, br, objects))
    if not rep.ok:
        err = StructureError("warping data is not monoidal: %s" % sorted(rep.failed_axioms()))
        err.report = rep
        raise err
    c, t = m.cat, m.t
    m4 = braided_gamma(m, br)
    wm = warp(w)
    T = w.T

    def gamma(A, B, C, D):
        return c.compose(t(w.phi(A, C), c.identity(t(B, D))), m4(T(A), B, T(C), D))
    I = m.unit
    delta = c.compose(t(w.phi0, c.identity(I)), m.lunit_inv(I))
    return DuoidalStructure(m, wm, gamma, w.k_mult, w.k_unit, delta, name="warped duoidal")
