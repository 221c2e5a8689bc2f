"""Versioned JSON structure files: parsing, building and validation.

Objects and arrows are integer-indexed.  Lazily defined structures (skeletal
FinSet, discrete groups, warpings) are named by a ``builtin`` recipe with
integer parameters; explicit tables and per-coordinate ``overrides`` carry
everything else.
"""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from typing import Any

from . import dayconv as dc
from . import duoidal as du
from . import hopf as hp
from . import monoidal as mo
from . import tannaka as tk
from . import warp as wp
from .fincat import Arrow, FinCat, SkeletalSets, SkeletalVect, TableCategory, monoid_category, validate_category
from .report import Report

VERSION = 1
KINDS = ("category", "monoidal", "braided", "duoidal", "bimonoid", "produoidal", "warping", "witness")
BASES = ("FinSet", "FinVect")


class SpecError(ValueError):
    """The document does not parse or does not match the schema."""


@dataclass(frozen=True)
class SpecFile:
    base: dict
    kind: str
    payload: dict

    def to_json(self) -> dict:
        return {"version": VERSION, "base": self.base, "kind": self.kind, "payload": self.payload}


def dumps(spec: SpecFile) -> str:
    return canonical(spec.to_json())


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> SpecFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError("invalid JSON: %s" % e) from None
    if not isinstance(doc, dict):
        raise SpecError("top level must be an object")
    extra = set(doc) - {"version", "base", "kind", "payload"}
    if extra:
        raise SpecError("unknown top-level keys %s" % sorted(extra))
    if doc.get("version") != VERSION:
        raise SpecError("unsupported version %r" % doc.get("version"))
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SpecError("kind must be one of %s" % ", ".join(KINDS))
    base = doc.get("base")
    if not isinstance(base, dict) or base.get("kind") not in BASES:
        raise SpecError("base must be {\"kind\": \"FinSet\"} or {\"kind\": \"FinVect\", \"p\": prime}")
    payload = doc.get("payload")
    if not isinstance(payload, dict):
        raise SpecError("payload must be an object")
    return SpecFile(base, kind, payload)


def load(path) -> SpecFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as e:
        raise SpecError("cannot read %s: %s" % (path, e)) from None


# field access ---------------------------------------------------------------------

def _get(p: dict, key: str, typ=None, default=dataclasses.MISSING):
    if not isinstance(p, dict):
        raise SpecError("expected an object, got %r" % (p,))
    if key not in p:
        if default is not dataclasses.MISSING:
            return default
        raise SpecError("missing field %r" % key)
    v = p[key]
    if typ is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise SpecError("field %r must be an integer" % key)
    if typ is not None and typ is not int and not isinstance(v, typ):
        raise SpecError("field %r has the wrong type" % key)
    return v


def _nat(p: dict, key: str, default=dataclasses.MISSING, lo: int = 0, hi: int = 64) -> int:
    v = _get(p, key, int, default)
    if not lo <= v <= hi:
        raise SpecError("field %r out of range [%d, %d]" % (key, lo, hi))
    return v


def _table(p: dict, key: str, n: int | None = None) -> list[list[int]]:
    t = _get(p, key, list)
    size = len(t) if n is None else n
    if size == 0 or len(t) != size:
        raise SpecError("table %r must be %d x %d" % (key, size, size))
    for row in t:
        if not isinstance(row, list) or len(row) != size:
            raise SpecError("table %r is not square" % key)
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < size:
                raise SpecError("table %r has entry %r out of range" % (key, x))
    return t


def _check_base(spec_base: dict, cat: FinCat) -> None:
    want = "FinVect" if isinstance(cat, SkeletalVect) else "FinSet"
    if spec_base.get("kind") != want:
        raise SpecError("base %r does not match the structure (%s)" % (spec_base.get("kind"), want))
    if want == "FinVect" and spec_base.get("p") != cat.p:
        raise SpecError("base prime does not match the structure")


def encode_arrow(f: Arrow) -> dict:
    val = list(f.val) if isinstance(f.val, tuple) else f.val
    return {"src": f.src, "tgt": f.tgt, "val": val}


def decode_arrow(cat: FinCat, obj) -> Arrow:
    if not isinstance(obj, dict) or set(obj) != {"src", "tgt", "val"}:
        raise SpecError("arrow must be {\"src\", \"tgt\", \"val\"}: %r" % (obj,))
    a, b, val = obj["src"], obj["tgt"], obj["val"]
    if not (cat.has_object(a) and cat.has_object(b)):
        raise SpecError("arrow endpoints %r -> %r are not objects" % (a, b))
    if isinstance(cat, SkeletalSets):
        ok = isinstance(val, list) and len(val) == a and all(isinstance(x, int) and 0 <= x < b for x in val)
        val = tuple(val) if ok else None
    elif isinstance(cat, SkeletalVect):
        ok = isinstance(val, list) and len(val) == a * b and all(isinstance(x, int) and 0 <= x < cat.p for x in val)
        val = tuple(val) if ok else None
    elif isinstance(cat, TableCategory):
        ok = isinstance(val, int) and 0 <= val < cat.hom_size(a, b)
    else:
        raise SpecError("arrows cannot be given explicitly in %s" % cat.name)
    if not ok:
        raise SpecError("arrow value %r out of range for %r -> %r" % (obj["val"], a, b))
    return Arrow(a, b, val)


def _objects(cat: FinCat, xs, n: int) -> tuple:
    if not isinstance(xs, list) or len(xs) != n or not all(isinstance(x, int) and cat.has_object(x) for x in xs):
        raise SpecError("expected %d object indices, got %r" % (n, xs))
    return tuple(xs)


def _override_map(cat: FinCat, entries, arity: int) -> dict:
    if not isinstance(entries, list):
        raise SpecError("overrides must be a list")
    out = {}
    for e in entries:
        at = _get(e, "at")
        key = _objects(cat, at if isinstance(at, list) else [at], arity)
        out[key] = decode_arrow(cat, _get(e, "arrow"))
    return out


def _patched(fn, table: dict):
    if not table:
        return fn

    def g(*objs):
        f = table.get(objs)
        return fn(*objs) if f is None else f
    return g


# builders -----------------------------------------------------------------------------

def build_monoidal(p: dict) -> mo.MonoidalStructure:
    b = _get(p, "builtin", str)
    if b == "cartesian_sets":
        return mo.cartesian_sets(_nat(p, "max", 3, 0, 4))
    if b == "tensor_vect":
        return mo.tensor_vect(_nat(p, "p", lo=2, hi=7), _nat(p, "max", 2, 0, 3))
    if b == "cyclic":
        return mo.discrete_cyclic(_nat(p, "n", lo=1, hi=12))
    if b == "klein":
        return mo.discrete_klein()
    if b == "discrete_monoid":
        t = _table(p, "table")
        unit = _nat(p, "unit", 0, 0, len(t) - 1)
        return mo.discrete_monoidal(range(len(t)), lambda x, y: t[x][y], unit, name="discrete monoid")
    if b == "graded_z2":
        return mo.graded_z2(_nat(p, "n", 1, 1, 8))
    if b == "idempotent_lax":
        return mo.idempotent_lax()[0]
    if b == "warp":
        return wp.warp(build_warping(_get(p, "warping", dict)))
    if b == "lift_bimonoid":
        return build_lift(p).structure
    raise SpecError("unknown monoidal builtin %r" % b)


def build_braided(p: dict) -> tuple[mo.MonoidalStructure, mo.Braiding]:
    mp = _get(p, "monoidal", dict)
    name = _get(p, "braiding", str)
    if name == "idempotent":
        if mp.get("builtin") != "idempotent_lax":
            raise SpecError("the idempotent braiding lives on idempotent_lax")
        return mo.idempotent_lax()
    m = build_monoidal(mp)
    if name == "symmetry":
        if isinstance(m.cat, SkeletalVect):
            return m, mo.vect_symmetry(m)
        if isinstance(m.cat, SkeletalSets):
            return m, mo.cartesian_symmetry(m)
        return m, mo.identity_braiding(m)
    if name == "identity":
        return m, mo.identity_braiding(m)
    raise SpecError("unknown braiding %r" % name)


def build_duoidal(p: dict) -> du.DuoidalStructure:
    return _duoidal_and_braiding(p)[0]


def _duoidal_and_braiding(p: dict) -> tuple[du.DuoidalStructure, mo.Braiding | None]:
    b = _get(p, "builtin", str)
    br = None
    if b == "from_braided":
        m, br = build_braided(_get(p, "braided", dict))
        d = du.from_braided(m, br)
    elif b == "warped_lax_braided":
        m, br = build_braided(_get(p, "braided", dict))
        w = build_warping(_get(p, "warping", dict), m)
        d = wp.duoidal_from_warped_lax_braided(m, br, w)
    else:
        raise SpecError("unknown duoidal builtin %r" % b)
    c = d.cat
    gam = _override_map(c, p.get("gamma_overrides", []), 4)
    mu, tau, delta = d.mu, d.tau, d.delta
    if "mu" in p:
        mu = decode_arrow(c, p["mu"])
    if "tau" in p:
        tau = decode_arrow(c, p["tau"])
    if "delta" in p:
        delta = decode_arrow(c, p["delta"])
    if gam or (mu, tau, delta) != (d.mu, d.tau, d.delta):
        d = du.DuoidalStructure(d.h, d.v, _patched(d._gamma, gam), mu, tau, delta, name=d.name + " (edited)")
    return d, br


def build_bimonoid(p: dict) -> du.Bimonoid:
    d = build_duoidal(_get(p, "duoidal", dict))
    if _get(p, "unit_bimonoid", bool, False):
        return du.unit_bimonoid(d)
    if "monoid_table" in p:
        if not isinstance(d.cat, SkeletalSets):
            raise SpecError("monoid_table needs cartesian FinSet")
        t = _table(p, "monoid_table")
        return du.cartesian_bimonoid(d, t, _nat(p, "unit_element", 0, 0, len(t) - 1), name=p.get("name", ""))
    c = d.cat
    carrier = _get(p, "carrier", int)
    if not c.has_object(carrier):
        raise SpecError("carrier %r is not an object" % carrier)
    arrows = {k: decode_arrow(c, _get(p, k, dict)) for k in ("mult", "unit", "comult", "counit")}
    return du.Bimonoid(d, carrier, name=p.get("name", ""), **arrows)


def build_module_category(p: dict, b: du.Bimonoid | None = None) -> tk.ModuleCategory:
    b = b or build_bimonoid(_get(p, "bimonoid", dict))
    carriers = _get(p, "carriers", list, [0, 1, 2])
    if not all(isinstance(x, int) and b.duoidal.cat.has_object(x) for x in carriers):
        raise SpecError("carriers must be object indices")
    return tk.build_module_category(b.duoidal, b.monoid(), carriers=carriers)


def build_lift(p: dict) -> tk.LiftedMonoidalStructure:
    b = build_bimonoid(_get(p, "bimonoid", dict))
    mc = build_module_category(p, b)
    if _get(p, "twisted", bool, False):
        return tk.first_factor_lift(mc)
    return tk.lift_bimonoid_to_monoidal(b, mc)


def build_warping(p: dict, m: mo.MonoidalStructure | None = None) -> wp.WarpingData:
    b = _get(p, "builtin", str)
    if b == "from_duoidal":
        d, br = _duoidal_and_braiding(_get(p, "duoidal", dict))
        w = wp.warping_from_duoidal(d, _witness_for(d, br, _get(p, "witness", dict)))
    else:
        if m is None:
            m = build_monoidal(_get(p, "monoidal", dict))
        if b == "identity":
            w = wp.identity_warping(m)
        elif b == "shift":
            w = wp.shift_warping(m, _get(p, "g", int), _get(p, "inverse", int))
        elif b == "synthesized_shift":
            T = wp.shift_functor(m, _get(p, "g", int))
            w = wp.synthesize_warping(m, T, lambda A, B: m.cat.identity(m.t(T(A), T(B))))
        elif b == "constant":
            w = wp.constant_warping(m)
        else:
            raise SpecError("unknown warping builtin %r" % b)
    c = w.m.cat
    changes: dict[str, Any] = {}
    if "v0" in p:
        changes["v0"] = decode_arrow(c, p["v0"])
    if "v_overrides" in p:
        changes["v"] = _patched(w.v, _override_map(c, p["v_overrides"], 2))
    if "k_overrides" in p:
        changes["k"] = _patched(w.k, _override_map(c, p["k_overrides"], 1))
    return dataclasses.replace(w, **changes) if changes else w


def _witness_for(d: du.DuoidalStructure, br: mo.Braiding | None, p: dict) -> hp.ClosednessWitness:
    b = _get(p, "builtin", str)
    if b == "braided":
        if br is None:
            raise SpecError("the braided witness needs a from_braided duoidal structure")
        w = hp.braided_witness(d, br)
    elif b == "identity":
        w = hp.identity_witness(d)
    else:
        raise SpecError("unknown witness builtin %r" % b)
    halves = _get(p, "halves", str, "both")
    if halves not in ("both", "ii", "iip"):
        raise SpecError("halves must be both, ii or iip")
    fams = {"ii_left": w.ii_left, "ii_right": w.ii_right, "iip_left": w.iip_left, "iip_right": w.iip_right}
    if halves == "ii":
        fams.update(iip_left=None, iip_right=None)
    elif halves == "iip":
        fams.update(ii_left=None, ii_right=None)
    arity = {"ii_left": 3, "ii_right": 3, "iip_left": 2, "iip_right": 2}
    for e in _get(p, "overrides", list, []):
        fam = _get(e, "family", str).replace("-", "_")
        if fams.get(fam) is None:
            raise SpecError("override for absent family %r" % fam)
        fams[fam] = _patched(fams[fam], _override_map(d.cat, [e], arity[fam]))
    return hp.ClosednessWitness(name=b, **fams)


def build_witness(p: dict) -> tuple[du.DuoidalStructure, hp.ClosednessWitness]:
    d, br = _duoidal_and_braiding(_get(p, "duoidal", dict))
    return d, _witness_for(d, br, p)


def build_produoidal(p: dict) -> dc.ProduoidalData:
    d = build_duoidal(_get(p, "duoidal", dict))
    act = _get(p, "s_action", str, "composition")
    if act == "composition":
        return dc.produoidal_from_duoidal(d)
    if act == "trivial":
        return dc.produoidal_from_duoidal(d, s_action=lambda h, s: s)
    raise SpecError("unknown s_action %r" % act)


def _which(x: str) -> str:
    if x in ("*", "star"):
        return dc.STAR
    if x in ("o", "circ"):
        return dc.CIRC
    raise SpecError("tensor must be star or circ")


def convolution_entry(pd: dc.ProduoidalData, which: str, a, b) -> dict:
    c = pd.cat
    out = pd.convolve(_which(which), dc.representable(c, a), dc.representable(c, b))
    return {"which": "star" if _which(which) == dc.STAR else "circ", "left": a, "right": b,
            "sizes": [out.values[x].size for x in c.objects]}


def build(spec: SpecFile):
    builders = {"monoidal": build_monoidal, "braided": build_braided, "duoidal": build_duoidal,
                "bimonoid": build_bimonoid, "produoidal": build_produoidal, "warping": build_warping,
                "witness": build_witness, "category": build_category}
    obj = builders[spec.kind](spec.payload)
    cat = _category_of(obj)
    if cat is not None:
        _check_base(spec.base, cat)
    return obj


def _category_of(obj):
    if isinstance(obj, tuple):
        obj = obj[0]
    for attr in ("cat", "m", "duoidal", "d"):
        if hasattr(obj, attr):
            x = getattr(obj, attr)
            return x if isinstance(x, FinCat) else _category_of(x)
    return obj if isinstance(obj, FinCat) else None


def build_category(p: dict) -> FinCat:
    if "monoid_table" in p:
        t = _table(p, "monoid_table")
        return monoid_category(t, _nat(p, "unit", 0, 0, len(t) - 1))
    table = _get(p, "table", dict)
    try:
        n = table["objects"]
        homs = table["homs"]
        if len(homs) != n or any(len(r) != n for r in homs) or len(table["ident"]) != n:
            raise SpecError("category tables are not total")
        cat = TableCategory.from_json(table)
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        if isinstance(e, SpecError):
            raise
        raise SpecError("malformed category table: %s" % e) from None
    for (a, b, c), rows in cat._comp.items():
        if len(rows) != cat.hom_size(b, c) or any(len(r) != cat.hom_size(a, b) for r in rows):
            raise SpecError("composition table %d,%d,%d has the wrong shape" % (a, b, c))
        if any(not 0 <= x < cat.hom_size(a, c) for r in rows for x in r):
            raise SpecError("composition table %d,%d,%d has an entry out of range" % (a, b, c))
    for a in cat.objects:
        if not 0 <= cat._ident[a] < cat.hom_size(a, a):
            raise SpecError("identity of %d out of range" % a)
    return cat


# validation ---------------------------------------------------------------------------

def validate(spec: SpecFile) -> Report:
    """Build the structure and run the validator for its kind."""
    k, p = spec.kind, spec.payload
    try:
        obj = build(spec)
    except mo.StructureError as e:
        rep = Report("%s (construction)" % k)
        inner = getattr(e, "report", None)
        if inner is not None:
            rep.merge(inner)
        rep.check("construct", "precondition", False, error=str(e))
        return rep
    if k == "category":
        return validate_category(obj)
    if k == "monoidal":
        if p.get("builtin") == "lift_bimonoid":
            return tk.validate_lifted(build_lift(p))
        return mo.validate_monoidal(obj)
    if k == "braided":
        m, br = obj
        rep = Report("braided")
        rep.merge(mo.validate_monoidal(m), "monoidal/")
        rep.merge(mo.validate_braiding(br), "braiding/")
        return rep
    if k == "duoidal":
        return du.validate_duoidal(obj)
    if k == "bimonoid":
        return du.validate_bimonoid(obj)
    if k == "warping":
        rep = wp.validate_warping(obj)
        if rep.ok:
            rep.merge(mo.validate_monoidal(wp.warp(obj)), "warp/")
        return rep
    if k == "witness":
        d, w = obj
        return hp.check_closedness(w, d)
    if k == "produoidal":
        return validate_produoidal(obj, p)
    raise SpecError("no validator for %r" % k)


def validate_produoidal(pd: dc.ProduoidalData, p: dict) -> Report:
    rep = Report("produoidal")
    rep.check("closed", "shape", pd.closed())
    if not rep.ok:
        return rep
    rep.merge(dc.check_yoneda(pd, dc.STAR), "star/")
    rep.merge(dc.check_yoneda(pd, dc.CIRC), "circ/")
    for e in _get(p, "convolutions", list, []):
        a, b = _get(e, "left"), _get(e, "right")
        if not (pd.cat.has_object(a) and pd.cat.has_object(b)):
            raise SpecError("convolution arguments must be objects")
        got = convolution_entry(pd, _get(e, "which", str), a, b)
        rep.check("convolution", "coend", got["sizes"] == _get(e, "sizes", list),
                  objects=(a, b), which=got["which"])
    ws = _get(p, "witnesses", list, [])
    if ws:
        rep.merge(dc.check_presheaf_duoidal_pointwise(pd, [_presheaf(pd, x) for x in ws]))
    return rep


def _presheaf(pd: dc.ProduoidalData, x) -> dc.Presheaf:
    if x == "H":
        return pd.H
    if x == "K":
        return pd.K
    if isinstance(x, int) and pd.cat.has_object(x):
        return dc.representable(pd.cat, x, name="y(%d)" % x)
    raise SpecError("witness presheaf must be an object index, \"H\" or \"K\"")


def module_category_table(mc: tk.ModuleCategory) -> dict:
    """Tabulate the underlying category of a FinSet module category."""
    objs = mc.objects
    n = len(objs)
    homs = [[mc.hom(x, y).size for y in objs] for x in objs]
    comp = {}
    for i, x in enumerate(objs):
        for j, y in enumerate(objs):
            for k, z in enumerate(objs):
                if homs[i][j] and homs[j][k]:
                    comp["%d,%d,%d" % (i, j, k)] = [
                        [mc.elem(mc.compose(mc.from_elem(y, z, g), mc.from_elem(x, y, f)))
                         for f in range(homs[i][j])] for g in range(homs[j][k])]
    return {"objects": n, "homs": homs, "comp": comp, "ident": [mc.elem(mc.identity(x)) for x in objs]}
