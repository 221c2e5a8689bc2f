"""Enrichment bases: finite sets and finite-dimensional F_p vector spaces.

A :class:`BaseValue` is an object of the base (a finite set of a given size,
or F_p^n), a :class:`BaseMap` a morphism (a total function table, or a matrix
mod p).  Elements of a value are ints for FinSet and tuples of ints (vectors
in the standard basis) for FinVect.  Tensor products use lexicographic /
row-major order, so ``(i, j)`` in ``x (x) y`` has index ``i * |y| + j``.
"""
from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np

from . import ffield

DEFAULT_BUDGET = 10**5
BUDGET_ENV = "DUOIDAL_BUDGET"
# sizes at or below this never trip the budget; keeps the hot path cheap
MIN_BUDGET = 256

_budget_override: contextvars.ContextVar[int | None] = contextvars.ContextVar(
    "duoidal_budget", default=None)


class BudgetExceeded(RuntimeError):
    pass


class KindMismatch(ValueError):
    pass


class NotParallel(ValueError):
    pass


class NotCoequalizing(ValueError):
    """A map fed to a universal factorization does not satisfy its premise."""


def get_budget() -> int:
    b = _budget_override.get()
    if b is not None:
        return b
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET


@contextlib.contextmanager
def budget_scope(n: int):
    token = _budget_override.set(int(n))
    try:
        yield
    finally:
        _budget_override.reset(token)


def check_budget(n: int, what: str = "value") -> None:
    if n <= MIN_BUDGET:
        return
    if n > get_budget():
        raise BudgetExceeded("%s of size %d exceeds budget %d" % (what, n, get_budget()))


@dataclass(frozen=True)
class BaseKind:
    """FinSet when ``p == 0``, otherwise FinVect over F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not (ffield.is_prime(self.p) and self.p <= 257):
            raise ValueError("FinVect needs a prime p <= 257, got %r" % self.p)

    @property
    def is_set(self) -> bool:
        return self.p == 0

    def __str__(self):
        return "FinSet" if self.is_set else "FinVect(F_%d)" % self.p

    def to_json(self):
        return {"tag": "FinSet"} if self.is_set else {"tag": "FinVect", "p": self.p}

    @classmethod
    def from_json(cls, obj):
        if obj["tag"] == "FinSet":
            return FINSET
        if obj["tag"] == "FinVect":
            return cls(int(obj["p"]))
        raise ValueError("unknown base tag %r" % obj["tag"])


FINSET = BaseKind()


def finvect(p: int) -> BaseKind:
    return BaseKind(p)


@dataclass(frozen=True, eq=False)
class BaseValue:
    kind: BaseKind
    size: int
    labels: tuple | None = field(default=None)

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("negative size")
        check_budget(self.size, "BaseValue")
        if self.labels is not None:
            if not self.kind.is_set:
                raise ValueError("FinVect values carry an implicit basis")
            if len(self.labels) != self.size or len(set(self.labels)) != self.size:
                raise ValueError("labels must be distinct and match the size")

    def __eq__(self, other):
        return (isinstance(other, BaseValue) and self.kind == other.kind
                and self.size == other.size)

    def __hash__(self):
        return hash((self.kind, self.size))

    def __repr__(self):
        return "BaseValue(%s, %d)" % (self.kind, self.size)

    def label(self, i):
        return self.labels[i] if self.labels is not None else i

    def elements(self) -> list:
        """Generators: all elements (FinSet) or the standard basis (FinVect)."""
        if self.kind.is_set:
            return list(range(self.size))
        return [basis_vector(self.size, i) for i in range(self.size)]


def finset(n_or_labels) -> BaseValue:
    if isinstance(n_or_labels, int):
        return BaseValue(FINSET, n_or_labels)
    labels = tuple(n_or_labels)
    return BaseValue(FINSET, len(labels), labels)


def vspace(p: int, dim: int) -> BaseValue:
    return BaseValue(finvect(p), dim)


def unit(kind: BaseKind) -> BaseValue:
    return BaseValue(kind, 1)


def zero(kind: BaseKind) -> BaseValue:
    return BaseValue(kind, 0)


def basis_vector(n: int, i: int) -> tuple:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def as_vec(x) -> np.ndarray:
    return np.asarray(x, dtype=np.int64)


def _same_kind(*vals):
    k0 = vals[0].kind
    if any(v.kind is not k0 and v.kind != k0 for v in vals[1:]):
        kinds = {v.kind for v in vals}
        raise KindMismatch("mixed bases: %s" % ", ".join(str(k) for k in kinds))


class BaseMap:
    """A morphism of the base; immutable."""

    __slots__ = ("source", "target", "data")

    def __init__(self, source: BaseValue, target: BaseValue, data):
        _same_kind(source, target)
        check_budget(source.size, "map source")
        check_budget(target.size, "map target")
        kind = source.kind
        if kind.is_set:
            data = tuple(int(v) for v in data)
            if len(data) != source.size:
                raise ValueError("function table has %d entries, expected %d"
                                 % (len(data), source.size))
            for v in data:
                if not 0 <= v < target.size:
                    raise ValueError("function table value %d out of range" % v)
        else:
            data = np.asarray(data, dtype=np.int64).reshape(target.size, source.size) % kind.p
            data.setflags(write=False)
        self.source = source
        self.target = target
        self.data = data

    @classmethod
    def _trusted(cls, source: BaseValue, target: BaseValue, data) -> "BaseMap":
        # internal fast path: data is already a valid table / read-only matrix
        m = object.__new__(cls)
        m.source, m.target = source, target
        if source.kind.is_set:
            m.data = tuple(data)
        else:
            data.setflags(write=False)
            m.data = data
        return m

    @property
    def kind(self) -> BaseKind:
        return self.source.kind

    def __call__(self, x):
        if self.kind.is_set:
            return self.data[x]
        return tuple(int(v) for v in (self.data @ as_vec(x)) % self.kind.p)

    def __eq__(self, other):
        if not isinstance(other, BaseMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        if self.kind.is_set:
            return self.data == other.data
        return bool(np.array_equal(self.data, other.data))

    __hash__ = None

    def __repr__(self):
        body = self.data if self.kind.is_set else self.data.tolist()
        return "BaseMap(%d -> %d, %s)" % (self.source.size, self.target.size, body)

    def to_json(self):
        if self.kind.is_set:
            return list(self.data)
        return self.data.tolist()


def from_function(source: BaseValue, target: BaseValue, fn: Callable) -> BaseMap:
    """Build a map from its values on generators (elements / basis vectors)."""
    if source.kind.is_set:
        return BaseMap(source, target, [fn(i) for i in range(source.size)])
    cols = [as_vec(fn(e)) for e in source.elements()]
    mat = np.stack(cols, axis=1) if cols else np.zeros((target.size, 0), dtype=np.int64)
    return BaseMap(source, target, mat)


def identity(x: BaseValue) -> BaseMap:
    if x.kind.is_set:
        return BaseMap._trusted(x, x, range(x.size))
    return BaseMap(x, x, np.eye(x.size, dtype=np.int64))


def compose(g: BaseMap, f: BaseMap) -> BaseMap:
    """g after f."""
    if f.target != g.source:
        raise ValueError("cannot compose: %r then %r" % (f, g))
    if f.kind.is_set:
        return BaseMap._trusted(f.source, g.target, [g.data[v] for v in f.data])
    return BaseMap(f.source, g.target, (g.data @ f.data) % f.kind.p)


def compose_all(*maps: BaseMap) -> BaseMap:
    """compose_all(h, g, f) = h after g after f."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def constant_point(x: BaseValue, elem) -> BaseMap:
    """The map unit -> x picking an element (FinSet) or vector (FinVect)."""
    if x.kind.is_set:
        return BaseMap(unit(x.kind), x, [elem])
    return BaseMap(unit(x.kind), x, as_vec(elem).reshape(-1, 1))


def point_of(m: BaseMap):
    """Inverse of :func:`constant_point`."""
    if m.source.size != 1:
        raise ValueError("not a point")
    return m(0 if m.kind.is_set else (1,))


# tensor products -------------------------------------------------------------

def tensor(x, y):
    """Tensor of two values, or of two maps."""
    if isinstance(x, BaseValue) and isinstance(y, BaseValue):
        _same_kind(x, y)
        labels = None
        if x.labels is not None or y.labels is not None:
            labels = tuple((x.label(i), y.label(j)) for i in range(x.size) for j in range(y.size))
            if not x.kind.is_set:
                labels = None
        return BaseValue(x.kind, x.size * y.size, labels)
    if isinstance(x, BaseMap) and isinstance(y, BaseMap):
        _same_kind(x.source, y.source)
        src = tensor(x.source, y.source)
        tgt = tensor(x.target, y.target)
        if x.kind.is_set:
            nb = y.target.size
            return BaseMap._trusted(src, tgt, [a * nb + b for a in x.data for b in y.data])
        return BaseMap(src, tgt, np.kron(x.data, y.data) % x.kind.p)
    raise KindMismatch("tensor needs two values or two maps")


def tensor_elements(kind: BaseKind, x, y, y_size: int):
    """The element x (x) y of X (x) Y (a pair index, or a Kronecker vector)."""
    if kind.is_set:
        return x * y_size + y
    return tuple(int(v) for v in np.kron(as_vec(x), as_vec(y)) % kind.p)


def split_element(kind: BaseKind, z, y_size: int):
    """FinSet only: recover (x, y) from a pair index."""
    if not kind.is_set:
        raise ValueError("vectors of a tensor product are not pure in general")
    return divmod(z, y_size)


def symmetry(x: BaseValue, y: BaseValue) -> BaseMap:
    _same_kind(x, y)
    src, tgt = tensor(x, y), tensor(y, x)
    if x.kind.is_set:
        return BaseMap(src, tgt, [j * x.size + i for i in range(x.size) for j in range(y.size)])
    perm = np.zeros((tgt.size, src.size), dtype=np.int64)
    for i in range(x.size):
        for j in range(y.size):
            perm[j * x.size + i, i * y.size + j] = 1
    return BaseMap(src, tgt, perm)


def associator(x: BaseValue, y: BaseValue, z: BaseValue) -> BaseMap:
    """(x (x) y) (x) z -> x (x) (y (x) z)."""
    src = tensor(tensor(x, y), z)
    tgt = tensor(x, tensor(y, z))
    nyz = y.size * z.size

    def fn(e):
        if x.kind.is_set:
            ij, k = divmod(e, z.size)
            i, j = divmod(ij, y.size)
            return i * nyz + j * z.size + k
        return e  # row-major Kronecker order agrees
    return from_function(src, tgt, fn)


def left_unitor(x: BaseValue) -> BaseMap:
    return from_function(tensor(unit(x.kind), x), x, lambda e: e)


def right_unitor(x: BaseValue) -> BaseMap:
    return from_function(tensor(x, unit(x.kind)), x, lambda e: e)


def unitor_inverse(x: BaseValue, side: str = "left") -> BaseMap:
    src = tensor(unit(x.kind), x) if side == "left" else tensor(x, unit(x.kind))
    return from_function(x, src, lambda e: e)


# finite colimits and limits ----------------------------------------------------

def coproduct(values: Sequence[BaseValue], kind: BaseKind | None = None):
    """Disjoint union / direct sum with its injections (summand-major order)."""
    if not values:
        if kind is None:
            raise ValueError("empty coproduct needs an explicit kind")
        return zero(kind), []
    _same_kind(*values)
    kind = values[0].kind
    total = sum(v.size for v in values)
    out = BaseValue(kind, total)
    injections = []
    offset = 0
    for v in values:
        off = offset
        if kind.is_set:
            injections.append(BaseMap._trusted(v, out, range(off, off + v.size)))
        else:
            m = np.zeros((total, v.size), dtype=np.int64)
            m[off:off + v.size, :] = np.eye(v.size, dtype=np.int64)
            injections.append(BaseMap(v, out, m))
        offset += v.size
    return out, injections


def copair(maps: Sequence[BaseMap], source: BaseValue, target: BaseValue) -> BaseMap:
    """The map out of a coproduct induced by one map per summand."""
    if source.kind.is_set:
        data = []
        for m in maps:
            data.extend(m.data)
        return BaseMap(source, target, data)
    if not maps:
        return BaseMap(source, target, np.zeros((target.size, 0), dtype=np.int64))
    return BaseMap(source, target, np.concatenate([m.data for m in maps], axis=1))


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller index stays the root, so roots are the canonical representatives
            if rx < ry:
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry


@dataclass(eq=False)
class Quotient:
    """A coequalizer: the value, the projection and a chosen section.

    ``section`` sends each generator of the quotient to an element / vector of
    the original target whose class it is.
    """

    value: BaseValue
    projection: BaseMap
    section: list

    def __iter__(self):
        return iter((self.value, self.projection))

    def factor(self, h: BaseMap) -> BaseMap:
        """The unique u with u . projection = h; raises if h does not coequalize."""
        if h.source != self.projection.source:
            raise NotParallel("factorization source mismatch")
        u = from_function(self.value, h.target, lambda e: h(self._lift(e)))
        if compose(u, self.projection) != h:
            raise NotCoequalizing("map does not coequalize the pair")
        return u

    def _lift(self, e):
        if self.value.kind.is_set:
            return self.section[e]
        v = np.zeros(self.projection.source.size, dtype=np.int64)
        for i, c in enumerate(e):
            if c:
                v = v + c * as_vec(self.section[i])
        return tuple(int(t) for t in v % self.value.kind.p)

    def lift(self, e):
        return self._lift(e)


def _parallel(f: BaseMap, g: BaseMap):
    if f.source != g.source or f.target != g.target:
        raise NotParallel("maps are not parallel: %r, %r" % (f, g))


def coequalizer_of_relations(target: BaseValue, pairs: Iterable) -> Quotient:
    """Quotient of ``target`` by the relations x ~ y (FinSet) / x - y = 0 (FinVect)."""
    kind = target.kind
    if kind.is_set:
        uf = UnionFind(target.size)
        for x, y in pairs:
            uf.union(x, y)
        roots = sorted({uf.find(i) for i in range(target.size)})
        index = {r: k for k, r in enumerate(roots)}
        q = BaseValue(kind, len(roots), tuple(roots))
        proj = BaseMap(target, q, [index[uf.find(i)] for i in range(target.size)])
        return Quotient(q, proj, list(roots))
    rows = [(as_vec(x) - as_vec(y)) % kind.p for x, y in pairs]
    return _cokernel(target, rows)


def _cokernel(target: BaseValue, rows) -> Quotient:
    kind = target.kind
    p = kind.p
    n = target.size
    if rows:
        r, pivots = ffield.rref(np.stack(rows), p)
        r = r[:len(pivots)]
    else:
        r, pivots = np.zeros((0, n), dtype=np.int64), ()
    free = [c for c in range(n) if c not in pivots]
    q = BaseValue(kind, len(free))
    proj = np.zeros((len(free), n), dtype=np.int64)
    for k in range(n):
        v = np.zeros(n, dtype=np.int64)
        v[k] = 1
        for i, pc in enumerate(pivots):
            if v[pc]:
                v = (v - v[pc] * r[i]) % p
        proj[:, k] = v[free]
    section = [basis_vector(n, c) for c in free]
    return Quotient(q, BaseMap(target, q, proj), section)


def coequalizer(f: BaseMap, g: BaseMap) -> Quotient:
    _parallel(f, g)
    if f.kind.is_set:
        return coequalizer_of_relations(f.target, zip(f.data, g.data))
    diff = (f.data - g.data) % f.kind.p
    return _cokernel(f.target, [diff[:, j] for j in range(diff.shape[1])])


@dataclass(eq=False)
class Subobject:
    """An equalizer: the value and its inclusion."""

    value: BaseValue
    inclusion: BaseMap

    def __iter__(self):
        return iter((self.value, self.inclusion))

    def factor(self, h: BaseMap) -> BaseMap:
        """The unique u with inclusion . u = h; raises if h does not land inside."""
        kind = h.kind
        if kind.is_set:
            index = {v: i for i, v in enumerate(self.inclusion.data)}
            try:
                return BaseMap(h.source, self.value, [index[v] for v in h.data])
            except KeyError:
                raise NotCoequalizing("map does not factor through the equalizer") from None
        x = ffield.solve(self.inclusion.data, h.data, kind.p)
        if x is None:
            raise NotCoequalizing("map does not factor through the equalizer")
        return BaseMap(h.source, self.value, x)


def equalizer(f: BaseMap, g: BaseMap) -> Subobject:
    _parallel(f, g)
    kind = f.kind
    if kind.is_set:
        members = [i for i in range(f.source.size) if f.data[i] == g.data[i]]
        e = BaseValue(kind, len(members), tuple(f.source.label(i) for i in members))
        return Subobject(e, BaseMap(e, f.source, members))
    ker = ffield.nullspace((f.data - g.data) % kind.p, kind.p)
    e = BaseValue(kind, ker.shape[1])
    return Subobject(e, BaseMap(e, f.source, ker))


# closed structure -------------------------------------------------------------

def encode_function(values: Sequence[int], codomain_size: int) -> int:
    """Index of a function {0..n-1} -> {0..m-1} in lexicographic order."""
    idx = 0
    for v in values:
        idx = idx * codomain_size + v
    return idx


def decode_function(idx: int, domain_size: int, codomain_size: int) -> tuple:
    out = [0] * domain_size
    for i in range(domain_size - 1, -1, -1):
        idx, out[i] = divmod(idx, codomain_size)
    return tuple(out)


@dataclass(eq=False)
class Exponential:
    """The internal hom [y, z] with evaluation ev: [y, z] (x) y -> z."""

    value: BaseValue
    ev: BaseMap
    y: BaseValue
    z: BaseValue

    def __iter__(self):
        return iter((self.value, self.ev))

    def curry(self, f: BaseMap) -> BaseMap:
        """f: x (x) y -> z  gives  x -> [y, z]."""
        ny = self.y.size
        x = BaseValue(f.kind, f.source.size // ny if ny else 0)
        if ny == 0:
            raise ValueError("cannot recover x from x (x) 0; pass x explicitly via curry_from")
        return self.curry_from(x, f)

    def curry_from(self, x: BaseValue, f: BaseMap) -> BaseMap:
        if f.source != tensor(x, self.y) or f.target != self.z:
            raise ValueError("curry: expected a map x (x) y -> z")
        kind = f.kind
        ny = self.y.size
        if kind.is_set:
            return BaseMap(x, self.value, [
                encode_function([f.data[i * ny + j] for j in range(ny)], self.z.size)
                for i in range(x.size)])
        # column (i, j) of f is the image of e_i (x) e_j; the matrix index is (k, j)
        nz = self.z.size

        def fn(e):
            i = e.index(1)
            mat = f.data[:, i * ny:(i + 1) * ny]
            return mat.reshape(nz * ny)
        return from_function(x, self.value, fn)

    def uncurry(self, g: BaseMap) -> BaseMap:
        """g: x -> [y, z]  gives  x (x) y -> z."""
        return compose(self.ev, tensor(g, identity(self.y)))


def internal_hom(y: BaseValue, z: BaseValue) -> Exponential:
    _same_kind(y, z)
    kind = y.kind
    if kind.is_set:
        size = z.size ** y.size
        check_budget(size, "internal hom")
        h = BaseValue(kind, size)
        ev = BaseMap(tensor(h, y), z, [
            decode_function(f, y.size, z.size)[j] for f in range(size) for j in range(y.size)])
        return Exponential(h, ev, y, z)
    h = BaseValue(kind, y.size * z.size)
    # basis E_{kj} (row-major, k < dim z, j < dim y); ev(E_kj (x) e_i) = [i == j] e_k

    def fn(e):
        idx = e.index(1)
        kj, i = divmod(idx, y.size)
        k, j = divmod(kj, y.size)
        v = [0] * z.size
        if i == j:
            v[k] = 1
        return v
    return Exponential(h, from_function(tensor(h, y), z, fn), y, z)


def is_invertible(f: BaseMap) -> BaseMap | None:
    if f.source.size != f.target.size:
        return None
    if f.kind.is_set:
        if len(set(f.data)) != f.source.size:
            return None
        inv = [0] * f.source.size
        for i, v in enumerate(f.data):
            inv[v] = i
        return BaseMap(f.target, f.source, inv)
    m = ffield.inverse(f.data, f.kind.p)
    if m is None:
        return None
    return BaseMap(f.target, f.source, m)


def all_maps(x: BaseValue, y: BaseValue) -> Iterable[BaseMap]:
    """Every map x -> y (FinSet, or FinVect over tiny spaces)."""
    if x.kind.is_set:
        check_budget(y.size ** x.size, "map enumeration")
        for t in product(range(y.size), repeat=x.size):
            yield BaseMap(x, y, t)
    else:
        p = x.kind.p
        check_budget(p ** (x.size * y.size), "map enumeration")
        for t in product(range(p), repeat=x.size * y.size):
            yield BaseMap(x, y, np.array(t, dtype=np.int64).reshape(y.size, x.size))
