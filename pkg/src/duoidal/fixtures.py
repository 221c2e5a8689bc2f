"""Catalog of canonical structure files.

Names starting with ``broken_`` are deliberate corruptions that must fail
validation.
"""
from __future__ import annotations

from typing import Callable

from . import monoidal as mo
from .specio import SpecFile, encode_arrow

FINSET = {"kind": "FinSet"}


def _cartesian(n: int) -> dict:
    return {"monoidal": {"builtin": "cartesian_sets", "max": n}, "braiding": "symmetry"}


def _from_braided(braided: dict) -> dict:
    return {"builtin": "from_braided", "braided": braided}


def _discrete(n: int) -> dict:
    return {"monoidal": {"builtin": "cyclic", "n": n}, "braiding": "identity"}


def _spec(kind: str, payload: dict, base: dict = FINSET) -> SpecFile:
    return SpecFile(dict(base), kind, payload)


def _z2_bimonoid_payload() -> dict:
    return {"duoidal": _from_braided(_cartesian(2)), "monoid_table": [[0, 1], [1, 0]], "unit_element": 0,
            "name": "Z/2"}


def _broken_gamma() -> SpecFile:
    # swap the middle factors of gamma at (2, 2, 2, 2): a non-natural component
    m = mo.cartesian_sets(2)
    br = mo.cartesian_symmetry(m)
    from .duoidal import from_braided
    d = from_braided(m, br)
    bad = m.cat.compose(br(4, 4), d.gamma(2, 2, 2, 2))
    p = _from_braided(_cartesian(2))
    p["gamma_overrides"] = [{"at": [2, 2, 2, 2], "arrow": encode_arrow(bad)}]
    return _spec("duoidal", p)


def _broken_witness() -> SpecFile:
    m = mo.cartesian_sets(3)
    return _spec("witness", {"duoidal": _from_braided(_cartesian(3)), "builtin": "braided",
                             "overrides": [{"family": "ii-left", "at": [2, 2, 1],
                                            "arrow": encode_arrow(m.cat.identity(4))}]})


def _graded_nonmonoidal() -> dict:
    s = {"src": 0, "tgt": 0, "val": 1}
    return {"builtin": "identity", "v0": s, "k_overrides": [{"at": 0, "arrow": s}]}


CATALOG: dict[str, Callable[[], SpecFile]] = {
    "z2_cartesian_duoidal": lambda: _spec("duoidal", _from_braided(_cartesian(2))),
    "finset3_duoidal": lambda: _spec("duoidal", _from_braided(_cartesian(3))),
    "z2_discrete_duoidal": lambda: _spec("duoidal", _from_braided(_discrete(2))),
    "z3_discrete_duoidal": lambda: _spec("duoidal", _from_braided(_discrete(3))),
    "klein_duoidal": lambda: _spec("duoidal", _from_braided({"monoidal": {"builtin": "klein"},
                                                            "braiding": "identity"})),
    "idempotent_lax_duoidal": lambda: _spec("duoidal", _from_braided(
        {"monoidal": {"builtin": "idempotent_lax"}, "braiding": "idempotent"})),
    "f2_vect_duoidal": lambda: _spec("duoidal", _from_braided(
        {"monoidal": {"builtin": "tensor_vect", "p": 2, "max": 2}, "braiding": "symmetry"}),
        {"kind": "FinVect", "p": 2}),
    "finset2_braided": lambda: _spec("braided", _cartesian(2)),
    "z2_group_category": lambda: _spec("category", {"monoid_table": [[0, 1], [1, 0]], "unit": 0}),
    "z2_group_bimonoid": lambda: _spec("bimonoid", _z2_bimonoid_payload()),
    "or_bimonoid": lambda: _spec("bimonoid", {"duoidal": _from_braided(_cartesian(2)),
                                             "monoid_table": [[0, 1], [1, 1]], "unit_element": 0,
                                             "name": "{1,0}"}),
    "unit_bimonoid": lambda: _spec("bimonoid", {"duoidal": _from_braided(_cartesian(2)),
                                               "unit_bimonoid": True}),
    "z2_lifted_monoidal": lambda: _spec("monoidal", {"builtin": "lift_bimonoid",
                                                    "bimonoid": _z2_bimonoid_payload(),
                                                    "carriers": [0, 1, 2]}),
    "identity_warping": lambda: _spec("warping", {"builtin": "identity",
                                                 "monoidal": {"builtin": "cartesian_sets", "max": 2}}),
    "z3_shift_warping": lambda: _spec("warping", {"builtin": "shift", "g": 1, "inverse": 2,
                                                 "monoidal": {"builtin": "cyclic", "n": 3}}),
    "z3_synthesized_warping": lambda: _spec("warping", {"builtin": "synthesized_shift", "g": 1,
                                                       "monoidal": {"builtin": "cyclic", "n": 3}}),
    "finset2_duoidal_warping": lambda: _spec("warping", {
        "builtin": "from_duoidal", "duoidal": _from_braided(_cartesian(2)),
        "witness": {"builtin": "braided"}}),
    "z3_warped_duoidal": lambda: _spec("duoidal", {"builtin": "warped_lax_braided", "braided": _discrete(3),
                                                  "warping": {"builtin": "identity"}}),
    "finset3_witness": lambda: _spec("witness", {"duoidal": _from_braided(_cartesian(3)),
                                                "builtin": "braided"}),
    "z2_identity_witness": lambda: _spec("witness", {"duoidal": _from_braided(_discrete(2)),
                                                    "builtin": "identity", "halves": "ii"}),
    "z2_produoidal": lambda: _spec("produoidal", {"duoidal": _from_braided(_discrete(2)),
                                                 "convolutions": [{"which": "star", "left": 1, "right": 1,
                                                                   "sizes": [1, 0]}]}),
    "broken_gamma": _broken_gamma,
    "broken_bimonoid": lambda: _spec("bimonoid", {"duoidal": _from_braided(_cartesian(2)),
                                                 "monoid_table": [[1, 0], [0, 1]], "unit_element": 0,
                                                 "name": "no unit"}),
    "broken_monoid_category": lambda: _spec("category", {"monoid_table": [[0, 1], [0, 1]], "unit": 0}),
    "broken_warping": lambda: _spec("warping", {"builtin": "constant",
                                               "monoidal": {"builtin": "cartesian_sets", "max": 2}}),
    "broken_witness": _broken_witness,
    "broken_warped_duoidal": lambda: _spec("duoidal", {
        "builtin": "warped_lax_braided",
        "braided": {"monoidal": {"builtin": "graded_z2", "n": 1}, "braiding": "identity"},
        "warping": _graded_nonmonoidal()}),
    "broken_z3_shift_duoidal": lambda: _spec("duoidal", {
        "builtin": "warped_lax_braided", "braided": _discrete(3),
        "warping": {"builtin": "shift", "g": 1, "inverse": 2}}),
    "broken_produoidal": lambda: _spec("produoidal", {
        "duoidal": _from_braided({"monoidal": {"builtin": "graded_z2", "n": 1}, "braiding": "identity"}),
        "s_action": "trivial"}),
    "broken_lifted_monoidal": lambda: _spec("monoidal", {"builtin": "lift_bimonoid",
                                                        "bimonoid": _z2_bimonoid_payload(),
                                                        "carriers": [0, 1, 2], "twisted": True}),
}


def names() -> list[str]:
    return sorted(CATALOG)


def fixture(name: str) -> SpecFile:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError("unknown fixture %r; catalog: %s" % (name, ", ".join(names()))) from None
