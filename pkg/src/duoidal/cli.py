"""Command line: validate, construct, roundtrip, classify, emit-fixture.

Exit codes: 0 pass, 1 axiom failure, 2 parse error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import dayconv as dc
from . import fixtures
from . import hopf as hp
from . import monoidal as mo
from . import specio
from . import tannaka as tk
from . import vbase as vb
from . import warp as wp
from .duoidal import validate_bimonoid, validate_duoidal
from .report import Report
from .specio import SpecError, SpecFile

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3
CONSTRUCTIONS = ("from-braided", "warp", "modules", "day-convolve", "lift-bimonoid", "produoidal-from-duoidal")


class Outcome:
    def __init__(self, report: Report, artifacts: list[str] | None = None):
        self.report = report
        self.artifacts = artifacts or []

    def to_json(self):
        out = self.report.to_json()
        out["artifacts"] = list(self.artifacts)
        return out

    @property
    def code(self) -> int:
        return EXIT_PASS if self.report.ok else EXIT_FAIL


def _write(path: str, text: str) -> str:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return os.path.basename(path)


def _emit(spec: SpecFile, out: str | None, artifacts: list[str]) -> None:
    if out:
        artifacts.append(_write(out, specio.dumps(spec)))


# commands -------------------------------------------------------------------------

def cmd_validate(args) -> Outcome:
    rep = Report("validate")
    for path in args.files:
        spec = specio.load(path)
        rep.merge(specio.validate(spec), "%s:" % os.path.basename(path) if len(args.files) > 1 else "")
    return Outcome(rep)


def cmd_construct(args) -> Outcome:
    spec = specio.load(args.file)
    op, p = args.operation, spec.payload
    artifacts: list[str] = []

    def need(kind):
        if spec.kind != kind:
            raise SpecError("%s expects a %s file, got %s" % (op, kind, spec.kind))

    if op == "from-braided":
        need("braided")
        out = SpecFile(spec.base, "duoidal", {"builtin": "from_braided", "braided": p})
        rep = validate_duoidal(specio.build(out))
    elif op == "warp":
        need("warping")
        w = specio.build(spec)
        rep = wp.validate_warping(w)
        if rep.ok:
            rep.merge(mo.validate_monoidal(wp.warp(w)), "warp/")
        out = SpecFile(spec.base, "monoidal", {"builtin": "warp", "warping": p})
    elif op == "produoidal-from-duoidal":
        need("duoidal")
        out = SpecFile(spec.base, "produoidal", {"duoidal": p})
        rep = specio.validate(out)
    elif op == "day-convolve":
        need("produoidal")
        pd = specio.build(spec)
        if not pd.closed():
            raise SpecError("day-convolve needs a produoidal structure closed on its objects")
        entry = specio.convolution_entry(pd, args.tensor, args.left, args.right)
        payload = dict(p)
        payload["convolutions"] = list(p.get("convolutions", [])) + [entry]
        out = SpecFile(spec.base, "produoidal", payload)
        rep = dc.check_yoneda(pd, specio._which(args.tensor), [(args.left, args.right)])
    elif op == "modules":
        need("bimonoid")
        mc = specio.build_module_category({"bimonoid": p, "carriers": args.carriers})
        if not mc.base.is_set:
            raise SpecError("module tables are only emitted over FinSet")
        out = SpecFile(spec.base, "category", {"table": specio.module_category_table(mc)})
        rep = specio.validate(out)
    elif op == "lift-bimonoid":
        need("bimonoid")
        payload = {"builtin": "lift_bimonoid", "bimonoid": p, "carriers": args.carriers}
        out = SpecFile(spec.base, "monoidal", payload)
        rep = tk.validate_lifted(specio.build_lift(payload))
    else:
        raise SpecError("unknown construction %r" % op)
    _emit(out, args.out, artifacts)
    if not args.out:
        sys.stdout.write(specio.dumps(out))
    return Outcome(rep, artifacts)


def cmd_roundtrip(args) -> Outcome:
    spec = specio.load(args.file)
    if spec.kind != "bimonoid":
        raise SpecError("roundtrip expects a bimonoid file")
    b = specio.build(spec)
    rep = Report("roundtrip")
    rep.merge(validate_bimonoid(b), "bimonoid/")
    if not rep.ok:
        return Outcome(rep)
    mc = specio.build_module_category({"carriers": args.carriers}, b)
    rep.merge(tk.end_of_representable(mc).report, "end/")
    lifted = tk.lift_bimonoid_to_monoidal(b, mc)
    rep.merge(tk.validate_lifted(lifted), "lift/")
    try:
        b2 = tk.extract_bimonoid_from_monoidal(lifted)
    except mo.StructureError as e:
        rep.check("extract", "precondition", False, error=str(e))
        return Outcome(rep)
    rep.merge(b2.report, "extract/")
    rep.check("extract-lift", "identity", b2.tables() == b.tables(), tables=b2.tables())
    rep.merge(tk.compare_lifts(lifted, tk.lift_bimonoid_to_monoidal(b2, mc)), "lift-extract/")
    return Outcome(rep)


def cmd_classify(args) -> tuple[Outcome, dict]:
    spec = specio.load(args.bimonoid)
    if spec.kind != "bimonoid":
        raise SpecError("classify expects a bimonoid file")
    b = specio.build(spec)
    rep = validate_bimonoid(b)
    if not rep.ok:
        return Outcome(rep), {}
    fp = hp.build_fusion(b, check=False)
    cls = hp.classify_hopf(fp)
    rep.merge(hp.fusion_unit_coherence(b, fp), "fusion/")
    return Outcome(rep), cls.to_json()


# entry point ------------------------------------------------------------------------

def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="duoidal", description="Finite duoidal categories.")
    ap.add_argument("--budget", type=int, default=None,
                    help="cap on constructed base values (env %s; default %d)" % (vb.BUDGET_ENV, vb.DEFAULT_BUDGET))
    ap.add_argument("--report", help="also write the JSON report here")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate structure files")
    v.add_argument("files", nargs="+")

    c = sub.add_parser("construct", help="build a derived structure")
    c.add_argument("operation", choices=CONSTRUCTIONS)
    c.add_argument("file")
    c.add_argument("-o", "--out", help="write the constructed structure file here")
    c.add_argument("--tensor", default="star", choices=["star", "circ"])
    c.add_argument("--left", type=int, default=0)
    c.add_argument("--right", type=int, default=0)
    c.add_argument("--carriers", type=int, nargs="+", default=[0, 1, 2])

    r = sub.add_parser("roundtrip", help="Tannaka round trip of a bimonoid")
    r.add_argument("file")
    r.add_argument("--carriers", type=int, nargs="+", default=[0, 1, 2])

    k = sub.add_parser("classify", help="Hopf classification of a bimonoid")
    k.add_argument("--bimonoid", required=True)

    e = sub.add_parser("emit-fixture", help="write a catalog fixture")
    e.add_argument("name", nargs="?")
    e.add_argument("-o", "--out")
    e.add_argument("--all", metavar="DIR", help="write every fixture into DIR")
    e.add_argument("--list", action="store_true")
    return ap


def _print(obj) -> None:
    sys.stdout.write(specio.canonical(obj))


def _error(status: str, message: str, report_path: str | None) -> None:
    doc = {"status": "error", "checks": [], "artifacts": [], "errors": ["%s: %s" % (status, message)]}
    _print(doc)
    if report_path:
        _write(report_path, specio.canonical(doc))


def emit(args) -> int:
    if args.list:
        sys.stdout.write("\n".join(fixtures.names()) + "\n")
        return EXIT_PASS
    if args.all:
        os.makedirs(args.all, exist_ok=True)
        for name in fixtures.names():
            _write(os.path.join(args.all, name + ".json"), specio.dumps(fixtures.fixture(name)))
        return EXIT_PASS
    if not args.name:
        sys.stderr.write("emit-fixture: give a name; catalog: %s\n" % ", ".join(fixtures.names()))
        return EXIT_PARSE
    try:
        spec = fixtures.fixture(args.name)
    except KeyError as e:
        sys.stderr.write("emit-fixture: %s\n" % e.args[0])
        return EXIT_PARSE
    if args.out:
        _write(args.out, specio.dumps(spec))
    else:
        sys.stdout.write(specio.dumps(spec))
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    args = parser().parse_args(argv)
    if args.command == "emit-fixture":
        return emit(args)
    try:
        budget = vb.get_budget() if args.budget is None else args.budget
    except ValueError:
        _error("parse error", "%s must be an integer" % vb.BUDGET_ENV, args.report)
        return EXIT_PARSE
    try:
        with vb.budget_scope(budget):
            if args.command == "classify":
                outcome, cls = cmd_classify(args)
                if outcome.report.ok:
                    _print({"hopf": cls["hopf"]})
                else:
                    _print(outcome.to_json())
                if args.report:
                    doc = outcome.to_json()
                    doc["classification"] = cls
                    _write(args.report, specio.canonical(doc))
                return outcome.code
            handler = {"validate": cmd_validate, "construct": cmd_construct, "roundtrip": cmd_roundtrip}
            outcome = handler[args.command](args)
    except SpecError as e:
        _error("parse error", str(e), args.report)
        return EXIT_PARSE
    except vb.BudgetExceeded as e:
        _error("budget exceeded", str(e), args.report)
        return EXIT_BUDGET
    doc = outcome.to_json()
    if args.report:
        _write(args.report, specio.canonical(doc))
    if args.command != "construct" or args.out:
        _print(doc)
    else:
        sys.stderr.write(specio.canonical(doc))
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
