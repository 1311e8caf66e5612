"""Command-line entry point.

    extrired verify-example ex4
    extrired ext-table --spec my.yaml --k-max 3 --format json
    extrired reduce --spec my.yaml
    extrired cluster --spec my.yaml --cap 50000

Exit status: 0 when every check passes, 1 when a mathematical check fails or a
structural condition is violated, 2 for malformed input.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import __version__
from .cluster import DEFAULT_CAP, ClusterSearchConfig, SearchStats, enumerate_cluster_tilting, verify_correspondence
from .errors import ExtriredError, InputError, MathematicalFailure
from .instance import InstanceSpec, build_category, load, load_fixture, must_contain, subcat_X
from .reduction import reduce
from .report import CheckList, dumps, to_jsonable
from .worked_examples import CHECKERS, EXAMPLES

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    d = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(prefix=".extrired-", dir=d)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _spec(args) -> InstanceSpec:
    if args.spec is None:
        raise InputError("--spec is required")
    return load(args.spec).with_overrides(args.field)


def _checks_text(checks: CheckList) -> list[str]:
    lines = [c.line() for c in checks]
    fails = checks.failures()
    lines.append(f"{len(checks) - len(fails)}/{len(checks)} checks passed")
    return lines


def _header(kind: str, spec: InstanceSpec) -> dict:
    return {"command": kind, "instance": spec.name, "algebra": spec.Q.describe(),
            "characteristic": spec.field.characteristic, "version": __version__}


# ---------------------------------------------------------------------------

def cmd_verify_example(args):
    name = args.example
    spec = load(args.spec) if args.spec else load_fixture(name)
    spec = spec.with_overrides(args.field)
    checks = CHECKERS[name](spec)
    doc = _header("verify-example", spec)
    doc["example"] = name
    doc["checks"] = [c.to_dict() for c in checks]
    doc["passed"] = checks.passed
    text = [f"example {name}: {spec.Q.describe()}"] + _checks_text(checks)
    return doc, text, checks.passed


def cmd_ext_table(args):
    spec = _spec(args)
    if args.k_max < 1:
        raise InputError("--k-max must be >= 1")
    C = build_category(spec)
    names = [str(o) for o in C.roster]
    doc = _header("ext-table", spec)
    doc["roster"] = [o.as_list() for o in C.roster]
    doc["tables"] = {str(k): C.table_rows(k) for k in range(1, args.k_max + 1)}
    width = max((len(s) for s in names), default=1)
    text = [f"instance {spec.name}: {len(names)} indecomposables, {spec.Q.describe()}"]
    for k in range(1, args.k_max + 1):
        text.append(f"E^{k}(row, column)")
        rows = C.table_rows(k)
        text.append(" " * width + "  " + " ".join(f"{j:>2}" for j in range(len(names))))
        for i, (s, row) in enumerate(zip(names, rows)):
            text.append(f"{s:>{width}}  " + " ".join(f"{v:>2}" for v in row) + f"   [{i}]")
    return doc, text, True


def cmd_reduce(args):
    spec = _spec(args)
    C = build_category(spec)
    X = subcat_X(spec, C)
    rep = reduce(C, X, spec.n)
    doc = _header("reduce", spec)
    doc["reduction"] = rep.to_dict()
    b = spec.n + 1
    text = [f"instance {spec.name}: reduction at X = {X} with n = {spec.n}",
            f"X^⊥≤{b} = {rep.orth_right}", f"^⊥≤{b}X = {rep.orth_left}",
            f"condition holds: {str(rep.condition_holds).lower()}"]
    if rep.condition_holds:
        text += [f"R = {rep.orth_right}", f"P_E(R) = {rep.R_projectives}", f"I_E(R) = {rep.R_injectives}",
                 f"frobenius: {str(rep.frobenius).lower()}",
                 "collapse: " + ", ".join(f"m={m}:{str(v).lower()}" for m, v in sorted(rep.collapse.items()))]
    text += _checks_text(rep.checks)
    return doc, text, rep.checks.passed


def cmd_cluster(args):
    spec = _spec(args)
    C = build_category(spec)
    X = subcat_X(spec, C)
    bound = spec.cluster.bound if spec.cluster else spec.n + 1
    cap = args.cap or (spec.cluster.cap if spec.cluster else None) or DEFAULT_CAP
    must = must_contain(spec, C)
    stats = SearchStats()
    found = enumerate_cluster_tilting(C, ClusterSearchConfig(bound, must, cap), stats=stats)
    doc = _header("cluster", spec)
    doc["bound"] = bound
    doc["must_contain"] = must.as_lists()
    doc["cluster_tilting"] = [T.as_lists() for T in found]
    doc["search"] = {"nodes": stats.nodes, "pruned_rigidity": stats.pruned_rigidity,
                     "pruned_witness": stats.pruned_witness}
    text = [f"instance {spec.name}: {bound}-bounded cluster-tilting subcategories containing {must}",
            f"found {len(found)}"] + [f"  {T}" for T in found]
    text.append(f"search nodes: {stats.nodes}")
    passed = True
    if bound == spec.n + 1 and must == X:
        rep = reduce(C, X, spec.n)
        if rep.condition_holds:
            corr = verify_correspondence(C, X, spec.n, cap=cap, report=rep)
            doc["correspondence"] = corr.to_dict()
            text.append("correspondence with the reduction:")
            text += _checks_text(corr.checks)
            passed = bool(corr)
        else:
            doc["correspondence"] = None
            text.append("correspondence with the reduction: not applicable (the orthogonals differ)")
    return doc, text, passed


COMMANDS = {"verify-example": cmd_verify_example, "ext-table": cmd_ext_table,
            "reduce": cmd_reduce, "cluster": cmd_cluster}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--spec", help="instance file (YAML)")
    common.add_argument("--field", type=int, default=None, metavar="PRIME",
                        help="override the field characteristic")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write the report here (atomically) instead of stdout")
    p = _Parser(prog="extrired", description="Reductions of rigid subcategories on Nakayama-type categories.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify-example", parents=[common], help="run the checks of a bundled example")
    v.add_argument("example", choices=EXAMPLES)
    e = sub.add_parser("ext-table", parents=[common], help="tables of E^k dimensions")
    e.add_argument("--k-max", type=int, default=3)
    sub.add_parser("reduce", parents=[common], help="reduction at X")
    c = sub.add_parser("cluster", parents=[common], help="cluster-tilting subcategories containing X")
    c.add_argument("--cap", type=int, default=None, help="search node cap")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        sys.stderr.write(f"{parser.prog}: error: {e}\n")
        return EXIT_INPUT
    fmt = args.format
    try:
        doc, text, passed = COMMANDS[args.command](args)
    except InputError as e:
        return _report_error(e, "input error", EXIT_INPUT, fmt, args.out)
    except MathematicalFailure as e:
        return _report_error(e, "check failed", EXIT_FAIL, fmt, args.out)
    except ExtriredError as e:
        return _report_error(e, "internal error", EXIT_FAIL, fmt, args.out)
    _write(dumps(doc) if fmt == "json" else "\n".join(text) + "\n", args.out)
    if not passed and fmt == "text":
        for c in doc_failures(doc)[:1]:
            sys.stderr.write(f"first failure: {c}\n")
    return EXIT_OK if passed else EXIT_FAIL


def doc_failures(doc: dict) -> list[str]:
    out = []
    for key in ("checks",):
        out += [c["name"] + (f"  witness: {c['witness']}" if "witness" in c else "")
                for c in doc.get(key, []) if not c["passed"]]
    for key in ("reduction", "correspondence"):
        sub = doc.get(key) or {}
        out += [c["name"] for c in sub.get("checks", []) if not c["passed"]]
    return out


def _report_error(e: Exception, label: str, code: int, fmt: str, out) -> int:
    if fmt == "json":
        _write(dumps(_error_doc(e)), out)
    else:
        sys.stderr.write(f"{label}: {type(e).__name__}: {e}\n")
    return code


def _error_doc(e: Exception) -> dict:
    d = {"error": type(e).__name__, "message": str(e), "passed": False}
    w = getattr(e, "witness", None)
    if w is not None:
        d["witness"] = to_jsonable(w)
    for attr in ("field", "line"):
        if getattr(e, attr, None) is not None:
            d[attr] = getattr(e, attr)
    return d


if __name__ == "__main__":
    sys.exit(main())
