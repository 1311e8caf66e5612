"""Instance files: a versioned YAML description of an algebra, a category on
it, a subcategory X and the tasks to run.

    schema: extrired.instance/1
    name: demo
    algebra: {shape: cyclic, vertices: 5, nilpotency: 3}
    field: {characteristic: 32003}
    category:
      kind: sub            # module | stable | sub
      ambient: stable      # only for kind: sub
      subset: [[0, 1], [4, 1]]
      blocks: {b1: [[0, 1]], b2: [[4, 1]]}
    X: [[0, 1]]
    n: 0
    tasks: [ext-table, reduce]
    cluster: {bound: 1, must_contain: X, cap: 200000}
    groups: {club: [[0, 1]]}

Objects are ``[top, length]`` pairs with 0-based vertices.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

import yaml

from .algebra import FieldSpec, IndecObject, QuiverPresentation, check_object, is_projective
from .errors import InputError, SpecParseError
from .extri import ExtriCategory, build_extension_closed_sub, build_module_cat, build_stable_cat
from .subcat import Subcat

SCHEMA = "extrired.instance/1"
KINDS = ("module", "stable", "sub")
TASKS = ("ext-table", "reduce", "cluster")
_TOP_KEYS = {"schema", "name", "algebra", "field", "category", "X", "n", "tasks", "cluster", "groups"}


@dataclass(frozen=True)
class ClusterBlock:
    bound: int
    must_contain: tuple | str = "X"   # "X" or a tuple of objects
    cap: int | None = None


@dataclass(frozen=True)
class InstanceSpec:
    name: str
    Q: QuiverPresentation
    field: FieldSpec
    kind: str
    X: tuple
    n: int
    ambient: str | None = None
    subset: tuple | None = None
    b1: tuple | None = None
    b2: tuple = ()
    tasks: tuple = ()
    cluster: ClusterBlock | None = None
    groups: tuple = ()   # ((name, objects), ...) in file order

    def group(self, name: str) -> tuple:
        for g, objs in self.groups:
            if g == name:
                return objs
        raise KeyError(name)

    def with_overrides(self, characteristic: int | None = None) -> "InstanceSpec":
        if characteristic is None:
            return self
        return replace(self, field=FieldSpec(characteristic))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class _Ctx:
    """Looks up source lines for dotted field paths in the composed YAML."""

    def __init__(self, root):
        self.root = root

    def line(self, path: str):
        node = self.root
        if node is None:
            return None
        for part in path.split("."):
            if isinstance(node, yaml.MappingNode):
                nxt = None
                for k, v in node.value:
                    if k.value == part:
                        nxt = v
                        break
                if nxt is None:
                    return node.start_mark.line + 1
                node = nxt
            elif isinstance(node, yaml.SequenceNode) and part.isdigit() and int(part) < len(node.value):
                node = node.value[int(part)]
            else:
                break
        return node.start_mark.line + 1

    def fail(self, msg: str, path: str):
        raise SpecParseError(msg, path, self.line(path))


def _int(ctx, v, path, lo=None, allow_none=False):
    if v is None and allow_none:
        return None
    if isinstance(v, bool) or not isinstance(v, int):
        ctx.fail(f"expected an integer, got {v!r}", path)
    if lo is not None and v < lo:
        ctx.fail(f"expected an integer >= {lo}, got {v}", path)
    return v


def _map(ctx, v, path, allowed, required=()):
    if not isinstance(v, dict):
        ctx.fail("expected a mapping", path)
    for k in v:
        if k not in allowed:
            ctx.fail(f"unknown key {k!r}", f"{path}.{k}" if path else str(k))
    for k in required:
        if k not in v:
            ctx.fail(f"missing key {k!r}", path or k)
    return v


def _objects(ctx, v, path, Q) -> tuple:
    if not isinstance(v, list):
        ctx.fail("expected a list of [top, length] pairs", path)
    out = []
    for j, item in enumerate(v):
        p = f"{path}.{j}"
        if not (isinstance(item, list) and len(item) == 2):
            ctx.fail(f"expected [top, length], got {item!r}", p)
        top = _int(ctx, item[0], p, lo=0)
        length = _int(ctx, item[1], p, lo=1)
        o = IndecObject(top, length)
        try:
            check_object(Q, o)
        except InputError as e:
            ctx.fail(str(e), p)
        if o in out:
            ctx.fail(f"{o} listed twice", p)
        out.append(o)
    return tuple(sorted(out))


def parse(text: str) -> InstanceSpec:
    try:
        root = yaml.compose(text)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise SpecParseError(f"not valid YAML: {getattr(e, 'problem', e)}", None,
                             mark.line + 1 if mark else None) from None
    ctx = _Ctx(root)
    if data is None:
        data = {}
    _map(ctx, data, "", _TOP_KEYS, ("schema", "algebra", "category", "X", "n"))
    if data["schema"] != SCHEMA:
        ctx.fail(f"unsupported schema {data['schema']!r} (expected {SCHEMA})", "schema")
    name = data.get("name", "")
    if not isinstance(name, str):
        ctx.fail("expected a string", "name")

    alg = _map(ctx, data["algebra"], "algebra", {"shape", "vertices", "nilpotency"}, ("shape", "vertices"))
    vertices = _int(ctx, alg["vertices"], "algebra.vertices", lo=1)
    t = _int(ctx, alg.get("nilpotency"), "algebra.nilpotency", lo=1, allow_none=True)
    try:
        Q = QuiverPresentation(alg["shape"], vertices, t)
    except (InputError, ValueError) as e:
        ctx.fail(str(e), "algebra")

    fld = _map(ctx, data.get("field", {}), "field", {"characteristic"})
    try:
        F = FieldSpec(_int(ctx, fld.get("characteristic", FieldSpec().characteristic), "field.characteristic", 2))
    except InputError as e:
        ctx.fail(str(e), "field.characteristic")

    cat = _map(ctx, data["category"], "category", {"kind", "ambient", "subset", "blocks"}, ("kind",))
    kind = cat["kind"]
    if kind not in KINDS:
        ctx.fail(f"kind must be one of {KINDS}", "category.kind")
    ambient = subset = b1 = None
    b2 = ()
    if kind == "sub":
        ambient = cat.get("ambient", "module")
        if ambient not in ("module", "stable"):
            ctx.fail("ambient must be module or stable", "category.ambient")
        if "subset" not in cat:
            ctx.fail("a sub category needs a subset", "category")
        subset = _objects(ctx, cat["subset"], "category.subset", Q)
        if "blocks" in cat:
            bl = _map(ctx, cat["blocks"], "category.blocks", {"b1", "b2"}, ("b1", "b2"))
            b1 = _objects(ctx, bl["b1"], "category.blocks.b1", Q)
            b2 = _objects(ctx, bl["b2"], "category.blocks.b2", Q)
            if set(b1) & set(b2) or set(b1) | set(b2) != set(subset):
                ctx.fail("blocks must partition the subset", "category.blocks")
    else:
        for k in ("ambient", "subset", "blocks"):
            if k in cat:
                ctx.fail(f"{k!r} only applies to kind: sub", f"category.{k}")
    amb_kind = ambient or kind
    if amb_kind == "stable" and not Q.is_self_injective():
        ctx.fail("the stable category needs a self-injective algebra", "category")

    def in_category(objs, path):
        for j, o in enumerate(objs):
            if amb_kind == "stable" and is_projective(Q, o):
                ctx.fail(f"{o} is projective, hence zero in the stable category", f"{path}.{j}")
            if subset is not None and o not in subset:
                ctx.fail(f"{o} is not in the category subset", f"{path}.{j}")

    if subset is not None:
        in_category(subset, "category.subset")
    X = _objects(ctx, data["X"], "X", Q)
    in_category(X, "X")
    n = _int(ctx, data["n"], "n", lo=0)

    tasks = data.get("tasks", [])
    if not isinstance(tasks, list):
        ctx.fail("expected a list", "tasks")
    for j, tk in enumerate(tasks):
        if tk not in TASKS:
            ctx.fail(f"unknown task {tk!r} (known: {', '.join(TASKS)})", f"tasks.{j}")

    cluster = None
    if "cluster" in data:
        cl = _map(ctx, data["cluster"], "cluster", {"bound", "must_contain", "cap"}, ("bound",))
        bound = _int(ctx, cl["bound"], "cluster.bound", lo=1)
        mc = cl.get("must_contain", "X")
        if mc != "X":
            mc = _objects(ctx, mc, "cluster.must_contain", Q)
            in_category(mc, "cluster.must_contain")
        cap = _int(ctx, cl.get("cap"), "cluster.cap", lo=1, allow_none=True)
        cluster = ClusterBlock(bound, mc, cap)

    groups = []
    if "groups" in data:
        gr = data["groups"]
        if not isinstance(gr, dict):
            ctx.fail("expected a mapping", "groups")
        for g, objs in gr.items():
            groups.append((str(g), _objects(ctx, objs, f"groups.{g}", Q)))

    return InstanceSpec(name=name, Q=Q, field=F, kind=kind, X=X, n=n, ambient=ambient, subset=subset,
                        b1=b1, b2=b2, tasks=tuple(tasks), cluster=cluster, groups=tuple(groups))


def load(path) -> InstanceSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise SpecParseError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)


# ---------------------------------------------------------------------------
# emitting
# ---------------------------------------------------------------------------

def _olist(objs) -> str:
    return "[" + ", ".join(f"[{o.top}, {o.length}]" for o in objs) + "]"


def emit(spec: InstanceSpec) -> str:
    Q = spec.Q
    t = "null" if Q.nilpotency is None else str(Q.nilpotency)
    lines = [
        f"schema: {SCHEMA}",
        yaml.safe_dump({"name": spec.name}).strip(),
        f"algebra: {{shape: {Q.shape.value}, vertices: {Q.vertex_count}, nilpotency: {t}}}",
        f"field: {{characteristic: {spec.field.characteristic}}}",
        "category:",
        f"  kind: {spec.kind}",
    ]
    if spec.kind == "sub":
        lines.append(f"  ambient: {spec.ambient}")
        lines.append(f"  subset: {_olist(spec.subset)}")
        if spec.b1 is not None:
            lines.append("  blocks:")
            lines.append(f"    b1: {_olist(spec.b1)}")
            lines.append(f"    b2: {_olist(spec.b2)}")
    lines.append(f"X: {_olist(spec.X)}")
    lines.append(f"n: {spec.n}")
    lines.append("tasks: [" + ", ".join(spec.tasks) + "]")
    if spec.cluster is not None:
        c = spec.cluster
        mc = "X" if c.must_contain == "X" else _olist(c.must_contain)
        parts = [f"bound: {c.bound}", f"must_contain: {mc}"]
        if c.cap is not None:
            parts.append(f"cap: {c.cap}")
        lines.append("cluster: {" + ", ".join(parts) + "}")
    if spec.groups:
        lines.append("groups:")
        for g, objs in spec.groups:
            lines.append(f"  {g}: {_olist(objs)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# building
# ---------------------------------------------------------------------------

def build_category(spec: InstanceSpec) -> ExtriCategory:
    Q, F = spec.Q, spec.field
    label = spec.name or "instance"
    if spec.kind == "module":
        return build_module_cat(Q, F, name=label)
    if spec.kind == "stable":
        return build_stable_cat(Q, F, name=label)
    parent = build_module_cat(Q, F) if spec.ambient == "module" else build_stable_cat(Q, F)
    return build_extension_closed_sub(parent, spec.subset, b2=spec.b2, name=label)


def subcat_X(spec: InstanceSpec, C: ExtriCategory) -> Subcat:
    return Subcat(C, spec.X)


def must_contain(spec: InstanceSpec, C: ExtriCategory) -> Subcat:
    if spec.cluster is None or spec.cluster.must_contain == "X":
        return subcat_X(spec, C)
    return Subcat(C, spec.cluster.must_contain)


def fixture_path(name: str) -> str:
    return os.path.join(os.path.dirname(__file__), "fixtures", f"{name}.yaml")


def load_fixture(name: str) -> InstanceSpec:
    path = fixture_path(name)
    if not os.path.exists(path):
        raise InputError(f"no bundled fixture named {name!r}")
    return load(path)
