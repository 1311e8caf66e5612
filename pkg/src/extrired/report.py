"""Check records and deterministic serialization."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

# where the expected outcome of a check comes from
STATED = "stated"       # asserted by the theory or by a worked example
COMPUTED = "computed"   # compared against an independent computation
TRIVIAL = "trivial"     # holds by definition or by construction


@dataclass
class Check:
    name: str
    passed: bool
    source: str = COMPUTED
    witness: object = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": bool(self.passed), "source": self.source}
        if self.witness is not None:
            d["witness"] = to_jsonable(self.witness)
        return d

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        s = f"[{mark}] ({self.source}) {self.name}"
        if not self.passed and self.witness is not None:
            s += f"  witness: {self.witness}"
        return s


@dataclass
class CheckList:
    checks: list = field(default_factory=list)

    def add(self, name, passed, source=COMPUTED, witness=None) -> bool:
        self.checks.append(Check(name, bool(passed), source, witness))
        return bool(passed)

    def extend(self, other):
        self.checks.extend(other.checks if isinstance(other, CheckList) else other)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)


def to_jsonable(x):
    from .algebra import IndecObject
    from .homology import FormalSum

    if isinstance(x, IndecObject):
        return x.as_list()
    if isinstance(x, FormalSum):
        return [[o.as_list(), m] for o, m in x.items()]
    if hasattr(x, "as_lists") and hasattr(x, "members"):
        return x.as_lists()
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((to_jsonable(v) for v in x), key=repr)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
