"""Nakayama algebras given by a linear or cyclic quiver with a uniform nilpotency
relation, and their indecomposable (interval) modules.

Vertices are 0-based and arrows point ``i -> i+1``.  The interval module
``M(i, l)`` has top ``i`` and composition factors ``i, i+1, ..., i+l-1``
(indices taken modulo the vertex count on a cyclic quiver); arrows act from
the top towards the socle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalMismatch, InvalidPresentation


class Shape(enum.Enum):
    LINEAR = "linear"
    CYCLIC = "cyclic"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 32003

    def __post_init__(self):
        if not isinstance(self.characteristic, int) or not _is_prime(self.characteristic):
            raise InvalidPresentation(f"field characteristic {self.characteristic!r} is not prime")

    @property
    def p(self) -> int:
        return self.characteristic


DEFAULT_FIELD = FieldSpec()


@dataclass(frozen=True)
class QuiverPresentation:
    """``nilpotency=None`` means no relation (only allowed for a linear quiver)."""

    shape: Shape
    vertex_count: int
    nilpotency: int | None = None

    def __post_init__(self):
        if isinstance(self.shape, str):
            try:
                object.__setattr__(self, "shape", Shape(self.shape.lower()))
            except ValueError:
                raise InvalidPresentation(f"unknown quiver shape {self.shape!r}") from None
        if not isinstance(self.vertex_count, int) or self.vertex_count < 1:
            raise InvalidPresentation("vertex_count must be a positive integer")
        t = self.nilpotency
        if t is None:
            if self.shape is Shape.CYCLIC:
                raise InvalidPresentation("a cyclic quiver needs a finite nilpotency bound")
        elif not isinstance(t, int) or t < 2:
            raise InvalidPresentation("nilpotency must be an integer >= 2")

    @classmethod
    def linear(cls, n: int, t: int | None = None) -> "QuiverPresentation":
        return cls(Shape.LINEAR, n, t)

    @classmethod
    def cyclic(cls, n: int, t: int) -> "QuiverPresentation":
        return cls(Shape.CYCLIC, n, t)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def is_cyclic(self) -> bool:
        return self.shape is Shape.CYCLIC

    def arrows(self) -> list[tuple[int, int]]:
        n = self.vertex_count
        if self.is_cyclic:
            return [(i, (i + 1) % n) for i in range(n)]
        return [(i, i + 1) for i in range(n - 1)]

    def vertex(self, i: int) -> int:
        if self.is_cyclic:
            return i % self.vertex_count
        if not 0 <= i < self.vertex_count:
            raise InvalidPresentation(f"vertex {i} out of range")
        return i

    def max_length(self, top: int) -> int:
        """Length of the indecomposable projective at ``top``."""
        if self.is_cyclic:
            return self.nilpotency
        room = self.vertex_count - top
        return room if self.nilpotency is None else min(self.nilpotency, room)

    def max_colength(self, socle: int) -> int:
        """Length of the indecomposable injective with socle ``socle``."""
        if self.is_cyclic:
            return self.nilpotency
        room = socle + 1
        return room if self.nilpotency is None else min(self.nilpotency, room)

    def path_exists(self, start: int, steps: int) -> bool:
        """Is there a nonzero path of ``steps`` arrows leaving ``start``?"""
        return steps < self.max_length(start)

    def is_self_injective(self) -> bool:
        projs = {projective(self, i) for i in range(self.vertex_count)}
        injs = {injective(self, i) for i in range(self.vertex_count)}
        return projs == injs

    def describe(self) -> str:
        t = "inf" if self.nilpotency is None else str(self.nilpotency)
        return f"{self.shape.value}(n={self.vertex_count}, t={t})"


@dataclass(frozen=True, order=True)
class IndecObject:
    top: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise InvalidPresentation("interval modules have positive length")

    @property
    def top_vertex(self) -> int:
        return self.top

    def factors(self, Q: QuiverPresentation) -> list[int]:
        n = Q.vertex_count
        if Q.is_cyclic:
            return [(self.top + d) % n for d in range(self.length)]
        return [self.top + d for d in range(self.length)]

    def socle(self, Q: QuiverPresentation) -> int:
        return self.factors(Q)[-1]

    def dim_vector(self, Q: QuiverPresentation) -> tuple[int, ...]:
        dims = [0] * Q.vertex_count
        for v in self.factors(Q):
            dims[v] += 1
        return tuple(dims)

    def is_legal(self, Q: QuiverPresentation) -> bool:
        if not 0 <= self.top < Q.vertex_count:
            return False
        return self.length <= Q.max_length(self.top)

    def __str__(self):
        return f"M({self.top},{self.length})"

    def as_list(self) -> list[int]:
        return [self.top, self.length]


def M(top: int, length: int) -> IndecObject:
    return IndecObject(top, length)


def check_object(Q: QuiverPresentation, obj: IndecObject) -> IndecObject:
    if not obj.is_legal(Q):
        raise InvalidPresentation(f"{obj} is not a module over {Q.describe()}")
    return obj


def enumerate_indecomposables(Q: QuiverPresentation) -> list[IndecObject]:
    return [IndecObject(i, l) for i in range(Q.vertex_count) for l in range(1, Q.max_length(i) + 1)]


def projective(Q: QuiverPresentation, i: int) -> IndecObject:
    i = Q.vertex(i)
    return IndecObject(i, Q.max_length(i))


def injective(Q: QuiverPresentation, i: int) -> IndecObject:
    i = Q.vertex(i)
    L = Q.max_colength(i)
    return IndecObject(Q.vertex(i - L + 1) if Q.is_cyclic else i - L + 1, L)


def simple(Q: QuiverPresentation, i: int) -> IndecObject:
    return IndecObject(Q.vertex(i), 1)


def is_projective(Q: QuiverPresentation, obj: IndecObject) -> bool:
    return obj.length == Q.max_length(obj.top)


def is_injective(Q: QuiverPresentation, obj: IndecObject) -> bool:
    return obj.length == Q.max_colength(obj.socle(Q))


def hom_basis_indices(Q: QuiverPresentation, M: IndecObject, N: IndecObject) -> list[int]:
    """Image lengths ``a`` of the basis maps ``M -> N``.

    A map of image length ``a`` sends the top part ``M(i, a)`` of M onto the
    bottom ``a`` factors of N, so it exists iff N's factor at offset
    ``m - a`` sits at M's top vertex.
    """
    i, l = M.top, M.length
    j, m = N.top, N.length
    out = []
    for a in range(1, min(l, m) + 1):
        v = j + m - a
        if Q.is_cyclic:
            if (v - i) % Q.vertex_count == 0:
                out.append(a)
        elif v == i:
            out.append(a)
    return out


def hom_dim_interval(Q: QuiverPresentation, M: IndecObject, N: IndecObject) -> int:
    return len(hom_basis_indices(Q, M, N))


@lru_cache(maxsize=None)
def _hom_dim_checked(Q, M, N, p):
    from .representations import hom_space_dim, realize

    fast = hom_dim_interval(Q, M, N)
    slow = hom_space_dim(realize(Q, M, p), realize(Q, N, p))
    if fast != slow:
        raise InternalMismatch(f"dim Hom({M}, {N}): interval count {fast}, linear system {slow}")
    return fast


def hom_dim(Q: QuiverPresentation, M: IndecObject, N: IndecObject, field: FieldSpec | None = None,
            check: bool = True) -> int:
    """dim Hom(M, N); with ``check`` the interval count is confirmed by solving
    the commuting-square linear system."""
    check_object(Q, M)
    check_object(Q, N)
    if not check:
        return hom_dim_interval(Q, M, N)
    p = (field or DEFAULT_FIELD).p
    return _hom_dim_checked(Q, M, N, p)
