"""Orthogonal complements, rigidity and approximations inside an ExtriCategory.

A :class:`Subcat` is the additive closure of a set of roster indecomposables.
Rigidity bounds are explicit: ``b`` means E^j vanishes for 1 <= j <= b, so a
b-rigid subcategory in this module's sense is (b+1)-rigid in the usual
(n+2) naming with b = n+1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import IndecObject
from .errors import (CoconeEscapesRoster, InputError, InternalMismatch, NoEnoughInjectives, NoEnoughProjectives,
                     NotExtensionClosed)
from .extri import ExtriCategory, extension_closure_witness
from .homology import FormalSum


class Subcat:
    __slots__ = ("parent", "members")

    def __init__(self, parent: ExtriCategory, members=()):
        members = frozenset(members)
        for o in members:
            if o not in parent.index:
                raise InputError(f"{o} is not in {parent!r}")
        self.parent = parent
        self.members = members

    @property
    def objects(self) -> list[IndecObject]:
        return sorted(self.members, key=self.parent.index.__getitem__)

    def indices(self) -> list[int]:
        return sorted(self.parent.index[o] for o in self.members)

    def mask(self) -> int:
        out = 0
        for i in self.indices():
            out |= 1 << i
        return out

    @classmethod
    def from_mask(cls, parent: ExtriCategory, mask: int) -> "Subcat":
        return cls(parent, [o for i, o in enumerate(parent.roster) if (mask >> i) & 1])

    @classmethod
    def whole(cls, parent: ExtriCategory) -> "Subcat":
        return cls(parent, parent.roster)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.objects)

    def __contains__(self, obj):
        return obj in self.members

    def __eq__(self, other):
        if isinstance(other, Subcat):
            return self.parent is other.parent and self.members == other.members
        return NotImplemented

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __le__(self, other: "Subcat") -> bool:
        return self.members <= other.members

    def __or__(self, other):
        return Subcat(self.parent, self.members | _members(other))

    def __and__(self, other):
        return Subcat(self.parent, self.members & _members(other))

    def __repr__(self):
        return "add{" + ", ".join(str(o) for o in self.objects) + "}"

    def as_lists(self) -> list[list[int]]:
        return [o.as_list() for o in self.objects]


def _members(x) -> frozenset:
    if isinstance(x, Subcat):
        return x.members
    return frozenset(x)


def _vanish_mask(C: ExtriCategory, m: int, right: bool) -> np.ndarray:
    """Boolean matrix Z[i, j]: E^k(roster i, roster j) = 0 for all 1 <= k <= m."""
    n = len(C.roster)
    Z = np.ones((n, n), dtype=bool)
    for k in range(1, m + 1):
        Z &= C.e_table(k) == 0
    return Z if right else Z.T


def right_orth(X: Subcat, m: int) -> Subcat:
    """{N : E^k(X, N) = 0 for 1 <= k <= m}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    C = X.parent
    if not X.members:
        return Subcat.whole(C)
    Z = _vanish_mask(C, m, right=True)
    rows = X.indices()
    keep = Z[rows].all(axis=0)
    return Subcat(C, [o for o, k in zip(C.roster, keep) if k])


def left_orth(X: Subcat, m: int) -> Subcat:
    """{N : E^k(N, X) = 0 for 1 <= k <= m}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    C = X.parent
    if not X.members:
        return Subcat.whole(C)
    Z = _vanish_mask(C, m, right=False)
    rows = X.indices()
    keep = Z[rows].all(axis=0)
    return Subcat(C, [o for o, k in zip(C.roster, keep) if k])


def is_b_rigid(X: Subcat, b: int) -> bool:
    C = X.parent
    idx = X.indices()
    if not idx:
        return True
    for k in range(1, b + 1):
        if C.e_table(k)[np.ix_(idx, idx)].any():
            return False
    return True


@dataclass(frozen=True)
class Approximation:
    """Universal map ⊕ X_i^{dim Hom(X_i, M)} -> M (or M -> ⊕ for envelopes).

    ``maps`` lists (X_i, image length) for each basis morphism used.
    """

    target: IndecObject
    maps: tuple
    right: bool = True

    @property
    def object(self) -> FormalSum:
        return FormalSum([o for o, _ in self.maps])

    def sources(self):
        return [(o, [(1, a)]) for o, a in self.maps]

    def is_zero(self) -> bool:
        return not self.maps


def precover(X: Subcat, M: IndecObject) -> Approximation:
    C = X.parent
    maps = tuple((o, a) for o in X.objects for a in C.ambient.hom_basis(o, M))
    return Approximation(M, maps, True)


def preenvelope(X: Subcat, M: IndecObject) -> Approximation:
    C = X.parent
    maps = tuple((o, a) for o in X.objects for a in C.ambient.hom_basis(M, o))
    return Approximation(M, maps, False)


def is_functorially_finite(X: Subcat):
    """Always true in a finite Krull-Schmidt category; returns (True, witnesses)
    with the universal precover and preenvelope of every roster object."""
    C = X.parent
    return True, {M: (precover(X, M), preenvelope(X, M)) for M in C.roster}


def _precover_is_deflation(X: Subcat, M: IndecObject) -> bool:
    C = X.parent
    if M in C.b2 and M not in X:
        # E(M, -) is masked to zero, so a deflation onto M must split
        return False
    try:
        C.deflation_cocone(M, precover(X, M).sources())
    except (NoEnoughProjectives, CoconeEscapesRoster):
        return False
    return True


def is_strongly_precovering(X: Subcat) -> bool:
    C = X.parent
    route_maps = all(_precover_is_deflation(X, M) for M in C.roster)
    route_proj = set(C.projectives()) <= X.members
    if route_maps != route_proj:
        raise InternalMismatch(
            f"strong precovering of {X}: approximation route {route_maps}, projective route {route_proj}")
    return route_proj


def _preenvelope_is_inflation(X: Subcat, M: IndecObject) -> bool:
    C = X.parent
    if M in C.b2 and M not in X:
        return False
    approx = preenvelope(X, M)
    try:
        cone = C.ambient.cone(M, approx.sources())
    except NoEnoughInjectives:
        return False
    if any(o not in C.index for o in cone.support()):
        return False
    C._check_masked_class(M, cone, left=False, split=M in X)
    return True


def is_strongly_preenveloping(X: Subcat) -> bool:
    C = X.parent
    route_maps = all(_preenvelope_is_inflation(X, M) for M in C.roster)
    route_inj = set(C.injectives()) <= X.members
    if route_maps != route_inj:
        raise InternalMismatch(
            f"strong preenveloping of {X}: approximation route {route_maps}, injective route {route_inj}")
    return route_inj


def require_extension_closed(D: Subcat) -> None:
    w = extension_closure_witness(D.parent, D.members)
    if w is not None:
        raise NotExtensionClosed(*w)


def sub_projectives(D: Subcat, check: bool = True) -> Subcat:
    """E-projectives of the extension-closed subcategory D: ^{⊥1}D ∩ D."""
    if check:
        require_extension_closed(D)
    C = D.parent
    idx = D.indices()
    E = C.e1
    return Subcat(C, [C.roster[i] for i in idx if not E[i, idx].any()])


def sub_injectives(D: Subcat, check: bool = True) -> Subcat:
    if check:
        require_extension_closed(D)
    C = D.parent
    idx = D.indices()
    E = C.e1
    return Subcat(C, [C.roster[i] for i in idx if not E[idx, i].any()])
