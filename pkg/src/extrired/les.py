"""Dimension checks for the long exact sequences attached to a conflation.

For A -> B -> C and a test object X the sequence

    C(X, A) -> C(X, B) -> C(X, C) -> E(X, A) -> E(X, B) -> E(X, C) -> E^2(X, A) -> ...

is exact, as is the contravariant one starting C(C, Y) -> C(B, Y) -> C(A, Y) -> E(C, Y) -> ...
Dimensions alone pin the ranks of the maps between two zero terms: with
r_i the rank of the map out of term i, exactness gives d_i = r_{i-1} + r_i.
"""
from __future__ import annotations

from .extri import Conflation, ExtriCategory


def covariant_dims(C: ExtriCategory, conf: Conflation, X, kmax: int) -> list[int]:
    dims = [C.hom(X, conf.A), C.hom(X, conf.B), C.hom(X, conf.C)]
    for k in range(1, kmax + 1):
        dims += [C.e_dim(k, X, conf.A), C.e_dim(k, X, conf.B), C.e_dim(k, X, conf.C)]
    return dims


def contravariant_dims(C: ExtriCategory, conf: Conflation, Y, kmax: int) -> list[int]:
    dims = [C.hom(conf.C, Y), C.hom(conf.B, Y), C.hom(conf.A, Y)]
    for k in range(1, kmax + 1):
        dims += [C.e_dim(k, conf.C, Y), C.e_dim(k, conf.B, Y), C.e_dim(k, conf.A, Y)]
    return dims


def rank_profile(dims, left_zero: bool):
    """Ranks forced by exactness, or the first index where no ranks fit.

    Returns ``(True, ranks)`` with ``ranks[i]`` the rank of the map out of
    term i (``None`` if undetermined), or ``(False, i)``.  ``left_zero`` says
    the sequence starts 0 -> d_0.  Ranks propagate in both directions through
    d_i = r_{i-1} + r_i until nothing changes.
    """
    n = len(dims)
    r = [None] * (n + 1)   # r[i + 1] is the rank out of term i; r[0] the rank into term 0
    if left_zero:
        r[0] = 0
    changed = True
    while changed:
        changed = False
        for i, d in enumerate(dims):
            a, b = r[i], r[i + 1]
            if a is not None and b is not None:
                if a + b != d:
                    return False, i
                continue
            if a is not None:
                new = (a, d - a)
            elif b is not None:
                new = (d - b, b)
            elif d == 0:
                new = (0, 0)
            else:
                continue
            if min(new) < 0:
                return False, i
            r[i], r[i + 1] = new
            changed = True
    return True, r[1:]


def left_exact(C: ExtriCategory) -> bool:
    """Hom is left exact on conflations of module-type categories (inflations are
    monomorphisms, deflations epimorphisms); the stable category has no such zero."""
    return C.kind == "module"


def check_conflation(C: ExtriCategory, conf: Conflation, probes, kmax: int = 2):
    """First failure as (side, probe, dims, index), or None."""
    lz = left_exact(C)
    for X in probes:
        for side, dims in (("covariant", covariant_dims(C, conf, X, kmax)),
                           ("contravariant", contravariant_dims(C, conf, X, kmax))):
            ok, where = rank_profile(dims, lz)
            if not ok:
                return side, X, dims, where
    return None
