"""Finite extriangulated categories realized inside mod(Lambda) or its stable category.

An :class:`ExtriCategory` is a roster of indecomposables of an ambient
category together with the E^1 dimension table (possibly masked by a block
structure).  Higher E^k are always computed through relative syzygies, i.e.
cocones of universal approximations by the E-projectives of the category,
never by masking ambient higher Ext.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import linalg as la
from . import representations as rp
from .algebra import (DEFAULT_FIELD, FieldSpec, IndecObject, QuiverPresentation, enumerate_indecomposables,
                      hom_basis_indices, hom_dim, is_projective, projective, injective)
from .errors import (CoconeEscapesRoster, ConeEscapesRoster, ExtDimTooLarge, InputError, InternalMismatch,
                     MaskedClassUndetermined, NoEnoughInjectives, NoEnoughProjectives, NotExtensionClosed)
from .homology import (FormalSum, ext1_interval, extension_middle, require_self_injective, stable_basis_indices,
                       stable_hom_dim)


# ---------------------------------------------------------------------------
# ambient categories
# ---------------------------------------------------------------------------

class Ambient:
    kind = "abstract"

    def __init__(self, Q: QuiverPresentation, field: FieldSpec | None = None):
        self.Q = Q
        self.field = field or DEFAULT_FIELD
        self.p = self.field.p
        self._reps = {}

    def rep(self, obj: IndecObject) -> rp.MatrixRep:
        r = self._reps.get(obj)
        if r is None:
            r = self._reps[obj] = rp.realize(self.Q, obj, self.p)
        return r

    def basis_map(self, src: IndecObject, tgt: IndecObject, a: int) -> rp.Morphism:
        return rp.interval_map(self.Q, src, tgt, a, self.p, self.rep(src), self.rep(tgt))

    def _map_from_sum(self, sources, target: IndecObject):
        """``sources`` is a list of (object, [(coef, a), ...]); returns ⊕ sources -> target."""
        reps = [self.rep(o) for o, _ in sources]
        S = rp.direct_sum(reps, self.Q, self.p)
        T = self.rep(target)
        blocks = []
        for (o, combo), R in zip(sources, reps):
            f = rp.zero_morphism(R, T)
            for coef, a in combo:
                f = f.scaled_sum(self.basis_map(o, target, a), coef)
            blocks.append(f)
        comps = tuple(np.hstack([b.comps[v] for b in blocks]) if blocks else la.zeros(T.dims[v], 0)
                      for v in range(self.Q.vertex_count))
        return rp.Morphism(S, T, comps)

    def _map_into_sum(self, source: IndecObject, targets):
        reps = [self.rep(o) for o, _ in targets]
        T = rp.direct_sum(reps, self.Q, self.p)
        S = self.rep(source)
        blocks = []
        for (o, combo), R in zip(targets, reps):
            f = rp.zero_morphism(S, R)
            for coef, a in combo:
                f = f.scaled_sum(self.basis_map(source, o, a), coef)
            blocks.append(f)
        comps = tuple(np.vstack([b.comps[v] for b in blocks]) if blocks else la.zeros(0, S.dims[v])
                      for v in range(self.Q.vertex_count))
        return rp.Morphism(S, T, comps)

    def objects(self) -> list[IndecObject]:
        raise NotImplementedError


class ModuleAmbient(Ambient):
    kind = "module"

    def objects(self):
        return enumerate_indecomposables(self.Q)

    def hom(self, M: IndecObject, N: IndecObject) -> int:
        return hom_dim(self.Q, M, N, self.field)

    def hom_basis(self, M, N) -> list[int]:
        return hom_basis_indices(self.Q, M, N)

    def ext1(self, C: IndecObject, A: IndecObject) -> int:
        return ext1_interval(self.Q, C, A)

    def middle(self, C: IndecObject, A: IndecObject):
        dim, B = extension_middle(self.Q, C, A, self.p)
        if dim != self.ext1(C, A):
            raise InternalMismatch(f"dim Ext^1({C}, {A}): table {self.ext1(C, A)}, envelope route {dim}")
        return dim, B

    def cocone(self, sources, target: IndecObject) -> FormalSum:
        f = self._map_from_sum(sources, target)
        if not f.is_surjective():
            raise NoEnoughProjectives(f"the approximation of {target} is not a deflation")
        K, _ = rp.kernel(f)
        return FormalSum(dict(rp.decompose(K)))

    def cone(self, source: IndecObject, targets) -> FormalSum:
        f = self._map_into_sum(source, targets)
        if not f.is_injective():
            raise NoEnoughInjectives(f"the approximation of {source} is not an inflation")
        C, _ = rp.cokernel(f)
        return FormalSum(dict(rp.decompose(C)))


class StableAmbient(Ambient):
    """Stable category of a self-injective algebra; Σ is the cosyzygy."""

    kind = "stable"

    def __init__(self, Q, field=None):
        require_self_injective(Q)
        super().__init__(Q, field)

    def objects(self):
        return [o for o in enumerate_indecomposables(self.Q) if not is_projective(self.Q, o)]

    def hom(self, M, N) -> int:
        return stable_hom_dim(self.Q, M, N, self.field)

    def hom_basis(self, M, N) -> list[int]:
        return stable_basis_indices(self.Q, M, N)

    def ext1(self, C, A) -> int:
        from .homology import sigma_indec
        S = sigma_indec(self.Q, A)
        return 0 if S is None else len(stable_basis_indices(self.Q, C, S))

    def _strip(self, S: FormalSum) -> FormalSum:
        return FormalSum({o: m for o, m in S.items() if not is_projective(self.Q, o)})

    def middle(self, C, A):
        # over a self-injective algebra Ext^1(C, A) = stable Hom(C, ΣA), and a
        # short exact sequence with that class gives the triangle up to projectives
        dim, B = extension_middle(self.Q, C, A, self.p)
        if dim != self.ext1(C, A):
            raise InternalMismatch(f"stable E({C}, {A}): table {self.ext1(C, A)}, envelope route {dim}")
        return dim, (None if B is None else self._strip(B))

    def cocone(self, sources, target):
        # the cover P(top) -> target makes the map onto without changing the stable cocone
        P = projective(self.Q, target.top)
        f = self._map_from_sum(list(sources) + [(P, [(1, target.length)])], target)
        K, _ = rp.kernel(f)
        return self._strip(FormalSum(dict(rp.decompose(K))))

    def cone(self, source, targets):
        I = injective(self.Q, source.socle(self.Q))
        f = self._map_into_sum(source, list(targets) + [(I, [(1, source.length)])])
        C, _ = rp.cokernel(f)
        return self._strip(FormalSum(dict(rp.decompose(C))))


# ---------------------------------------------------------------------------
# conflations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Conflation:
    A: FormalSum
    B: FormalSum
    C: FormalSum
    witness: str = ""

    def __str__(self):
        return f"{self.A} -> {self.B} -> {self.C}"

    def __add__(self, other: "Conflation") -> "Conflation":
        return Conflation(self.A + other.A, self.B + other.B, self.C + other.C, "direct sum")


# ---------------------------------------------------------------------------
# the category
# ---------------------------------------------------------------------------

class ExtriCategory:
    """A finite extriangulated category: a roster of ambient indecomposables,
    closed under extensions for the (optionally masked) E."""

    def __init__(self, ambient: Ambient, roster: Iterable[IndecObject], b2: Iterable[IndecObject] = (),
                 e1: np.ndarray | None = None, name: str = "", parent: "ExtriCategory | None" = None):
        self.ambient = ambient
        self.Q = ambient.Q
        self.field = ambient.field
        self.p = ambient.p
        self.name = name
        self.parent = parent
        self.roster = tuple(sorted(set(roster)))
        if len(self.roster) > 64:
            raise InputError("rosters larger than 64 indecomposables are not supported")
        legal = set(ambient.objects())
        for o in self.roster:
            if o not in legal:
                raise InputError(f"{o} is not an indecomposable of the ambient {ambient.kind} category")
        self.index = {o: i for i, o in enumerate(self.roster)}
        self.b2 = frozenset(b2) & frozenset(self.roster)
        n = len(self.roster)
        if e1 is None:
            e1 = np.array([[ambient.ext1(c, a) for a in self.roster] for c in self.roster], dtype=np.int64)
            e1 = e1.reshape(n, n)
        mask = np.array([[0 if (c in self.b2 or a in self.b2) else 1 for a in self.roster] for c in self.roster],
                        dtype=np.int64).reshape(n, n)
        self.e1 = e1 * mask
        self.e1.setflags(write=False)
        self._omega = {}
        self._sigma = {}
        self._tables = {1: self.e1}
        self._dual_tables = {1: self.e1}

    # -- basic data -------------------------------------------------------
    @property
    def kind(self) -> str:
        return self.ambient.kind

    def __len__(self):
        return len(self.roster)

    def __contains__(self, obj):
        return obj in self.index

    def __repr__(self):
        return f"ExtriCategory({self.name or self.kind}, {len(self.roster)} objects)"

    def is_masked(self, c: IndecObject, a: IndecObject) -> bool:
        return c in self.b2 or a in self.b2

    def hom(self, M, N) -> int:
        total = 0
        for a, ma in FormalSum.of(M).items():
            for b, mb in FormalSum.of(N).items():
                total += ma * mb * self.ambient.hom(a, b)
        return total

    def projectives(self) -> tuple:
        """P_E: objects P with E(P, X) = 0 for every X in the roster."""
        return tuple(o for i, o in enumerate(self.roster) if not self.e1[i].any())

    def injectives(self) -> tuple:
        return tuple(o for i, o in enumerate(self.roster) if not self.e1[:, i].any())

    def is_frobenius(self) -> bool:
        return set(self.projectives()) == set(self.injectives())

    def is_weakly_idempotent_complete(self) -> bool:
        # rosters list indecomposables, so add(roster) is closed under summands
        return len(set(self.roster)) == len(self.roster) and all(o in set(self.ambient.objects())
                                                                 for o in self.roster)

    def vector(self, M) -> np.ndarray:
        v = np.zeros(len(self.roster), dtype=np.int64)
        for o, m in FormalSum.of(M).items():
            if o not in self.index:
                raise InputError(f"{o} is not in the category")
            v[self.index[o]] += m
        return v

    # -- relative syzygies ------------------------------------------------
    def _check_masked_class(self, end: IndecObject, other: FormalSum, left: bool, split: bool = False):
        """A conflation built from ambient data lies in the masked E only if its
        class has no component the mask kills; refuse to guess when it might.
        A sequence known to split has zero class and always passes."""
        if split:
            return
        for o in other.support():
            c, a = (end, o) if left else (o, end)
            if self.is_masked(c, a) and self.ambient.ext1(c, a):
                raise MaskedClassUndetermined(
                    f"conflation through {end} may have a nonzero component in masked E({c}, {a})")

    def precover_sources(self, M: IndecObject, pool) -> list:
        return [(P, [(1, a)]) for P in pool for a in self.ambient.hom_basis(P, M)]

    def preenvelope_targets(self, M: IndecObject, pool) -> list:
        return [(I, [(1, a)]) for I in pool for a in self.ambient.hom_basis(M, I)]

    def omega_rel(self, M, pad=None) -> FormalSum:
        """Cocone of the universal add(P_E)-approximation of M.

        ``pad=(P, rng)`` appends one more E-projective summand P with a random
        map into each target summand (used for precover-independence tests).
        """
        out = FormalSum()
        for obj, mult in FormalSum.of(M).items():
            if pad is None:
                K = self._omega.get(obj)
                if K is None:
                    K = self._omega[obj] = self._relative_cocone(obj, None)
            else:
                K = self._relative_cocone(obj, pad)
            out = out + K * mult
        return out

    def _relative_cocone(self, obj: IndecObject, pad) -> FormalSum:
        if obj not in self.index:
            raise InputError(f"{obj} is not in the category")
        if pad is None and obj in self.projectives():
            return FormalSum()   # identity deflation
        sources = self.precover_sources(obj, self.projectives())
        if pad is not None:
            P, rng = pad
            if P not in self.projectives():
                raise InputError(f"padding object {P} is not E-projective")
            basis = self.ambient.hom_basis(P, obj)
            sources.append((P, [(int(rng.integers(0, self.p)), a) for a in basis]))
        return self.deflation_cocone(obj, sources)

    def deflation_cocone(self, obj: IndecObject, sources) -> FormalSum:
        """Cocone of ⊕ sources -> obj, provided the map is a deflation of this category."""
        K = self.ambient.cocone(sources, obj)
        for o in K.support():
            if o not in self.index:
                raise CoconeEscapesRoster(obj, K)
        self._check_masked_class(obj, K, left=True, split=any(o == obj for o, _ in sources))
        return K

    def sigma_rel(self, M) -> FormalSum:
        out = FormalSum()
        for obj, mult in FormalSum.of(M).items():
            C = self._sigma.get(obj)
            if C is None:
                if obj not in self.index:
                    raise InputError(f"{obj} is not in the category")
                targets = self.preenvelope_targets(obj, self.injectives())
                C = self.ambient.cone(obj, targets)
                for o in C.support():
                    if o not in self.index:
                        raise ConeEscapesRoster(obj, C)
                self._check_masked_class(obj, C, left=False, split=any(o == obj for o, _ in targets))
                self._sigma[obj] = C
            out = out + C * mult
        return out

    def omega_matrix(self) -> np.ndarray:
        return np.array([self.vector(self.omega_rel(o)) for o in self.roster], dtype=np.int64).reshape(
            len(self.roster), len(self.roster))

    def sigma_matrix(self) -> np.ndarray:
        return np.array([self.vector(self.sigma_rel(o)) for o in self.roster], dtype=np.int64).reshape(
            len(self.roster), len(self.roster))

    # -- E^k ----------------------------------------------------------------
    def e_table(self, k: int) -> np.ndarray:
        """E^k(roster[i], roster[j]) = E^{k-1}(Ω roster[i], roster[j])."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if k not in self._tables:
            W = self.omega_matrix()
            prev = self.e_table(k - 1)
            T = W @ prev
            T.setflags(write=False)
            self._tables[k] = T
        return self._tables[k]

    def e_table_dual(self, k: int) -> np.ndarray:
        """The same table computed from the other side: E^k(X, Y) = E^{k-1}(X, Σ Y)."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if k not in self._dual_tables:
            V = self.sigma_matrix()
            T = self.e_table_dual(k - 1) @ V.T
            T.setflags(write=False)
            self._dual_tables[k] = T
        return self._dual_tables[k]

    def e_dim(self, k: int, M, N, pad_rng=None) -> int:
        """dim E^k(M, N).  With ``pad_rng`` each relative syzygy is taken from an
        approximation padded by a random extra E-projective summand."""
        if pad_rng is None:
            return int(self.vector(M) @ self.e_table(k) @ self.vector(N))
        M = FormalSum.of(M)
        projs = self.projectives()
        for _ in range(k - 1):
            if M.is_zero():
                return 0
            if projs:
                P = projs[int(pad_rng.integers(0, len(projs)))]
                M = self.omega_rel(M, pad=(P, pad_rng))
            else:
                M = self.omega_rel(M)
        return int(self.vector(M) @ self.e1 @ self.vector(N))

    # -- conflations --------------------------------------------------------
    def middle(self, C: IndecObject, A: IndecObject):
        """(ambient dim E(C, A), middle term of a nonzero class), ignoring the mask."""
        return self.ambient.middle(C, A)

    def nonsplit_conflations(self) -> list[Conflation]:
        out = []
        for c in self.roster:
            for a in self.roster:
                if self.e1[self.index[c], self.index[a]]:
                    dim, B = self.middle(c, a)
                    out.append(Conflation(FormalSum(a), B, FormalSum(c), f"class in E({c}, {a}), dim {dim}"))
        return out

    @staticmethod
    def split(A, C) -> Conflation:
        A, C = FormalSum.of(A), FormalSum.of(C)
        return Conflation(A, A + C, C, "split")

    def table_rows(self, k: int) -> list[list[int]]:
        return self.e_table(k).tolist()


def extension_closure_witness(cat: ExtriCategory, members, strict: bool = True):
    """Return a triple (A, B, C) with A, C in ``members``, E(C, A) != 0 in ``cat``
    and middle term B outside add(members); None if closed.

    Raises ExtDimTooLarge when a nonzero E(C, A) has dimension > 1, since then
    one class does not account for every middle term.
    """
    members = set(members)
    for c in sorted(members):
        for a in sorted(members):
            if not cat.e1[cat.index[c], cat.index[a]]:
                continue
            dim, B = cat.middle(c, a)
            if dim > 1:
                if strict:
                    raise ExtDimTooLarge(c, a, dim)
                continue
            if any(o not in members for o in B.support()):
                return (a, B, c)
    return None


def build_module_cat(Q: QuiverPresentation, field: FieldSpec | None = None, name: str = "") -> ExtriCategory:
    amb = ModuleAmbient(Q, field)
    return ExtriCategory(amb, amb.objects(), name=name or f"mod {Q.describe()}")


def build_stable_cat(Q: QuiverPresentation, field: FieldSpec | None = None, name: str = "") -> ExtriCategory:
    amb = StableAmbient(Q, field)
    return ExtriCategory(amb, amb.objects(), name=name or f"stmod {Q.describe()}")


def build_extension_closed_sub(parent: ExtriCategory, subset, b2=(), name: str = "",
                               check: bool = True) -> ExtriCategory:
    """Full subcategory on ``subset`` with E inherited from ``parent``; objects of
    ``b2`` get E identically zero in either argument."""
    subset = sorted(set(subset))
    for o in subset:
        if o not in parent.index:
            raise InputError(f"{o} is not in the parent category")
    idx = [parent.index[o] for o in subset]
    e1 = parent.e1[np.ix_(idx, idx)].copy() if idx else np.zeros((0, 0), dtype=np.int64)
    child = ExtriCategory(parent.ambient, subset, b2=set(b2) | (parent.b2 & set(subset)), e1=e1,
                          name=name, parent=parent)
    if check:
        w = extension_closure_witness(child, subset)
        if w is not None:
            raise NotExtensionClosed(*w)
    return child
