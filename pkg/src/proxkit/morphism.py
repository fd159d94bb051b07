"""Proximity morphisms and their dual hemirelations.

Orientation is fixed once: a map ``h: L -> M`` has its hemirelation stored
as ``rho ⊆ Y × X`` with ``Y = Prim(M)`` (``rho.target``) and
``X = Prim(L)`` (``rho.source``), and ``y rho x`` iff ``h⁻¹(y) ⊆ x``.
Use :meth:`HemiRelation.transposed` for the ``X × Y`` view.

Morphism axioms, with ≺ the subordinations carried by source and target:

    H0  h(0) = 0, h(1) = 1, h(a ∧ b) = h(a) ∧ h(b)
    H1  a1 ≺ b1 and a2 ≺ b2  imply  h(a1 ∨ a2) ≺ h(b1) ∨ h(b2)
    H2  h(a) = ⋁{h(b) : b ≺ a}
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AxiomError, ConditionError, H0Error, HError, NotAnEnd, NotClopenUpset, SizeError
from .gleason import GleasonSpace, QuotientPospace, quotient, r_minimals_in, relation_from_subordination
from .order import ElementSet, Lattice, bits_of, mask_of
from .priestley import upsets
from .subordination import AxiomResult, Subordination, ends, leq_subordination, up_mask

ENUMERATION_LIMIT = 10 ** 6


class HemiMorphism:
    """A total map between the carriers of two subordinated lattices."""

    def __init__(self, source: Subordination, target: Subordination, table: Sequence[int]):
        self.source = source
        self.target = target
        self.table = tuple(int(v) for v in table)
        if len(self.table) != source.size or any(not 0 <= v < target.size for v in self.table):
            raise IndexError("map table does not fit the source and target carriers")

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __eq__(self, other) -> bool:
        return (isinstance(other, HemiMorphism) and self.table == other.table
                and self.source == other.source and self.target == other.target)

    def __hash__(self) -> int:
        return hash((self.table, self.source, self.target))

    def __repr__(self) -> str:
        src, tgt = self.source.lattice.names, self.target.lattice.names
        body = ", ".join(f"{src[a]}↦{tgt[b]}" for a, b in enumerate(self.table))
        return f"HemiMorphism({body})"

    def preimage(self, mask: int) -> int:
        return mask_of(a for a, b in enumerate(self.table) if mask >> b & 1)

    @cached_property
    def h_flags(self) -> dict[str, AxiomResult]:
        return {name: check_h(self, name) for name in ("H0", "H1", "H2")}

    @property
    def is_proximity_morphism(self) -> bool:
        return all(r.passed for r in self.h_flags.values())


def identity(s: Subordination) -> HemiMorphism:
    return HemiMorphism(s, s, range(s.size))


def _h0(h):
    L, M = h.source.lattice, h.target.lattice
    if h.table[L.bottom] != M.bottom:
        return (L.bottom,)
    if h.table[L.top] != M.top:
        return (L.top,)
    t = h.table
    for a in range(L.size):
        for b in range(L.size):
            if t[L.meet[a][b]] != M.meet[t[a]][t[b]]:
                return (a, b)


def _h1(h):
    L, M = h.source.lattice, h.target.lattice
    s, t = h.source, h.target
    f = h.table
    for a1 in range(L.size):
        for a2 in range(L.size):
            lhs = f[L.join[a1][a2]]
            for b1 in bits_of(s.rows[a1]):
                for b2 in bits_of(s.rows[a2]):
                    if not t.holds(lhs, M.join[f[b1]][f[b2]]):
                        return (a1, a2, b1, b2)


def _h2(h):
    M = h.target.lattice
    for a in range(h.source.size):
        if M.join_all(h.table[b] for b in bits_of(h.source.cols[a])) != h.table[a]:
            return (a,)


def check_h(h: HemiMorphism, which: str) -> AxiomResult:
    """Check H0, H1 or H2; a failure carries the least witness tuple."""
    fn = {"H0": _h0, "H1": _h1, "H2": _h2}.get(which.upper())
    if fn is None:
        raise ValueError(f"unknown morphism axiom {which!r}")
    w = fn(h)
    return AxiomResult(which.upper(), w is None, w)


def _require_h(h: HemiMorphism, names=("H0", "H1", "H2")) -> None:
    for name in names:
        res = h.h_flags[name]
        if not res.passed:
            cls = H0Error if name == "H0" else HError
            raise cls(f"{name} fails with witness {res.witness}")


class HemiRelation:
    """``rho ⊆ Y × X`` stored as ``rows[y] = rho[y, -]`` (a bitmap over X)."""

    def __init__(self, source: GleasonSpace, target: GleasonSpace, rows: Sequence[int]):
        self.source = source   # X, dual of the domain lattice
        self.target = target   # Y, dual of the codomain lattice
        self.rows = tuple(int(r) for r in rows)
        if len(self.rows) != target.size or any(r >> source.size for r in self.rows):
            raise IndexError("hemirelation rows do not match the point carriers")

    @classmethod
    def from_pairs(cls, source: GleasonSpace, target: GleasonSpace, pairs) -> "HemiRelation":
        rows = [0] * target.size
        for y, x in pairs:
            rows[y] |= 1 << x
        return cls(source, target, rows)

    def related(self, y: int, x: int) -> bool:
        return bool(self.rows[y] >> x & 1)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(y, x) for y in range(self.target.size) for x in bits_of(self.rows[y])]

    @property
    def matrix(self) -> np.ndarray:
        """Boolean matrix indexed ``[y, x]``."""
        ny, nx = self.target.size, self.source.size
        return np.array([[self.related(y, x) for x in range(nx)] for y in range(ny)],
                        dtype=bool).reshape(ny, nx)

    def transposed(self) -> np.ndarray:
        """The same relation indexed ``[x, y]``, the ``X × Y`` orientation."""
        return self.matrix.T

    def preimage(self, mask: int) -> int:
        """rho[-, E] for a bitmap E over X."""
        return mask_of(y for y in range(self.target.size) if self.rows[y] & mask)

    def saturation(self, mask: int) -> int:
        """(rho[-, O^c])^c for a bitmap O over X."""
        full_x = self.source.full
        return self.target.full & ~self.preimage(full_x & ~mask)

    def __eq__(self, other) -> bool:
        return isinstance(other, HemiRelation) and self.rows == other.rows and \
            self.source.poset == other.source.poset and self.target.poset == other.target.poset

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"HemiRelation({self.pairs})"

    @cached_property
    def condition_flags(self) -> dict[str, AxiomResult]:
        return check_conditions(self)

    def require_conditions(self) -> None:
        for name, res in self.condition_flags.items():
            if not res.passed:
                raise ConditionError(f"condition {name} fails with witness {res.witness}")


def _cond1(rho):
    Yup = rho.target.poset.up
    Xup = rho.source.poset.up
    for y1 in range(rho.target.size):
        for y2 in bits_of(Yup[y1]):
            for x1 in bits_of(rho.rows[y2]):
                for x2 in bits_of(Xup[x1]):
                    if not rho.related(y1, x2):
                        return (y1, y2, x1, x2)


def _cond3(rho):
    for o in upsets(rho.source.poset):
        if not rho.target.poset.is_upset(rho.saturation(o)):
            return tuple(bits_of(o))


def _cond4(rho):
    for y in range(rho.target.size):
        if not rho.rows[y]:
            return (y,)


def check_conditions(rho: HemiRelation) -> dict[str, AxiomResult]:
    """Strong meet-hemirelation conditions 1-4. Condition 2 (closedness) holds finitely."""
    out = {}
    for name, fn in (("1", _cond1), ("2", lambda r: None), ("3", _cond3), ("4", _cond4)):
        w = fn(rho)
        out[name] = AxiomResult(name, w is None, w)
    return out


def _dual(s: Subordination) -> GleasonSpace:
    try:
        return relation_from_subordination(s)
    except AxiomError as exc:
        raise AxiomError(f"lattice relation is not a subordination: {exc}") from None


def relation_from_hemimorphism(h: HemiMorphism) -> HemiRelation:
    """rho_h over Prim(M) × Prim(L): y rho x iff h⁻¹(y) ⊆ x."""
    _require_h(h, ("H0",))
    X, Y = _dual(h.source), _dual(h.target)
    xs = [p.bits for p in X.space.points]
    rows = []
    for y in Y.space.points:
        pre = h.preimage(y.bits)
        rows.append(mask_of(i for i, x in enumerate(xs) if pre & ~x == 0))
    return HemiRelation(X, Y, rows)


def hemimorphism_from_relation(rho: HemiRelation) -> HemiMorphism:
    """The unique h with η(h(a)) = (rho[-, η(a)^c])^c for every a."""
    X, Y = rho.source, rho.target
    if X.space is None or Y.space is None:
        raise ConditionError("hemirelation endpoints must be duals of lattices")
    L, M = X.space.lattice, Y.space.lattice
    where = {}
    for b in range(M.size):
        where.setdefault(Y.space.eta_table[b], b)
    table = []
    for a in range(L.size):
        sat = rho.saturation(X.space.eta_table[a])
        b = where.get(sat)
        if b is None or (a == L.bottom and b != M.bottom):
            raise NotClopenUpset(f"(rho[-, η({L.names[a]})^c])^c = {sorted(bits_of(sat))} "
                                 "is not the η-image of an admissible element")
        table.append(b)
    return HemiMorphism(X.subordination, Y.subordination, table)


def _r_minimal_masks(G: GleasonSpace, mask: int) -> int:
    return r_minimals_in(G, mask).bits


def check_ofc(rho: HemiRelation, source: GleasonSpace | None = None,
              target: GleasonSpace | None = None) -> AxiomResult:
    """Ordered forth condition.

    For y1, y2 in Y, x1 R-minimal in rho[y1, -] and x2 in X:
    y1 rho x1, y1 R y2 and y2 rho x2 imply x1 R x2. The witness is the least
    ``(y1, y2, x1, x2)``.
    """
    X = source or rho.source
    Y = target or rho.target
    X.require_preorder()
    Y.require_preorder()
    for y1 in range(Y.size):
        mins = _r_minimal_masks(X, rho.rows[y1])
        for y2 in bits_of(Y.rows[y1]):
            for x1 in bits_of(mins):
                for x2 in bits_of(rho.rows[y2]):
                    if not X.related(x1, x2):
                        return AxiomResult("ofc", False, (y1, y2, x1, x2))
    return AxiomResult("ofc", True, None)


def check_dvc(rho: HemiRelation, source: GleasonSpace | None = None) -> AxiomResult:
    """De Vries condition: rho[-, O^c] = rho[-, R[-, O^c]] for every upset O of X.

    The interior in the general statement is the identity here. The
    witness is the least offending upset O, as point indices.
    """
    X = source or rho.source
    for o in upsets(X.poset):
        oc = X.full & ~o
        if rho.preimage(oc) != rho.preimage(X.preimage(oc)):
            return AxiomResult("dvc", False, tuple(bits_of(o)))
    return AxiomResult("dvc", True, None)


def star(h1: HemiMorphism, h2: HemiMorphism) -> HemiMorphism:
    """h2 ⋆ h1 : a ↦ ⋁{h2(h1(b)) : b ≺ a} for h1: L -> M and h2: M -> N."""
    if h1.target.lattice != h2.source.lattice:
        raise HError("morphisms are not composable")
    _require_h(h1)
    _require_h(h2)
    N = h2.target.lattice
    s = h1.source
    table = [N.join_all(h2.table[h1.table[b]] for b in bits_of(s.cols[a])) for a in range(s.size)]
    return HemiMorphism(h1.source, h2.target, table)


def compose_relations(rho1: HemiRelation, rho2: HemiRelation) -> HemiRelation:
    """rho1 ⋆ rho2: the hemirelation of h2 ⋆ h1 where h_i corresponds to rho_i."""
    h1 = hemimorphism_from_relation(rho1)
    h2 = hemimorphism_from_relation(rho2)
    return relation_from_hemimorphism(star(h1, h2))


@dataclass(frozen=True)
class EndsMap:
    domain: list[ElementSet]     # End(M)
    codomain: list[ElementSet]   # End(L)
    table: tuple[int, ...]

    def __call__(self, k: int) -> int:
        return self.table[k]


def ends_map(h: HemiMorphism) -> EndsMap:
    """End(h): End(M) -> End(L), p ↦ ⇑h⁻¹(p)."""
    _require_h(h)
    src_ends = [p.bits for p in ends(h.source)]
    tgt_ends = [p.bits for p in ends(h.target)]
    table = []
    for p in tgt_ends:
        img = up_mask(h.source, h.preimage(p))
        if img not in src_ends:
            raise NotAnEnd(f"⇑h⁻¹(p) = {sorted(bits_of(img))} is not an end")
        table.append(src_ends.index(img))
    for i, p in enumerate(tgt_ends):
        for j, q in enumerate(tgt_ends):
            if p & ~q == 0 and src_ends[table[i]] & ~src_ends[table[j]]:
                raise NotAnEnd("End(h) is not monotone")
    n = h.source.size
    m = h.target.size
    return EndsMap([ElementSet(m, p) for p in tgt_ends], [ElementSet(n, p) for p in src_ends], tuple(table))


def check_minimal_preimage(h: HemiMorphism) -> AxiomResult:
    """⇑(h⁻¹(⇑y)) = ⇑x for every y and every x R-minimal in rho[y, -]."""
    _require_h(h)
    rho = relation_from_hemimorphism(h)
    X, Y = rho.source, rho.target
    for y, ybits in enumerate(p.bits for p in Y.space.points):
        lhs = up_mask(h.source, h.preimage(up_mask(h.target, ybits)))
        for x in bits_of(_r_minimal_masks(X, rho.rows[y])):
            if lhs != up_mask(h.source, X.space.points[x].bits):
                return AxiomResult("minimal-preimage", False, (y, x))
    return AxiomResult("minimal-preimage", True, None)


@dataclass(frozen=True)
class XiMap:
    domain: QuotientPospace     # Y/≡
    codomain: QuotientPospace   # X/≡
    table: tuple[int, ...]

    def __call__(self, k: int) -> int:
        return self.table[k]


def xi_map(rho: HemiRelation) -> XiMap:
    """y^≡ ↦ x^≡ for x R-minimal in rho[y, -]; a monotone map Y/≡ -> X/≡."""
    rho.require_conditions()
    for res in (check_ofc(rho), check_dvc(rho)):
        if not res.passed:
            raise ConditionError(f"{res.name} fails with witness {res.witness}")
    X, Y = rho.source, rho.target
    QX, QY = quotient(X), quotient(Y)
    table = []
    for k, cls in enumerate(QY.classes):
        images = set()
        for y in cls:
            images.update(QX.projection[x] for x in bits_of(_r_minimal_masks(X, rho.rows[y])))
        if len(images) != 1:
            raise ConditionError(f"class {k} has R-minimal images in {len(images)} classes")
        table.append(images.pop())
    for i in range(QY.size):
        for j in range(QY.size):
            if QY.order.leq[i, j] and not QX.order.leq[table[i], table[j]]:
                raise ConditionError(f"ξ is not monotone on classes {i} <= {j}")
    return XiMap(QY, QX, tuple(table))


def check_xi_square(h: HemiMorphism) -> AxiomResult:
    """σ_L ∘ ξ(rho_h) agrees with End(h) ∘ σ_M on every class of Prim(M)/≡."""
    from .gleason import sigma_check

    rho = relation_from_hemimorphism(h)
    xi = xi_map(rho)
    em = ends_map(h)
    sig_x = sigma_check(rho.source)
    sig_y = sigma_check(rho.target)
    for k in range(xi.domain.size):
        if sig_x.sigma[xi(k)] != em(sig_y.sigma[k]):
            return AxiomResult("xi-square", False, (k,))
    return AxiomResult("xi-square", True, None)


def compose_xi(first: XiMap, second: XiMap) -> tuple[int, ...]:
    """Table of ``first ∘ second`` (apply ``second``, then ``first``)."""
    return tuple(first.table[v] for v in second.table)


def enumerate_strong_meet_hemimorphisms(L: Lattice, M: Lattice,
                                        limit: int = ENUMERATION_LIMIT) -> list[tuple[int, ...]]:
    """All tables h: L -> M satisfying H0, in lexicographic order."""
    if L.size == 1:
        return [(M.bottom,)] if M.bottom == M.top else []
    free = [a for a in range(L.size) if a not in (L.bottom, L.top)]
    if M.size ** len(free) > limit:
        raise SizeError(f"{M.size}^{len(free)} candidate maps exceed the limit of {limit}")
    out = []
    table = [0] * L.size
    table[L.bottom], table[L.top] = M.bottom, M.top
    for values in itertools.product(range(M.size), repeat=len(free)):
        for a, v in zip(free, values):
            table[a] = v
        if all(table[L.meet[a][b]] == M.meet[table[a]][table[b]]
               for a in range(L.size) for b in range(a + 1, L.size)):
            out.append(tuple(table))
    return sorted(out)


def proximity_morphisms(s: Subordination, t: Subordination) -> list[HemiMorphism]:
    """Every map between the carriers of ``s`` and ``t`` satisfying H0, H1 and H2."""
    maps = [HemiMorphism(s, t, tab) for tab in enumerate_strong_meet_hemimorphisms(s.lattice, t.lattice)]
    return [h for h in maps if h.is_proximity_morphism]


def leq_morphism(L: Lattice, M: Lattice, table: Sequence[int]) -> HemiMorphism:
    return HemiMorphism(leq_subordination(L), leq_subordination(M), table)
