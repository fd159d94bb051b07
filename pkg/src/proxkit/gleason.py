"""Finite ordered Gleason spaces.

An ordered Gleason space here is a finite poset of points with a binary
relation ``R`` on it. Closedness of ``R`` (item 1) holds automatically and
the closure in item 4 is the identity, so the checkers below test the
remaining finite equalities directly:

    2   x ≤ y R z ≤ t  implies  x R t
    2'  x ≤ y  implies  x R y
    3   R is a pre-order
    4   O = (R[-, O^c])^c for every upset O

Spaces may be synthetic (any relation on any poset) or the dual of a
subordination, in which case ``x R y`` iff ``⇑x ⊆ y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import AxiomError, ImproperFilter, IsoFailure, NotRIncreasing, PreorderError
from .order import ElementSet, Poset, bits_of, mask_of
from .priestley import PriestleySpace, upset_lattice, upsets
from .subordination import (AxiomResult, Subordination, ends, is_round_filter,
                            round_filters, up_mask)

ITEMS = ("1", "2", "2'", "3", "4")


class GleasonSpace:
    """Points ordered by ``poset`` together with a relation ``R`` stored row-wise.

    ``rows[x]`` is the bitmap of ``R[x, -] = {y : x R y}``. When the space is
    the dual of a subordination, ``subordination`` and ``space`` are set.
    """

    def __init__(self, poset: Poset, rows: Iterable[int],
                 subordination: Subordination | None = None,
                 space: PriestleySpace | None = None):
        self.poset = poset
        self.rows = tuple(int(r) for r in rows)
        if len(self.rows) != poset.size or any(r >> poset.size for r in self.rows):
            raise IndexError("relation rows do not match the point carrier")
        self.subordination = subordination
        self.space = space

    @classmethod
    def from_pairs(cls, poset: Poset, pairs) -> "GleasonSpace":
        rows = [0] * poset.size
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(poset, rows)

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def related(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """``cols[y]`` is the bitmap of ``R[-, y]``."""
        return tuple(mask_of(x for x in range(self.size) if self.rows[x] >> y & 1)
                     for y in range(self.size))

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.size) for y in bits_of(self.rows[x])]

    @property
    def matrix(self) -> np.ndarray:
        k = self.size
        return np.array([[self.related(x, y) for y in range(k)] for x in range(k)], dtype=bool).reshape(k, k)

    def image(self, mask: int) -> int:
        out = 0
        for x in bits_of(mask):
            out |= self.rows[x]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        for y in bits_of(mask):
            out |= self.cols[y]
        return out

    @cached_property
    def axiom_flags(self) -> dict[str, AxiomResult]:
        return check_gleason_axioms(self)

    @property
    def is_preorder(self) -> bool:
        return self.axiom_flags["3"].passed

    def require_preorder(self) -> None:
        res = self.axiom_flags["3"]
        if not res.passed:
            raise PreorderError(f"R is not a pre-order, witness {res.witness}")

    def __repr__(self) -> str:
        return f"GleasonSpace(points={list(self.poset.names)}, R={self.pairs})"


def relation_from_subordination(s: Subordination) -> GleasonSpace:
    """Dual space of ``s``: prime filters with ``x R y`` iff ``⇑x ⊆ y``."""
    s.require()
    X = PriestleySpace(s.lattice)
    pts = [p.bits for p in X.points]
    ups = [up_mask(s, p) for p in pts]
    rows = [mask_of(j for j, y in enumerate(pts) if ups[i] & ~y == 0) for i in range(len(pts))]
    return GleasonSpace(X.order, rows, subordination=s, space=X)


def subordination_from_relation(G: GleasonSpace) -> Subordination:
    """Relation on the upsets of the points: ``O ≺ U`` iff ``R[O, -] ⊆ U``.

    Element ``i`` of the resulting lattice is ``upsets(G.poset)[i]``.
    """
    U = upset_lattice(G.poset)
    ups = upsets(G.poset)
    images = [G.image(o) for o in ups]
    rows = [mask_of(j for j, u in enumerate(ups) if img & ~u == 0) for img in images]
    return Subordination(U, rows)


def r_image(G: GleasonSpace, E) -> ElementSet:
    """R[E, -] = {x : y R x for some y ∈ E}."""
    return ElementSet(G.size, G.image(_mask(G, E)))


def r_preimage(G: GleasonSpace, E) -> ElementSet:
    """R[-, E] = {x : x R y for some y ∈ E}."""
    return ElementSet(G.size, G.preimage(_mask(G, E)))


def _mask(G: GleasonSpace, E) -> int:
    if isinstance(E, ElementSet):
        return E.bits
    if isinstance(E, int):
        return E
    return ElementSet.of(G.size, E).bits


def _item2(G):
    up = G.poset.up
    for x in range(G.size):
        for y in bits_of(up[x]):
            for z in bits_of(G.rows[y]):
                for t in bits_of(up[z]):
                    if not G.related(x, t):
                        return (x, y, z, t)


def _item2p(G):
    for x in range(G.size):
        for y in bits_of(G.poset.up[x]):
            if not G.related(x, y):
                return (x, y)


def _item3(G):
    for x in range(G.size):
        if not G.related(x, x):
            return (x,)
    for x in range(G.size):
        for y in bits_of(G.rows[x]):
            for z in bits_of(G.rows[y]):
                if not G.related(x, z):
                    return (x, y, z)


def _item4(G):
    full = G.full
    for o in upsets(G.poset):
        if full & ~G.preimage(full & ~o) != o:
            return tuple(bits_of(o))


def check_gleason_axioms(G: GleasonSpace) -> dict[str, AxiomResult]:
    """Pass/witness record for items 1, 2, 2', 3 and 4.

    Item 1 (R closed in X²) always holds on a finite discrete space. The
    item 4 witness is the offending upset, listed as point indices.
    """
    out = {"1": AxiomResult("1", True, None)}
    for name, fn in (("2", _item2), ("2'", _item2p), ("3", _item3), ("4", _item4)):
        w = fn(G)
        out[name] = AxiomResult(name, w is None, w)
    return out


def r_minimals_in(G: GleasonSpace, F) -> ElementSet:
    """Members y of F such that z R y implies y R z for every z in F."""
    G.require_preorder()
    F = _mask(G, F)
    mins = [y for y in bits_of(F) if all(G.related(y, z) for z in bits_of(G.cols[y] & F))]
    return ElementSet.of(G.size, mins)


@dataclass(frozen=True)
class QuotientPospace:
    """Classes of x ≡ y (x R y and y R x) ordered by ≤_R."""

    classes: tuple[ElementSet, ...]
    order: Poset
    projection: tuple[int, ...]  # point -> class index

    @property
    def size(self) -> int:
        return len(self.classes)

    def representative(self, k: int) -> int:
        return next(iter(self.classes[k]))


def quotient(G: GleasonSpace) -> QuotientPospace:
    G.require_preorder()
    k = G.size
    proj = [-1] * k
    classes = []
    for x in range(k):
        if proj[x] < 0:
            members = G.rows[x] & G.cols[x]
            for y in bits_of(members):
                proj[y] = len(classes)
            classes.append(members)
    m = len(classes)
    leq = np.zeros((m, m), dtype=bool)
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            verdicts = {G.related(x, y) for x in bits_of(ci) for y in bits_of(cj)}
            if len(verdicts) != 1:
                raise PreorderError(f"≤_R depends on representatives for classes {i}, {j}")
            leq[i, j] = verdicts.pop()
    names = ["{" + ",".join(G.poset.names[x] for x in bits_of(c)) + "}" for c in classes]
    order = Poset(leq, names)
    sym = leq & leq.T
    if not np.array_equal(sym, np.eye(m, dtype=bool)):
        raise PreorderError("quotient order is not antisymmetric")
    return QuotientPospace(tuple(ElementSet(k, c) for c in classes), order, tuple(proj))


def _proximity_dual(G: GleasonSpace) -> Subordination:
    s = G.subordination
    if s is None or G.space is None:
        raise AxiomError("operation needs a Gleason space built from a subordination")
    s.require(("S1", "S2", "S3", "S4", "S5", "S6", "S8"))
    return s


def phi(G: GleasonSpace, F) -> ElementSet:
    """F ↦ {x : F ⊆ x}, from proper round filters to nonempty R-increasing sets."""
    s = _proximity_dual(G)
    F = s.lattice.elements(F)
    if s.lattice.bottom in F:
        raise ImproperFilter(f"{F} contains the bottom element")
    if not is_round_filter(s, F):
        raise AxiomError(f"{F} is not a round filter")
    return ElementSet.of(G.size, (i for i, x in enumerate(G.space.points) if F <= x))


def phi_inverse(G: GleasonSpace, C) -> ElementSet:
    """C ↦ {a : C ⊆ η(a)} for a nonempty R-increasing set C."""
    s = _proximity_dual(G)
    c = _mask(G, C)
    if G.image(c) & ~c:
        raise NotRIncreasing(f"R[C, -] leaves C for C = {sorted(bits_of(c))}")
    if c == 0:
        raise ImproperFilter("the empty set corresponds to the improper filter")
    eta = G.space.eta_table
    F = ElementSet.of(s.size, (a for a in range(s.size) if c & ~eta[a] == 0))
    if not is_round_filter(s, F):
        raise IsoFailure(f"phi_inverse produced a non-round set {F}")
    return F


@dataclass(frozen=True)
class SigmaReport:
    quotient: QuotientPospace
    ends: list[ElementSet]
    sigma: tuple[int, ...]           # class index -> end index
    minimal_classes: tuple[int, ...]  # end index -> class whose members x give F_p = R[x, -]


def sigma_check(G: GleasonSpace, s: Subordination | None = None) -> SigmaReport:
    """Verify x^≡ ↦ ⇑x is an order isomorphism from the quotient onto the ends.

    Also verifies, for every end p, that the R-minimal members of
    F_p = {x : p ⊆ x} form one class with F_p = R[x, -]; that
    Π⁻¹(σ⁻¹(μ(a))) = ⋃{η(b) : b ≺ a} for every a; and that
    Π⁻¹(σ⁻¹(K_F)) = F_F for every round filter F, where K_F is the set of
    ends containing F.
    """
    dual = _proximity_dual(G)
    if s is None:
        s = dual
    elif s != dual:
        raise IsoFailure("subordination does not match the Gleason space")
    Q = quotient(G)
    X = G.space
    pts = [p.bits for p in X.points]
    end_masks = [p.bits for p in ends(s)]
    sigma = []
    for k, cls in enumerate(Q.classes):
        images = {up_mask(s, pts[x]) for x in cls}
        if len(images) != 1:
            raise IsoFailure(f"⇑x is not constant on class {k}")
        img = images.pop()
        if img not in end_masks:
            raise IsoFailure(f"⇑x for class {k} is not an end")
        sigma.append(end_masks.index(img))
    if sorted(sigma) != list(range(len(end_masks))):
        raise IsoFailure("σ is not a bijection onto the ends")
    for i in range(Q.size):
        for j in range(Q.size):
            inc = end_masks[sigma[i]] & ~end_masks[sigma[j]] == 0
            if bool(Q.order.leq[i, j]) != inc:
                raise IsoFailure(f"σ does not preserve order between classes {i} and {j}")

    minimal_classes = []
    for p in end_masks:
        Fp = mask_of(i for i, x in enumerate(pts) if p & ~x == 0)
        mins = r_minimals_in(G, Fp).bits
        owners = {Q.projection[x] for x in bits_of(mins)}
        if len(owners) != 1:
            raise IsoFailure(f"R-minimal points of F_p fall into {len(owners)} classes")
        for x in bits_of(mins):
            if G.rows[x] != Fp:
                raise IsoFailure("F_p differs from R[x, -] for an R-minimal x")
        minimal_classes.append(owners.pop())

    for a in range(s.size):
        mu_ends = [e for e, p in enumerate(end_masks) if p >> a & 1]
        lhs = mask_of(x for x in range(G.size) if sigma[Q.projection[x]] in mu_ends)
        rhs = 0
        for b in bits_of(s.cols[a]):
            rhs |= X.eta_table[b]
        if lhs != rhs:
            raise IsoFailure(f"subbase identity fails at a = {s.lattice.names[a]}")
        if lhs != mask_of(x for x in range(G.size) if up_mask(s, pts[x]) >> a & 1):
            raise IsoFailure(f"preimage of μ({s.lattice.names[a]}) is not {{x : a ∈ ⇑x}}")
    for F in round_filters(s):
        K = [e for e, p in enumerate(end_masks) if F.bits & ~p == 0]
        lhs = mask_of(x for x in range(G.size) if sigma[Q.projection[x]] in K)
        if lhs != mask_of(i for i, x in enumerate(pts) if F.bits & ~x == 0):
            raise IsoFailure(f"preimage of K_F differs from F_F for F = {F}")
    return SigmaReport(Q, [ElementSet(s.size, p) for p in end_masks], tuple(sigma),
                       tuple(minimal_classes))
