"""Priestley duality for finite distributive lattices.

Finitely the Priestley topology is discrete, so closures and interiors are
identities and clopen upsets are simply upsets. A lattice ``L`` is dual to
the poset of its prime filters, and ``a -> η(a)`` identifies ``L`` with the
upsets of that poset.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import IsoFailure
from .order import ElementSet, Lattice, Poset, bits_of, lattice_from_poset, is_prime_filter


def prime_filters(L: Lattice) -> list[ElementSet]:
    """Proper prime filters of ``L`` sorted by bitmap.

    Finitely these are exactly the principal filters ``↑j`` of the
    join-irreducible elements ``j``.
    """
    masks = []
    for j in range(L.size):
        if j == L.bottom:
            continue
        below = L.poset.down[j] & ~(1 << j)
        # j is join-irreducible iff the strict down-set of j has a top below j
        if L.join_all(bits_of(below)) != j:
            masks.append(L.poset.up[j])
    return [ElementSet(L.size, m) for m in sorted(masks)]


class PriestleySpace:
    """The finite Priestley dual of a lattice: prime filters ordered by inclusion."""

    def __init__(self, lattice: Lattice, points: list[ElementSet] | None = None):
        if points is None:
            points = prime_filters(lattice)
        self.lattice = lattice
        self.points = tuple(points)
        k = len(self.points)
        leq = np.array([[p <= q for q in self.points] for p in self.points], dtype=bool).reshape(k, k)
        names = ["↑" + lattice.names[self._generator(p)] for p in self.points]
        self.order = Poset(leq, names)
        for p in self.points:
            if not is_prime_filter(lattice, p.bits):
                raise IsoFailure(f"{p} is not a proper prime filter")

    def _generator(self, p: ElementSet) -> int:
        return self.lattice.meet_all(p)

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"PriestleySpace({list(self.order.names)})"

    @cached_property
    def eta_table(self) -> tuple[int, ...]:
        """``eta_table[a]`` is the bitmap over points of η(a)."""
        return tuple(sum(1 << i for i, p in enumerate(self.points) if a in p)
                     for a in range(self.lattice.size))

    def eta(self, a: int) -> ElementSet:
        return ElementSet(self.size, self.eta_table[a])

    def complement(self, mask: int) -> int:
        return ~mask & ((1 << self.size) - 1)

    def index(self, filt: ElementSet | int) -> int:
        bits = filt.bits if isinstance(filt, ElementSet) else filt
        for i, p in enumerate(self.points):
            if p.bits == bits:
                return i
        raise KeyError(f"{filt} is not a point of this space")


def priestley_space(L: Lattice) -> PriestleySpace:
    return PriestleySpace(L)


def eta(space, a: int) -> ElementSet:
    """η(a): the prime filters containing ``a``. Accepts a lattice or its dual space."""
    if isinstance(space, Lattice):
        space = PriestleySpace(space)
    return space.eta(a)


def upsets(X: Poset) -> list[int]:
    """All upsets of ``X`` as bitmaps, in increasing numeric order.

    The numeric order is a linear extension of inclusion, so the empty set
    comes first and the whole carrier last.
    """
    return [m for m in range(1 << X.size) if X.is_upset(m)]


def _set_label(mask: int, X: Poset) -> str:
    return "{" + ",".join(X.names[i] for i in bits_of(mask)) + "}"


def upset_lattice(X: Poset) -> Lattice:
    """The lattice of upsets of ``X`` under ∩ and ∪.

    Element ``i`` of the result is the upset ``upsets(X)[i]``.
    """
    ups = upsets(X)
    k = len(ups)
    leq = np.array([[u & ~v == 0 for v in ups] for u in ups], dtype=bool).reshape(k, k)
    return lattice_from_poset(Poset(leq, [_set_label(u, X) for u in ups]))


@dataclass(frozen=True)
class BirkhoffReport:
    space: PriestleySpace
    upsets: list[int]
    upset_lattice: Lattice
    eta_index: tuple[int, ...]  # a -> index of η(a) in upset_lattice


def birkhoff_check(L: Lattice) -> BirkhoffReport:
    """Verify that a -> η(a) is a lattice isomorphism onto the upsets of Prim(L)."""
    X = PriestleySpace(L)
    ups = upsets(X.order)
    U = upset_lattice(X.order)
    where = {u: i for i, u in enumerate(ups)}
    try:
        index = tuple(where[X.eta_table[a]] for a in range(L.size))
    except KeyError as exc:
        raise IsoFailure(f"η(a) is not an upset for bitmap {exc}") from None
    if sorted(index) != list(range(U.size)):
        raise IsoFailure("η is not a bijection onto the upsets of the dual")
    for a in range(L.size):
        for b in range(L.size):
            if index[L.meet[a][b]] != U.meet[index[a]][index[b]]:
                raise IsoFailure(f"η does not preserve the meet of {a} and {b}")
            if index[L.join[a][b]] != U.join[index[a]][index[b]]:
                raise IsoFailure(f"η does not preserve the join of {a} and {b}")
    return BirkhoffReport(X, ups, U, index)
