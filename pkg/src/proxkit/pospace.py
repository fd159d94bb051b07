"""Finite compact pospaces.

A finite compact pospace is just a finite poset: the patch topology is
discrete and the upper topology is the Alexandrov topology of upsets. The
functor Ω sends ``P`` to its upset lattice with ≺ equal to inclusion, and
the ends of Ω(P) recover ``P``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ImproperFilter, IsoFailure
from .order import ElementSet, Poset, mask_of
from .priestley import upset_lattice, upsets
from .subordination import Subordination, check_round_filter, ends, leq_subordination


def omega(P: Poset) -> Subordination:
    """Ω(P): the upsets of ``P`` with O ≺ V iff O ⊆ V.

    Every subset of a finite space is compact, so the interpolating compact
    set always exists and ≺ is plain inclusion.
    """
    return leq_subordination(upset_lattice(P))


def k_set(s: Subordination, F) -> list[ElementSet]:
    """K_F: the ends of ``s`` that contain the round filter ``F``, in end order."""
    s.require()
    L = s.lattice
    F = L.elements(F)
    if L.bottom in F or not F.bits:
        raise ImproperFilter(f"{F} is not a proper filter")
    F = check_round_filter(s, F)
    return [p for p in ends(s) if F <= p]


@dataclass(frozen=True)
class PospaceIso:
    """Order isomorphism from ``P`` onto the ends of Ω(P).

    ``table[x]`` is the index, in ``ends(omega(P))``, of the end made of the
    upsets containing ``x``.
    """

    poset: Poset
    ends: tuple[ElementSet, ...]
    table: tuple[int, ...]


def point_filter(P: Poset, x: int) -> int:
    """The upsets of ``P`` containing ``x``, as a bitmap over ``upsets(P)``."""
    return mask_of(i for i, u in enumerate(upsets(P)) if u >> x & 1)


def roundtrip_pospace(P: Poset) -> PospaceIso:
    s = omega(P)
    E = ends(s)
    masks = [p.bits for p in E]
    table = []
    for x in range(P.size):
        f = point_filter(P, x)
        if f not in masks:
            raise IsoFailure(f"upsets containing {P.names[x]} do not form an end")
        table.append(masks.index(f))
    if sorted(table) != list(range(len(E))):
        raise IsoFailure("points of P do not account for every end")
    for x in range(P.size):
        for y in range(P.size):
            if P.le(x, y) != (E[table[x]] <= E[table[y]]):
                raise IsoFailure(f"order differs at ({P.names[x]}, {P.names[y]})")
    return PospaceIso(P, tuple(E), tuple(table))
