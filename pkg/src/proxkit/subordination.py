"""Subordination and proximity relations on finite lattices.

A relation ≺ is stored row-wise: ``rows[a]`` is the bitmap of ``{b : a ≺ b}``.
Axioms follow the usual numbering S1-S6, S8 (there is no S7):

    S1  0 ≺ 0 and 1 ≺ 1
    S2  a ≺ b, a ≺ c  implies  a ≺ b ∧ c
    S3  a ≺ c, b ≺ c  implies  a ∨ b ≺ c
    S4  a ≤ b ≺ c ≤ d  implies  a ≺ d
    S5  a = ⋁{b : b ≺ a}
    S6  a ≺ b  implies  a ≤ b
    S8  a ≺ b  implies  a ≺ c ≺ b for some c

Every checker reports the lexicographically least counterexample tuple.
Filters and ends are always proper (they contain 1 and omit 0).
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import AxiomError, ImproperFilter
from .order import ElementSet, Lattice, bits_of, is_filter, mask_of, proper_filters

AXIOMS = ("S1", "S2", "S3", "S4", "S5", "S6", "S8")
SUBORDINATION_AXIOMS = ("S1", "S2", "S3", "S4")


class AxiomResult(NamedTuple):
    name: str
    passed: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.passed


class Subordination:
    """A binary relation on the elements of a lattice."""

    def __init__(self, lattice: Lattice, rows: Iterable[int]):
        self.lattice = lattice
        self.rows = tuple(int(r) for r in rows)
        n = lattice.size
        if len(self.rows) != n or any(r >> n for r in self.rows):
            raise IndexError("relation rows do not match the lattice carrier")

    @classmethod
    def from_pairs(cls, L: Lattice, pairs: Iterable[tuple[int, int]]) -> "Subordination":
        rows = [0] * L.size
        for a, b in pairs:
            if not (0 <= a < L.size and 0 <= b < L.size):
                raise IndexError(f"pair ({a}, {b}) out of range")
            rows[a] |= 1 << b
        return cls(L, rows)

    @classmethod
    def from_matrix(cls, L: Lattice, matrix) -> "Subordination":
        matrix = np.asarray(matrix, dtype=bool)
        return cls(L, [mask_of(np.flatnonzero(row)) for row in matrix])

    @classmethod
    def from_code(cls, L: Lattice, code: int) -> "Subordination":
        """Decode an integer whose bit ``a*n + b`` says whether a ≺ b."""
        n = L.size
        row_mask = (1 << n) - 1
        return cls(L, [(code >> (a * n)) & row_mask for a in range(n)])

    @property
    def code(self) -> int:
        n = self.lattice.size
        return sum(r << (a * n) for a, r in enumerate(self.rows))

    @property
    def size(self) -> int:
        return self.lattice.size

    def holds(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """``cols[b]`` is the bitmap of ``{a : a ≺ b}``."""
        n = self.size
        return tuple(sum(1 << a for a in range(n) if self.rows[a] >> b & 1) for b in range(n))

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in bits_of(self.rows[a])]

    @property
    def matrix(self) -> np.ndarray:
        n = self.size
        return np.array([[self.holds(a, b) for b in range(n)] for a in range(n)], dtype=bool).reshape(n, n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subordination) and self.lattice == other.lattice
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.lattice, self.rows))

    def __repr__(self) -> str:
        names = self.lattice.names
        shown = ", ".join(f"{names[a]}≺{names[b]}" for a, b in self.pairs)
        return f"Subordination({shown})"

    @cached_property
    def axiom_flags(self) -> dict[str, AxiomResult]:
        return {name: check_axiom(self, name) for name in AXIOMS}

    @property
    def is_subordination(self) -> bool:
        return all(self.axiom_flags[k].passed for k in SUBORDINATION_AXIOMS)

    @property
    def is_proximity(self) -> bool:
        return all(r.passed for r in self.axiom_flags.values())

    def require(self, names=SUBORDINATION_AXIOMS) -> None:
        for name in names:
            res = self.axiom_flags[name]
            if not res.passed:
                raise AxiomError(f"{name} fails with witness {res.witness}")


def leq_subordination(L: Lattice) -> Subordination:
    """The relation ≺ = ≤, a proximity on every finite lattice."""
    return Subordination(L, L.poset.up)


def _s1(s):
    L = s.lattice
    for a in (L.bottom, L.top):
        if not s.holds(a, a):
            return (a, a)


def _s2(s):
    L, n = s.lattice, s.size
    for a in range(n):
        row = s.rows[a]
        for b in range(n):
            if not row >> b & 1:
                continue
            for c in range(n):
                if row >> c & 1 and not row >> L.meet[b][c] & 1:
                    return (a, b, c)


def _s3(s):
    L, n = s.lattice, s.size
    for a in range(n):
        for b in range(n):
            j = L.join[a][b]
            for c in range(n):
                if s.holds(a, c) and s.holds(b, c) and not s.holds(j, c):
                    return (a, b, c)


def _s4(s):
    L, n = s.lattice, s.size
    up = L.poset.up
    for a in range(n):
        for b in bits_of(up[a]):
            for c in bits_of(s.rows[b]):
                for d in bits_of(up[c]):
                    if not s.holds(a, d):
                        return (a, b, c, d)


def _s5(s):
    L = s.lattice
    for a in range(s.size):
        if L.join_all(bits_of(s.cols[a])) != a:
            return (a,)


def _s6(s):
    L = s.lattice
    for a in range(s.size):
        for b in bits_of(s.rows[a]):
            if not L.le(a, b):
                return (a, b)


def _s8(s):
    for a in range(s.size):
        for b in bits_of(s.rows[a]):
            if not s.rows[a] & s.cols[b]:
                return (a, b)


_CHECKERS = {"S1": _s1, "S2": _s2, "S3": _s3, "S4": _s4, "S5": _s5, "S6": _s6, "S8": _s8}


def check_axiom(s: Subordination, which: str) -> AxiomResult:
    """Check one axiom; returns a falsy result carrying the least witness on failure."""
    which = which.upper()
    if which not in _CHECKERS:
        raise ValueError(f"unknown axiom {which!r}; expected one of {', '.join(AXIOMS)}")
    witness = _CHECKERS[which](s)
    return AxiomResult(which, witness is None, witness)


def up_arrow(s: Subordination, S) -> ElementSet:
    """⇑S = {b : s ≺ b for some s ∈ S}."""
    S = s.lattice.elements(S)
    mask = 0
    for a in S:
        mask |= s.rows[a]
    return ElementSet(s.size, mask)


def down_arrow(s: Subordination, S) -> ElementSet:
    """⇓S = {b : b ≺ s for some s ∈ S}."""
    S = s.lattice.elements(S)
    mask = 0
    for a in S:
        mask |= s.cols[a]
    return ElementSet(s.size, mask)


def up_mask(s: Subordination, mask: int) -> int:
    out = 0
    for a in bits_of(mask):
        out |= s.rows[a]
    return out


def is_round_filter(s: Subordination, F) -> bool:
    F = s.lattice.elements(F)
    return up_mask(s, F.bits) == F.bits and is_filter(s.lattice, F.bits) and s.lattice.bottom not in F


def round_filters(s: Subordination) -> list[ElementSet]:
    """Proper filters F with ⇑F = F, ordered by bitmap."""
    s.require()
    return [F for F in proper_filters(s.lattice) if up_mask(s, F.bits) == F.bits]


def _end_masks(s: Subordination) -> list[int]:
    rf = [F.bits for F in round_filters(s)]
    out = []
    for p in rf:
        def inside(m):
            return m & ~p == 0
        if all(inside(f1 & f2) == (inside(f1) or inside(f2)) for f1 in rf for f2 in rf):
            out.append(p)
    return out


def ends(s: Subordination) -> list[ElementSet]:
    """Round filters that are prime with respect to intersections of round filters."""
    return [ElementSet(s.size, p) for p in _end_masks(s)]


def is_end(s: Subordination, p) -> bool:
    p = s.lattice.elements(p)
    return p.bits in _end_masks(s)


def mu(s: Subordination, a: int) -> list[ElementSet]:
    """μ(a): the ends containing ``a``."""
    return [p for p in ends(s) if a in p]


def subordination_closure(L: Lattice, seed: Iterable[tuple[int, int]] = ()) -> Subordination:
    """Least relation containing ``seed``, 0≺0 and 1≺1 that is closed under S2, S3, S4."""
    n = L.size
    rows = [0] * n
    for a, b in seed:
        rows[a] |= 1 << b
    rows[L.bottom] |= 1 << L.bottom
    rows[L.top] |= 1 << L.top
    up = L.poset.up
    changed = True
    while changed:
        changed = False
        new = list(rows)
        for a in range(n):
            # S4: rows are up-closed and antitone in a
            grown = 0
            for b in bits_of(up[a]):
                for c in bits_of(rows[b]):
                    grown |= up[c]
            new[a] |= grown
            # S2: rows closed under meets
            members = list(bits_of(new[a]))
            for b in members:
                for c in members:
                    new[a] |= 1 << L.meet[b][c]
        for c in range(n):
            # S3: columns closed under joins
            col = [a for a in range(n) if new[a] >> c & 1]
            for a in col:
                for b in col:
                    new[L.join[a][b]] |= 1 << c
        if new != rows:
            rows, changed = new, True
    return Subordination(L, rows)


def check_round_filter(s: Subordination, F) -> ElementSet:
    F = s.lattice.elements(F)
    if s.lattice.bottom in F:
        raise ImproperFilter(f"{F} contains the bottom element")
    if not is_round_filter(s, F):
        raise ValueError(f"{F} is not a round filter")
    return F


class CollapseReport(NamedTuple):
    scanned: int
    survivors: list[Subordination]
    exhaustive: bool

    @property
    def passed(self) -> bool:
        return all(s.rows == s.lattice.poset.up for s in self.survivors)


def collapse_check(L: Lattice, sample_size: int = 100_000, seed: int = 0,
                   workers: int = 1) -> CollapseReport:
    """Confirm that every relation satisfying S1-S5 on ``L`` is the order itself.

    Lattices with at most four elements are scanned exhaustively; larger
    ones are probed with ``sample_size`` uniform random relations.
    """
    from . import relspace

    axioms = ("S1", "S2", "S3", "S4", "S5")
    if L.size <= relspace.EXHAUSTIVE_LIMIT:
        codes = relspace.scan(L, axioms, workers=workers)
        survivors = [Subordination.from_code(L, c) for c in codes]
        return CollapseReport(relspace.relation_count(L), survivors, True)
    rel, keep = relspace.sample(L, axioms, sample_size, seed)
    survivors = sorted({Subordination.from_matrix(L, r) for r in rel[keep]}, key=lambda s: s.code)
    return CollapseReport(sample_size, survivors, False)
