"""Finite posets, bounded distributive lattices and bitmap element sets.

Elements are dense indices ``0..n-1`` carrying string labels. Subsets of a
carrier are stored as Python ints used as bitmaps (bit ``i`` set means
element ``i`` is a member), which keeps the exhaustive searches elsewhere in
the package cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CycleError, NoBounds, NotALattice, NotDistributive


def bits_of(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


@dataclass(frozen=True)
class ElementSet:
    """A subset of a carrier of ``size`` elements, stored as a bitmap."""

    size: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.size:
            raise IndexError(f"bitmap {self.bits:#x} exceeds carrier of size {self.size}")

    @classmethod
    def of(cls, size: int, indices: Iterable[int]) -> "ElementSet":
        indices = list(indices)
        for i in indices:
            if not 0 <= i < size:
                raise IndexError(f"element {i} not in carrier of size {size}")
        return cls(size, mask_of(indices))

    @classmethod
    def full(cls, size: int) -> "ElementSet":
        return cls(size, (1 << size) - 1)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, i) -> bool:
        return isinstance(i, (int, np.integer)) and 0 <= i < self.size and bool(self.bits >> int(i) & 1)

    def __le__(self, other: "ElementSet") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.bits != other.bits

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.size, self.bits & other.bits)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.size, self.bits | other.bits)

    def complement(self) -> "ElementSet":
        return ElementSet(self.size, ~self.bits & ((1 << self.size) - 1))

    def issubset(self, other: "ElementSet") -> bool:
        return self <= other

    def labels(self, names: Sequence[str]) -> list[str]:
        return [names[i] for i in self]

    def __repr__(self) -> str:
        return f"ElementSet({{{', '.join(map(str, self))}}}/{self.size})"


class Poset:
    """An immutable finite partial order.

    ``leq`` is a read-only boolean matrix with ``leq[i, j]`` true iff
    ``i <= j``. The constructor trusts its input; use :func:`close_order`
    to build a poset from arbitrary generating pairs.
    """

    def __init__(self, leq, names: Sequence[str] | None = None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"order matrix must be square, got shape {leq.shape}")
        leq.setflags(write=False)
        n = leq.shape[0]
        if names is None:
            names = [str(i) for i in range(n)]
        if len(names) != n:
            raise ValueError(f"{len(names)} names given for {n} elements")
        self.leq = leq
        self.names = tuple(str(x) for x in names)

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poset) and self.names == other.names
                and np.array_equal(self.leq, other.leq))

    def __hash__(self) -> int:
        return hash((self.names, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"Poset({list(self.names)}, covers={self.covers})"

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[i]`` is the bitmap of ``{j : i <= j}``."""
        return tuple(mask_of(np.flatnonzero(row)) for row in self.leq)

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(mask_of(np.flatnonzero(col)) for col in self.leq.T)

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``j`` covering ``i``."""
        lt = self.leq.copy()
        np.fill_diagonal(lt, False)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cov = lt & ~between
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cov))]

    def is_upset(self, mask: int) -> bool:
        return all(self.up[i] & ~mask == 0 for i in bits_of(mask))

    def is_downset(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in bits_of(mask))

    def upset_closure(self, mask: int) -> int:
        return reduce(lambda acc, i: acc | self.up[i], bits_of(mask), 0)

    def downset_closure(self, mask: int) -> int:
        return reduce(lambda acc, i: acc | self.down[i], bits_of(mask), 0)

    def dual(self) -> "Poset":
        return Poset(self.leq.T, self.names)


def close_order(pairs: Iterable[tuple[int, int]], size: int,
                names: Sequence[str] | None = None) -> Poset:
    """Reflexive-transitive closure of ``pairs`` as a :class:`Poset`.

    Raises :class:`CycleError` (reporting the least offending pair) if the
    closure is not antisymmetric.
    """
    rel = np.eye(size, dtype=bool)
    for i, j in pairs:
        if not (0 <= i < size and 0 <= j < size):
            raise IndexError(f"pair ({i}, {j}) out of range for {size} elements")
        rel[i, j] = True
    for k in range(size):
        rel |= rel[:, k:k + 1] & rel[k:k + 1, :]
    sym = rel & rel.T
    np.fill_diagonal(sym, False)
    if sym.any():
        i, j = (int(v) for v in np.argwhere(sym)[0])
        raise CycleError((i, j))
    return Poset(rel, names)


class Lattice:
    """A finite bounded distributive lattice.

    Built through :func:`lattice_from_poset`, which validates bounds,
    existence of meets and joins, and distributivity. ``meet`` and ``join``
    are tuples of tuples indexed by element.
    """

    def __init__(self, poset: Poset, bottom: int, top: int,
                 meet: Sequence[Sequence[int]], join: Sequence[Sequence[int]]):
        self.poset = poset
        self.bottom = bottom
        self.top = top
        self.meet = tuple(tuple(int(v) for v in row) for row in meet)
        self.join = tuple(tuple(int(v) for v in row) for row in join)

    @property
    def size(self) -> int:
        return self.poset.size

    def __len__(self) -> int:
        return self.poset.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    def le(self, a: int, b: int) -> bool:
        return self.poset.le(a, b)

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        return f"Lattice({list(self.names)})"

    def index(self, name: str) -> int:
        return self.names.index(name)

    def join_all(self, elements: Iterable[int]) -> int:
        return reduce(lambda a, b: self.join[a][b], elements, self.bottom)

    def meet_all(self, elements: Iterable[int]) -> int:
        return reduce(lambda a, b: self.meet[a][b], elements, self.top)

    def principal_filter(self, a: int) -> ElementSet:
        return ElementSet(self.size, self.poset.up[a])

    def principal_ideal(self, a: int) -> ElementSet:
        return ElementSet(self.size, self.poset.down[a])

    def elements(self, mask_or_set) -> ElementSet:
        if isinstance(mask_or_set, ElementSet):
            return mask_or_set
        if isinstance(mask_or_set, int):
            return ElementSet(self.size, mask_or_set)
        return ElementSet.of(self.size, mask_or_set)


def _greatest(mask: int, down: Sequence[int]) -> int | None:
    for g in bits_of(mask):
        if mask & ~down[g] == 0:
            return g
    return None


def lattice_from_poset(poset: Poset) -> Lattice:
    """Validate ``poset`` as a bounded distributive lattice and tabulate ∧, ∨."""
    n = poset.size
    full = (1 << n) - 1
    bottoms = [i for i in range(n) if poset.up[i] == full]
    tops = [i for i in range(n) if poset.down[i] == full]
    if not bottoms or not tops:
        raise NoBounds("poset has no " + ("bottom" if not bottoms else "top"))
    up, down = poset.up, poset.down
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            m = _greatest(down[a] & down[b], down)
            if m is None:
                raise NotALattice("meet", (a, b))
            j = _greatest(up[a] & up[b], up)
            if j is None:
                raise NotALattice("join", (a, b))
            meet[a][b], join[a][b] = m, j
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    raise NotDistributive((a, b, c), poset.names)
    return Lattice(poset, bottoms[0], tops[0], meet, join)


def lattice_from_pairs(pairs: Iterable[tuple[int, int]], names: Sequence[str]) -> Lattice:
    return lattice_from_poset(close_order(pairs, len(names), names))


def join_irreducibles(L: Lattice) -> ElementSet:
    """Elements j ≠ 0 such that j = a ∨ b forces j ∈ {a, b}."""
    n = L.size
    members = []
    for j in range(n):
        if j == L.bottom:
            continue
        if all(L.join[a][b] != j or j in (a, b) for a in range(n) for b in range(n)):
            members.append(j)
    return ElementSet.of(n, members)


def filter_generated(L: Lattice, S) -> ElementSet:
    """Least filter containing ``S``; ``{1}`` when ``S`` is empty."""
    S = L.elements(S)
    return L.principal_filter(L.meet_all(S))


def ideal_generated(L: Lattice, S) -> ElementSet:
    """Least ideal containing ``S``; ``{0}`` when ``S`` is empty."""
    S = L.elements(S)
    return L.principal_ideal(L.join_all(S))


def is_filter(L: Lattice, mask: int) -> bool:
    """Nonempty, up-closed and closed under binary meets."""
    if mask == 0 or not L.poset.is_upset(mask):
        return False
    members = list(bits_of(mask))
    return all(mask >> L.meet[a][b] & 1 for a in members for b in members)


def is_proper_filter(L: Lattice, mask: int) -> bool:
    return is_filter(L, mask) and not mask >> L.bottom & 1


def is_prime_filter(L: Lattice, mask: int) -> bool:
    if not is_proper_filter(L, mask):
        return False
    n = L.size
    return all(not mask >> L.join[a][b] & 1 or mask >> a & 1 or mask >> b & 1
               for a in range(n) for b in range(n))


def proper_filters(L: Lattice) -> list[ElementSet]:
    """All proper filters, ordered by bitmap. Finitely each is some ↑a with a ≠ 0."""
    masks = sorted(L.poset.up[a] for a in range(L.size) if a != L.bottom)
    return [ElementSet(L.size, m) for m in masks]


def chain(n: int) -> Lattice:
    """The n-element chain C_n, labelled 0, c1, ..., 1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n == 1:
        names = ["0"]
    elif n == 3:
        names = ["0", "m", "1"]
    else:
        names = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    return lattice_from_pairs([(i, i + 1) for i in range(n - 1)], names)


def boolean(k: int) -> Lattice:
    """The Boolean lattice with ``k`` atoms (2**k elements), ordered by bitmap inclusion."""
    n = 1 << k
    atoms = "abcdefgh"
    names = []
    for m in range(n):
        if m == 0:
            names.append("0")
        elif m == n - 1:
            names.append("1")
        else:
            names.append("".join(atoms[i] for i in bits_of(m)))
    pairs = [(m, m | 1 << i) for m in range(n) for i in range(k) if not m >> i & 1]
    return lattice_from_pairs(pairs, names)
