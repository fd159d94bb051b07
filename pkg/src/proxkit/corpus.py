"""Fixture corpus: small named lattices and posets.

The shipped fixtures live in ``proxkit/fixtures`` as JSON instance files.
Setting ``PROXKIT_CORPUS`` to a directory makes fixture lookups read from
there instead.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache
from pathlib import Path

import numpy as np

from .order import Lattice, Poset, boolean, chain, close_order
from .priestley import upset_lattice

FIXTURE_DIR = Path(__file__).with_name("fixtures")

# posets on at most three points, one per isomorphism class
SMALL_POSETS = {
    "P0": (0, []),
    "P1": (1, []),
    "P2chain": (2, [(0, 1)]),
    "P2anti": (2, []),
    "P3chain": (3, [(0, 1), (1, 2)]),
    "P3anti": (3, []),
    "P3vee": (3, [(0, 1), (0, 2)]),
    "P3wedge": (3, [(0, 2), (1, 2)]),
    "P3sum": (3, [(0, 1)]),
}

NON_DISTRIBUTIVE = {
    # 0 < x, y, z < 1
    "M3": (["0", "x", "y", "z", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]),
    # 0 < a < c < 1, 0 < b < 1
    "N5": (["0", "a", "b", "c", "1"], [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]),
}


def corpus_dir() -> Path:
    env = os.environ.get("PROXKIT_CORPUS")
    return Path(env) if env else FIXTURE_DIR


def small_poset(name: str) -> Poset:
    n, pairs = SMALL_POSETS[name]
    return close_order(pairs, n, [f"p{i}" for i in range(n)])


@lru_cache(maxsize=None)
def named_lattice(name: str) -> Lattice:
    """Build a distributive corpus lattice by name (C1-C5, B2, B3, U(P...))."""
    if name.startswith("C") and name[1:].isdigit():
        return chain(int(name[1:]))
    if name.startswith("B") and name[1:].isdigit():
        return boolean(int(name[1:]))
    if name.startswith("U(") and name.endswith(")"):
        return upset_lattice(small_poset(name[2:-1]))
    raise KeyError(name)


LATTICE_NAMES = ["C1", "C2", "C3", "C4", "C5", "B2", "B3"] + [f"U({p})" for p in SMALL_POSETS]
SMALL_LATTICE_NAMES = ["C1", "C2", "C3", "C4", "B2"]


def corpus_lattices() -> dict[str, Lattice]:
    """Every distributive lattice of the fixture corpus, keyed by name."""
    return {name: named_lattice(name) for name in LATTICE_NAMES}


def small_lattices() -> dict[str, Lattice]:
    """All distributive lattices with at most four elements, up to isomorphism."""
    return {name: named_lattice(name) for name in SMALL_LATTICE_NAMES}


def all_posets(n: int) -> list[Poset]:
    """Every labelled partial order on ``n`` points, by brute force over relations."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for bits in itertools.product((False, True), repeat=len(off)):
        rel = np.eye(n, dtype=bool)
        for (i, j), on in zip(off, bits):
            rel[i, j] = on
        if (rel & rel.T & ~np.eye(n, dtype=bool)).any():
            continue
        closed = (rel.astype(int) @ rel.astype(int) > 0)
        if np.array_equal(closed, rel):
            out.append(Poset(rel, [f"p{i}" for i in range(n)]))
    return out
