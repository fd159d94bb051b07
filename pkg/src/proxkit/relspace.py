"""Vectorised enumeration of binary relations on a small lattice.

A relation on an ``n``-element lattice is identified with an integer code
whose bit ``a*n + b`` says whether ``a ≺ b``. Batches of codes are decoded
into boolean tensors of shape ``(N, n, n)`` and every axiom is evaluated for
the whole batch at once with numpy. The scalar checkers in
:mod:`proxkit.subordination` are the independent route used to cross-check
these masks.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

import numpy as np

from .errors import SizeError
from .order import Lattice

EXHAUSTIVE_LIMIT = 4
CHUNK = 1 << 14


def decode(codes: np.ndarray, n: int) -> np.ndarray:
    """Boolean tensor ``rel[k, a, b]`` for the relations encoded by ``codes``."""
    codes = np.asarray(codes, dtype=np.uint64)
    shifts = np.arange(n * n, dtype=np.uint64)
    flat = (codes[:, None] >> shifts[None, :]) & np.uint64(1)
    return flat.astype(bool).reshape(len(codes), n, n)


def encode(rel: np.ndarray) -> np.ndarray:
    N, n, _ = rel.shape
    weights = np.left_shift(np.uint64(1), np.arange(n * n, dtype=np.uint64))
    return (rel.reshape(N, n * n).astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def axiom_mask(L: Lattice, rel: np.ndarray, axiom: str) -> np.ndarray:
    """Which relations in the batch satisfy ``axiom``."""
    n = L.size
    meet = np.array(L.meet, dtype=np.intp).reshape(n, n)
    join = np.array(L.join, dtype=np.intp).reshape(n, n)
    leq = np.asarray(L.leq, dtype=bool)
    N = rel.shape[0]
    if axiom == "S1":
        return rel[:, L.bottom, L.bottom] & rel[:, L.top, L.top]
    if axiom == "S2":
        both = rel[:, :, :, None] & rel[:, :, None, :]          # [k, a, b, c]
        target = rel[:, :, meet]                                # a ≺ b∧c
        return ~(both & ~target).reshape(N, -1).any(axis=1)
    if axiom == "S3":
        both = rel[:, :, None, :] & rel[:, None, :, :]          # [k, a, b, c]
        target = rel[:, join, :]                                # a∨b ≺ c
        return ~(both & ~target).reshape(N, -1).any(axis=1)
    if axiom == "S4":
        lo = leq.astype(np.int64)
        spread = np.einsum("ab,kbc,cd->kad", lo, rel.astype(np.int64), lo) > 0
        return ~(spread & ~rel).reshape(N, -1).any(axis=1)
    if axiom == "S5":
        ok = np.ones(N, dtype=bool)
        for a in range(n):
            acc = np.full(N, L.bottom, dtype=np.intp)
            for b in range(n):
                acc = np.where(rel[:, b, a], join[acc, b], acc)
            ok &= acc == a
        return ok
    if axiom == "S6":
        return ~(rel & ~leq).reshape(N, -1).any(axis=1)
    if axiom == "S8":
        through = np.einsum("kac,kcb->kab", rel.astype(np.int64), rel.astype(np.int64)) > 0
        return ~(rel & ~through).reshape(N, -1).any(axis=1)
    raise ValueError(f"unknown axiom {axiom!r}")


def satisfying(L: Lattice, rel: np.ndarray, axioms: Sequence[str]) -> np.ndarray:
    keep = np.ones(rel.shape[0], dtype=bool)
    for ax in axioms:
        idx = np.flatnonzero(keep)
        if idx.size == 0:
            break
        keep[idx] = axiom_mask(L, rel[idx], ax)
    return keep


def _scan_range(args):
    L, axioms, lo, hi = args
    n = L.size
    found = []
    for start in range(lo, hi, CHUNK):
        codes = np.arange(start, min(hi, start + CHUNK), dtype=np.uint64)
        keep = satisfying(L, decode(codes, n), axioms)
        found.extend(int(c) for c in codes[keep])
    return found


def relation_count(L: Lattice) -> int:
    return 1 << (L.size * L.size)


def scan(L: Lattice, axioms: Sequence[str], workers: int = 1) -> list[int]:
    """Codes of every relation on ``L`` satisfying ``axioms``, in increasing order.

    The code space is cut into contiguous blocks, one per worker, and the
    results are concatenated in block order, so the output does not depend
    on the number of workers.
    """
    if L.size > EXHAUSTIVE_LIMIT:
        raise SizeError(f"exhaustive scan needs |L| <= {EXHAUSTIVE_LIMIT}, got {L.size}")
    total = relation_count(L)
    workers = max(1, int(workers))
    bounds = np.linspace(0, total, workers + 1).astype(np.int64)
    jobs = [(L, tuple(axioms), int(bounds[i]), int(bounds[i + 1])) for i in range(workers)]
    if workers == 1:
        return _scan_range(jobs[0])
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_scan_range, jobs))
    return [c for part in parts for c in part]


def sample(L: Lattice, axioms: Sequence[str], count: int, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Draw ``count`` uniform random relations; returns ``(relations, mask)``."""
    n = L.size
    rng = np.random.default_rng(seed)
    rel = rng.random((count, n, n)) < 0.5
    keep = np.zeros(count, dtype=bool)
    for start in range(0, count, CHUNK):
        part = slice(start, min(count, start + CHUNK))
        keep[part] = satisfying(L, rel[part], axioms)
    return rel, keep
