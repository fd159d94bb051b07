"""Exhaustive verification of the relation-level theorems on small lattices.

Each check enumerates relations on a lattice (exhaustively for at most four
elements, by uniform sampling otherwise), keeps those satisfying the
hypotheses, and tests the claimed property on each survivor. The reported
counterexample is the smallest relation code that fails, so results do not
depend on how the enumeration was partitioned.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import relspace
from .errors import SizeError
from .gleason import relation_from_subordination, subordination_from_relation
from .order import Lattice, bits_of
from .priestley import birkhoff_check
from .subordination import SUBORDINATION_AXIOMS, Subordination, collapse_check

CHECKS = ("collapse", "iff-s6", "iff-s8", "lemma-correspondence")


@dataclass
class TheoremResult:
    check: str
    scanned: int
    survivors: int
    counterexample: Subordination | None = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def relations_satisfying(L: Lattice, axioms, workers: int = 1, sample: int | None = None,
                         seed: int = 0) -> tuple[int, list[Subordination]]:
    """``(scanned, survivors)`` for the relations on ``L`` satisfying ``axioms``."""
    if L.size <= relspace.EXHAUSTIVE_LIMIT and sample is None:
        codes = relspace.scan(L, axioms, workers=workers)
        return relspace.relation_count(L), [Subordination.from_code(L, c) for c in codes]
    if sample is None:
        raise SizeError(f"|L| = {L.size} exceeds {relspace.EXHAUSTIVE_LIMIT}; pass a sample size")
    rel, keep = relspace.sample(L, axioms, sample, seed)
    found = {Subordination.from_matrix(L, r) for r in rel[keep]}
    return sample, sorted(found, key=lambda s: s.code)


def _first_failure(subs, predicate):
    for s in subs:
        if not predicate(s):
            return s
    return None


def _reflexive(G) -> bool:
    return all(G.related(x, x) for x in range(G.size))


def _transitive(G) -> bool:
    return all(G.related(x, z) for x in range(G.size)
               for y in bits_of(G.rows[x]) for z in bits_of(G.rows[y]))


def correspondence_holds(s: Subordination) -> bool:
    """a ≺ b iff R[η(a), -] ⊆ η(b), and the round trip through upsets recovers ≺."""
    G = relation_from_subordination(s)
    eta = G.space.eta_table
    n = s.size
    if any(s.holds(a, b) != (G.image(eta[a]) & ~eta[b] == 0) for a in range(n) for b in range(n)):
        return False
    back = subordination_from_relation(G)
    idx = birkhoff_check(s.lattice).eta_index
    return all(back.holds(idx[a], idx[b]) == s.holds(a, b) for a in range(n) for b in range(n))


def run_check(L: Lattice, check: str, workers: int = 1, sample: int | None = None,
              seed: int = 0) -> TheoremResult:
    if check == "collapse":
        if L.size > relspace.EXHAUSTIVE_LIMIT and sample is None:
            raise SizeError(f"|L| = {L.size} exceeds {relspace.EXHAUSTIVE_LIMIT}; pass a sample size")
        rep = collapse_check(L, sample_size=sample or 0, seed=seed, workers=workers)
        bad = _first_failure(rep.survivors, lambda s: s.rows == L.poset.up)
        return TheoremResult(check, rep.scanned, len(rep.survivors), bad,
                             {"survivor_is_leq": any(s.rows == L.poset.up for s in rep.survivors),
                              "exhaustive": rep.exhaustive})
    scanned, subs = relations_satisfying(L, SUBORDINATION_AXIOMS, workers, sample, seed)
    if check == "iff-s6":
        bad = _first_failure(subs, lambda s: _reflexive(relation_from_subordination(s))
                             == s.axiom_flags["S6"].passed)
    elif check == "iff-s8":
        bad = _first_failure(subs, lambda s: _transitive(relation_from_subordination(s))
                             == s.axiom_flags["S8"].passed)
    elif check == "lemma-correspondence":
        bad = _first_failure(subs, correspondence_holds)
    else:
        raise ValueError(f"unknown check {check!r}; expected one of {', '.join(CHECKS)}")
    return TheoremResult(check, scanned, len(subs), bad)
