"""
The ordered Gleason dual
========================

A subordination on L becomes a relation R on the prime filters of L:
x R y iff ⇑x ⊆ y. For proximities R is a pre-order whose quotient is the
space of ends, and round filters match R-increasing point sets.
"""
from proxkit import (check_gleason_axioms, leq_subordination, phi, phi_inverse, quotient,
                     relation_from_subordination, round_filters, sigma_check,
                     subordination_closure, subordination_from_relation)
from proxkit.corpus import named_lattice

L = named_lattice("U(P3vee)")
s = leq_subordination(L)
G = relation_from_subordination(s)

# %% Points, the relation and the axiom items
print("points:", G.poset.names)
print("R:", G.pairs)
print({k: bool(v) for k, v in check_gleason_axioms(G).items()})

# %% Quotient by x ≡ y and the map onto the ends
Q = quotient(G)
rep = sigma_check(G, s)
for k, cls in enumerate(Q.classes):
    print(cls.labels(G.poset.names), "->", rep.ends[rep.sigma[k]].labels(L.names))

# %% Round filters and R-increasing sets
for F in round_filters(s):
    C = phi(G, F)
    assert phi_inverse(G, C) == F
    print(F.labels(L.names), "<->", C.labels(G.poset.names))

# %% Back from R to a subordination on the upsets
back = subordination_from_relation(G)
print("recovered relation has", len(back.pairs), "pairs; original", len(s.pairs))

# %% A subordination that is not a proximity: R is full, item 4 fails
G0 = relation_from_subordination(subordination_closure(named_lattice("B2")))
print("B2 least subordination:", G0.pairs, check_gleason_axioms(G0)["4"])
