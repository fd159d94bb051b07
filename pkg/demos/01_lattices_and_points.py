"""
Lattices and their points
=========================

A finite distributive lattice is determined by its join-irreducible
elements. This script builds a few lattices, lists their prime filters and
checks that every element is recovered as an upset of points.
"""
from proxkit import birkhoff_check, boolean, chain, lattice_from_pairs, prime_filters, upset_lattice
from proxkit.corpus import NON_DISTRIBUTIVE, small_poset
from proxkit.errors import NotDistributive

# %% Two small lattices
C3 = chain(3)
B2 = boolean(2)
for L in (C3, B2):
    print(L, "meet table:", L.meet)

# %% Prime filters are the principal filters of join-irreducibles
for L in (C3, B2):
    print([F.labels(L.names) for F in prime_filters(L)])

# %% Each element a is the set of prime filters containing it
rep = birkhoff_check(B2)
for a, name in enumerate(B2.names):
    print(f"eta({name}) is upset number {rep.eta_index[a]} of the dual poset")

# %% Going the other way: the upsets of a poset form a distributive lattice
V = small_poset("P3vee")
print("upsets of the vee:", upset_lattice(V).names)

# %% Non-distributive lattices are rejected with a witness triple
labels, pairs = NON_DISTRIBUTIVE["M3"]
try:
    lattice_from_pairs(pairs, labels)
except NotDistributive as exc:
    print("M3:", exc)
