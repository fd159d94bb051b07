"""
Compact pospaces
================

A finite poset P gives the proximity of its upsets under inclusion. The
ends of that proximity are exactly the points of P, in the same order.
"""
from proxkit import ends, k_set, omega, round_filters, roundtrip_pospace
from proxkit.corpus import all_posets

# %% Every labelled poset on three points survives the round trip
posets = all_posets(3)
for P in posets:
    roundtrip_pospace(P)
print(len(posets), "posets on 3 points, all recovered")

# %% One example in detail
P = posets[5]
s = omega(P)
iso = roundtrip_pospace(P)
for x, k in enumerate(iso.table):
    print(P.names[x], "->", iso.ends[k].labels(s.lattice.names))

# %% K_F: the ends above a round filter
for F in round_filters(s):
    print(F.labels(s.lattice.names), "->", len(k_set(s, F)), "of", len(ends(s)), "ends")
