"""
Subordinations, round filters and ends
======================================

A subordination is a relation a ≺ b on a lattice obeying S1 to S4. Adding
S5, S6 and S8 gives a proximity. On a finite lattice the only proximity is
the order itself, which the exhaustive scan below confirms.
"""
from proxkit import (AXIOMS, check_axiom, collapse_check, ends, leq_subordination, round_filters,
                     subordination_closure, up_arrow)
from proxkit.corpus import named_lattice

B2 = named_lattice("B2")

# %% The least subordination: x ≺ y iff x = 0 or y = 1
s0 = subordination_closure(B2)
for ax in AXIOMS:
    res = check_axiom(s0, ax)
    print(ax, "pass" if res else f"fail, witness {res.witness}")

# %% ⇑ collapses every filter to {1}
a = B2.index("a")
print("⇑{a} =", up_arrow(s0, [a]).labels(B2.names))
print("round filters:", [F.labels(B2.names) for F in round_filters(s0)])

# %% With ≺ = ≤ the ends are the prime filters
s = leq_subordination(B2)
print("ends of (B2, ≤):", [p.labels(B2.names) for p in ends(s)])

# %% Exhaustive collapse: every relation on B2, vectorised with numpy
rep = collapse_check(B2, workers=2)
print(f"{rep.scanned} relations scanned, {len(rep.survivors)} proximity:", rep.survivors[0].pairs == s.pairs)
