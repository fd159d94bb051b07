"""
Morphisms and hemirelations
===========================

A map h between lattices that keeps 0, 1 and meets corresponds to a
relation rho between dual points. H1 and H2 on the lattice side match the
ordered forth condition and the de Vries condition on the point side.
"""
from proxkit import (check_dvc, check_h, check_ofc, compose_relations, compose_xi,
                     hemimorphism_from_relation, leq_morphism, relation_from_hemimorphism, star,
                     xi_map)
from proxkit.corpus import named_lattice

B2, C2, C3 = (named_lattice(n) for n in ("B2", "C2", "C3"))

# %% A map that breaks joins
h = leq_morphism(B2, C2, (0, 0, 0, 1))
rho = relation_from_hemimorphism(h)
print("H1:", check_h(h, "H1"), " ofc:", check_ofc(rho))
print("H2:", check_h(h, "H2"), " dvc:", check_dvc(rho))
assert hemimorphism_from_relation(rho) == h

# %% A genuine morphism C2 -> C3 and one C3 -> C2
up = leq_morphism(C2, C3, (0, 2))
down = leq_morphism(C3, C2, (0, 1, 1))
print("xi of C2 -> C3:", xi_map(relation_from_hemimorphism(up)).table)

# %% Composition: a ↦ ⋁{g(f(b)) : b ≺ a}
both = star(up, down)
print("composite table:", both.table)
r1, r2 = relation_from_hemimorphism(up), relation_from_hemimorphism(down)
print("relation transport holds:", relation_from_hemimorphism(both) == compose_relations(r1, r2))
print("xi is functorial:", xi_map(compose_relations(r1, r2)).table == compose_xi(xi_map(r1), xi_map(r2)))
