"""Finite proximity frames, their ordered Gleason duals and compact pospaces.

Everything is finite and exact: lattices are validated bounded distributive
lattices, subsets are integer bitmaps, and every duality map is checked
rather than assumed.
"""
from .errors import (AxiomError, ConditionError, CycleError, H0Error, HError, ImproperFilter,
                     IsoFailure, NoBounds, NotALattice, NotAnEnd, NotClopenUpset, NotDistributive,
                     NotRIncreasing, ParseError, PreorderError, ProxkitError, SizeError)
from .gleason import (GleasonSpace, check_gleason_axioms, phi, phi_inverse, quotient, r_image,
                      r_minimals_in, r_preimage, relation_from_subordination, sigma_check,
                      subordination_from_relation)
from .morphism import (HemiMorphism, HemiRelation, check_conditions, check_dvc, check_h, check_ofc,
                       compose_relations, compose_xi, ends_map, enumerate_strong_meet_hemimorphisms,
                       hemimorphism_from_relation, identity, leq_morphism, proximity_morphisms,
                       relation_from_hemimorphism, star, xi_map)
from .order import (ElementSet, Lattice, Poset, boolean, chain, close_order, filter_generated,
                    ideal_generated, join_irreducibles, lattice_from_pairs, lattice_from_poset)
from .pospace import k_set, omega, roundtrip_pospace
from .priestley import PriestleySpace, birkhoff_check, eta, prime_filters, upset_lattice, upsets
from .subordination import (AXIOMS, Subordination, check_axiom, collapse_check, down_arrow, ends,
                            is_end, leq_subordination, mu, round_filters, subordination_closure,
                            up_arrow)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "AXIOMS",
    "birkhoff_check",
    "boolean",
    "chain",
    "check_axiom",
    "check_conditions",
    "check_dvc",
    "check_gleason_axioms",
    "check_h",
    "check_ofc",
    "close_order",
    "collapse_check",
    "compose_relations",
    "compose_xi",
    "ConditionError",
    "CycleError",
    "down_arrow",
    "ElementSet",
    "ends",
    "ends_map",
    "enumerate_strong_meet_hemimorphisms",
    "eta",
    "filter_generated",
    "GleasonSpace",
    "H0Error",
    "HemiMorphism",
    "hemimorphism_from_relation",
    "HemiRelation",
    "HError",
    "ideal_generated",
    "identity",
    "ImproperFilter",
    "is_end",
    "IsoFailure",
    "join_irreducibles",
    "k_set",
    "Lattice",
    "lattice_from_pairs",
    "lattice_from_poset",
    "leq_morphism",
    "leq_subordination",
    "mu",
    "NoBounds",
    "NotALattice",
    "NotAnEnd",
    "NotClopenUpset",
    "NotDistributive",
    "NotRIncreasing",
    "omega",
    "ParseError",
    "phi",
    "phi_inverse",
    "Poset",
    "PreorderError",
    "PriestleySpace",
    "prime_filters",
    "proximity_morphisms",
    "ProxkitError",
    "quotient",
    "r_image",
    "r_minimals_in",
    "r_preimage",
    "relation_from_hemimorphism",
    "relation_from_subordination",
    "round_filters",
    "roundtrip_pospace",
    "sigma_check",
    "SizeError",
    "star",
    "Subordination",
    "subordination_closure",
    "subordination_from_relation",
    "up_arrow",
    "upset_lattice",
    "upsets",
    "xi_map",
]
