"""Exception hierarchy shared by every proxkit module."""


class ProxkitError(Exception):
    """Base class for all library errors."""


class CycleError(ProxkitError, ValueError):
    """The reflexive-transitive closure of a relation is not antisymmetric."""

    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"order closure is not antisymmetric: {self.pair[0]} and {self.pair[1]} "
                         "are mutually below each other")


class NoBounds(ProxkitError, ValueError):
    """A poset offered as a lattice has no bottom or no top."""


class NotALattice(ProxkitError, ValueError):
    """Some pair of elements lacks a meet or a join."""

    def __init__(self, op, pair):
        self.op = op
        self.pair = tuple(pair)
        super().__init__(f"elements {self.pair} have no {op}")


class NotDistributive(ProxkitError, ValueError):
    """a ∧ (b ∨ c) differs from (a ∧ b) ∨ (a ∧ c) for the reported triple."""

    def __init__(self, triple, names=None):
        self.triple = tuple(triple)
        shown = tuple(names[i] for i in triple) if names else self.triple
        super().__init__(f"distributive law fails at {shown}")


class IsoFailure(ProxkitError, AssertionError):
    """A duality isomorphism failed to verify. For valid input this is a library bug."""


class AxiomError(ProxkitError, ValueError):
    """A relation does not satisfy the axioms an operation requires."""


class PreorderError(AxiomError):
    """The relation R of a Gleason space is not a pre-order."""


class NotRIncreasing(ProxkitError, ValueError):
    """A point set is not closed under the image of R."""


class ImproperFilter(ProxkitError, ValueError):
    """A filter contains the bottom element."""


class HError(ProxkitError, ValueError):
    """A map violates one of the morphism axioms H0, H1, H2."""


class H0Error(HError):
    """A map is not a strong meet-hemimorphism."""


class ConditionError(ProxkitError, ValueError):
    """A hemirelation violates conditions 1-4, the ofc or the dvc."""


class NotClopenUpset(ConditionError):
    """A hemirelation saturation is not the η-image of a legal lattice element."""


class NotAnEnd(ProxkitError, AssertionError):
    """A computed set should have been an end. Signals a library bug."""


class SizeError(ProxkitError, ValueError):
    """An enumeration would exceed the configured size limits."""


class ParseError(ProxkitError, ValueError):
    """An instance file is malformed."""
