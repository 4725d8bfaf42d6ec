"""Exception hierarchy shared by all modules.

Refusals (NoSuchAutomorphism, NotInRootLattice, NotFoundWithinBound) are
deliberate, mathematically sound answers; everything else flags invalid input.
"""


class LoopBlocksError(Exception):
    """Base class for all library errors."""


class InvalidType(LoopBlocksError):
    """Not a valid simple Cartan type (family, rank)."""


class NonDominant(LoopBlocksError):
    """A weight that must be dominant has a negative coordinate."""


class NoSuchAutomorphism(LoopBlocksError):
    """No nontrivial diagram automorphism of the requested order exists."""


class FixedNodeSupport(LoopBlocksError):
    """An eps>0 embedding was asked to carry weight on a fixed node."""


class ParityViolation(LoopBlocksError):
    """Odd coordinate at the doubled middle node of an A_{2n} folding."""


class MalformedTwisted(LoopBlocksError):
    """Twisted polynomial data that no standard decomposition can produce."""


class NotInRootLattice(LoopBlocksError):
    """Sound refusal: the two weights differ by a non-root-lattice element."""


class NotFoundWithinBound(LoopBlocksError):
    """Search box exhausted; says nothing about existence beyond the box."""
