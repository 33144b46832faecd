"""Exception types shared across the package.

Everything raised on purpose derives from :class:`TwistlabError`, so callers
(and the CLI) can distinguish domain errors from genuine bugs with a single
``except`` clause.
"""

from __future__ import annotations


class TwistlabError(Exception):
    """Base class for all deliberate errors raised by this package."""


class NonPartitionDifference(TwistlabError):
    """Subtracting partitions row-wise left a sequence that is not a partition."""


class NotDistinctParts(TwistlabError):
    """An operation needed all nonzero parts distinct, and they were not."""


class NoPAdicExpansion(TwistlabError):
    """The row-wise base-p digit layers of a partition are not all partitions."""


class Overflow(TwistlabError):
    """An arithmetic result left the safe integer range for array kernels."""


class TooFewBeads(TwistlabError):
    """An abacus display was requested with fewer beads than the partition has rows."""


class NotPRegular(TwistlabError):
    """A p-regular partition was required (no part repeated p or more times)."""


class NotPRestricted(TwistlabError):
    """A p-restricted partition was required (successive differences below p)."""


class InvalidSymbol(TwistlabError):
    """A two-row symbol violated the defining inequalities for its prime."""


class NoInsertion(TwistlabError):
    """No valid rim insertion exists with the requested endpoint row and size."""


class AmbiguousInsertion(TwistlabError):
    """More than one rim insertion matched; reconstruction refused to guess."""


class NotTwoPart(TwistlabError):
    """A two-part partition (lambda_1, lambda_2) was required."""


class EqualSizeRequired(TwistlabError):
    """Both partitions must partition the same integer for this computation."""


class PrimeTooSmall(TwistlabError):
    """The criterion is stated only for primes strictly larger than this one."""


class HypothesisViolated(TwistlabError):
    """Input failed a stated hypothesis of the formula being evaluated."""


class CongruenceViolated(TwistlabError):
    """A congruence the construction relies on does not hold for this input."""


class TooLarge(TwistlabError):
    """The requested module exceeds the configured dimension budget."""


class SizeMismatch(TwistlabError):
    """Array or partition sizes disagree where equality is required."""


class Inconclusive(TwistlabError):
    """The randomized splitting test neither found a splitting nor ruled one out."""
