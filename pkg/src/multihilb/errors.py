"""Error types shared across the library.

Resource-style errors (unbounded searches, exceeded caps) are kept separate
from validation errors so the CLI can map them to distinct exit codes.
"""


class MultihilbError(Exception):
    """Base class for all library errors."""


class ValidationError(MultihilbError):
    """Malformed input: bad dimensions, inconsistent schema, broken invariants."""


class ResourceError(MultihilbError):
    """A search or computation could not be completed within its stated bounds."""


class UnboundedFiberError(ResourceError):
    """Fiber enumeration requested without a positivity certificate or finite box."""


class IterationCapError(ResourceError):
    """The supportive-set iteration exceeded its configured round limit."""


class CapExceededError(ResourceError):
    """A completion or emission procedure exceeded its configured size cap."""


class SearchCapError(ResourceError):
    """A witness search exhausted its budget without reaching a verdict."""


class InfiniteSetError(MultihilbError):
    """A listing was requested for a set detected to be infinite."""


class InfiniteDimensionError(MultihilbError):
    """A tangent-space computation needs an infinite Hilbert function value."""


class NoRepresentationError(MultihilbError):
    """Greedy extraction of the binomial representation failed; the input is
    not the Hilbert polynomial of a subscheme."""


class UnmappableMinorError(MultihilbError):
    """A block minor did not reduce to a signed bracket or zero."""
