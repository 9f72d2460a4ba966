"""Exception hierarchy.

User-facing input problems derive from :class:`PentagonError`;
:class:`InternalConsistencyError` marks a failed self-certification and
signals a bug rather than bad input.
"""


class PentagonError(Exception):
    """Base class for all input and domain errors raised by the package."""


class TableError(PentagonError, ValueError):
    """A table is ragged or contains an entry outside ``[0, n)``."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class GroupAxiomError(PentagonError, ValueError):
    pass


class NotAssociativeError(GroupAxiomError):
    def __init__(self, triple):
        super().__init__(f"operation is not associative at {triple}")
        self.witness = triple


class NoIdentityError(GroupAxiomError):
    def __init__(self):
        super().__init__("no identity element")


class NoInverseError(GroupAxiomError):
    def __init__(self, element):
        super().__init__(f"element {element} has no inverse")
        self.element = element


class SubgroupError(PentagonError, ValueError):
    """A subset is not a (normal) subgroup, or a representative system is invalid."""


class MapError(PentagonError, ValueError):
    """A self-map fails a required property (idempotence, homomorphism, commuting)."""


class FactorizationError(PentagonError, ValueError):
    pass


class NotInvertibleError(PentagonError, ValueError):
    pass


class SizeMismatchError(PentagonError, ValueError):
    pass


class ConditionViolation(PentagonError, ValueError):
    def __init__(self, message, condition=None, witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class BudgetExceededError(PentagonError):
    def __init__(self, what, size, budget):
        super().__init__(f"{what}: {size} candidates exceeds budget {budget}")
        self.size = size
        self.budget = budget


class ParseError(PentagonError, ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class InternalConsistencyError(AssertionError):
    pass
