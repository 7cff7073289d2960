"""Exception hierarchy for the list accessing toolkit."""


class ListAccessError(ValueError):
    """Base class for every error raised by this package."""


class DuplicateElement(ListAccessError):
    pass


class EmptyInput(ListAccessError):
    pass


class ElementNotInList(ListAccessError):
    """A request (or lookup) names an element the list does not hold.

    ``index`` is the 0-based request index when raised from serving a
    sequence, otherwise ``None``.
    """

    def __init__(self, element, index=None):
        self.element = element
        self.index = index
        where = "" if index is None else f" (request index {index})"
        super().__init__(f"element {element!r} is not in the list{where}")


class PositionOutOfRange(ListAccessError):
    pass


class SequenceShorterThanList(ListAccessError):
    pass


class InconsistentSpec(ListAccessError):
    pass


class ClassTooLarge(ListAccessError):
    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f"class holds {count} sequences, above the limit of {limit}")


class NonPositiveSize(ListAccessError):
    pass


class NoType3Exists(ListAccessError):
    pass


class ImpossibleBaseCost(ListAccessError):
    pass


class NotBlockExpansion(ListAccessError):
    """Sequence is not a contiguous block expansion of a covering permutation."""
