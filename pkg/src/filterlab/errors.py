"""Exception hierarchy shared by all modules."""


class FilterLabError(Exception):
    """Base class for every error raised by the package."""


class ParseError(FilterLabError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at {line}:{column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class NoDifferenceFound(FilterLabError):
    """Two base sets agree on every element below the search bound."""

    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"no element of the symmetric difference below {bound}")


class WidthExceeded(FilterLabError):
    pass


class ExhaustedSupports(FilterLabError):
    def __init__(self, wanted, found):
        self.wanted = wanted
        self.found = found
        super().__init__(f"only {found} admissible supports, {wanted} requested")


class SizeOverflow(FilterLabError):
    pass


class UnknownGenerator(FilterLabError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"unknown generator {index}")


class UnboundAtom(FilterLabError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"atom a{index} has no value in the assignment")


class Inconclusive(FilterLabError):
    def __init__(self, bound, reason=""):
        self.bound = bound
        super().__init__(f"undecided below bound {bound}" + (f": {reason}" if reason else ""))


class ImproperFilter(FilterLabError):
    pass


class Unsatisfiable(FilterLabError):
    pass


class ClosureBudgetExceeded(FilterLabError):
    """The witness closure did not reach a fixpoint. ``partial`` holds the unfinished closure."""

    def __init__(self, max_rounds, partial=None):
        self.max_rounds = max_rounds
        self.partial = partial
        super().__init__(f"witness closure not stable after {max_rounds} rounds")


class UniverseOverflow(FilterLabError):
    pass


class InconsistentAssignment(FilterLabError):
    def __init__(self, tag, axiom):
        self.tag = tag
        self.axiom = axiom
        super().__init__(f"assignment violates {tag} axiom {axiom}")


class SignatureMismatch(FilterLabError):
    pass


class FieldTooLarge(FilterLabError):
    pass


class NotAModel(FilterLabError):
    def __init__(self, tag, axiom):
        self.tag = tag
        self.axiom = axiom
        super().__init__(f"not a model: {tag} axiom {axiom} fails")
