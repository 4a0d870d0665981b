"""Exception types shared across the package."""


class WordCurvError(Exception):
    """Base class for all errors raised by wordcurv."""


class NotAnNWord(WordCurvError):
    """A word does not contain every character of its alphabet."""


class MissingCharacter(NotAnNWord):
    """A word is missing a required character rank."""

    def __init__(self, rank: int):
        self.rank = rank
        super().__init__(f"character of rank {rank} never occurs")


class NotAOneWord(NotAnNWord):
    """Expected a word over two characters with both present."""


class NotATwoWord(NotAnNWord):
    """Expected a word over three characters with all three present."""


class DegreeMismatch(WordCurvError):
    """Cochain degree does not match the word it is evaluated on."""


class InvalidBundle(WordCurvError):
    """Cell data does not describe an elementary interval or circle bundle."""


class DegenerateFiber(InvalidBundle):
    """Gluing would produce an empty fiber over some base vertex."""


class InvalidInput(WordCurvError):
    """A triangulated bundle failed structural validation."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class ValidationGap(WordCurvError):
    """Curvature total is not an integer: the input passed the per-edge
    checks but cannot come from a genuine circle bundle."""


class SmallFiberWarning(UserWarning):
    """A glued fiber has fewer than three vertices; the result is a cell
    complex rather than an honest simplicial complex."""
