class SlnWebException(Exception):
    """
    Base class for other Exceptions
    """

    pass


class ParseError(SlnWebException):
    """
    Input text does not follow the expected grammar
    """

    pass


class SemanticError(SlnWebException):
    """
    Input is well-formed but denotes nothing the engine can work with
    """

    pass


class ResourceError(SlnWebException):
    """
    A configured or arithmetic bound was exceeded
    """

    pass


class LaurentParseError(ParseError):
    """
    Laurent polynomial text could not be parsed
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ProgramParseError(ParseError):
    """
    Program text could not be parsed
    """

    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class ArgumentParseError(ParseError):
    """
    A command line value could not be read
    """

    pass


class KilledProgram(SemanticError):
    """
    A move drives a weight entry outside 0..n, so the program is the zero vector
    """

    def __init__(self, step, weight=None):
        detail = "" if weight is None else f" (weight before move: {list(weight)})"
        super().__init__(f"Program is killed at step {step}{detail}")
        self.step = step
        self.weight = weight


class BlockedCrossing(SemanticError):
    """
    A crossing marker is reached while the column to its right is not empty
    """

    def __init__(self, step, weight):
        super().__init__(f"Crossing at item {step} is blocked (weight: {list(weight)})")
        self.step = step
        self.weight = weight


class InvalidFlow(SemanticError):
    """
    Rung subsets do not form a flow on the given program
    """

    pass


class InvalidTableau(SemanticError):
    """
    Entry groups do not form a standard multitableau
    """

    pass


class NodeNotAddable(SemanticError):
    """
    A component has no addable node of the requested residue
    """

    pass


class ShapeMismatch(SemanticError):
    """
    Multipartitions or multitableaux are not comparable (different n or size)
    """

    pass


class BoundaryMismatch(SemanticError):
    """
    Two webs cannot be paired because their headers or end weights differ
    """

    pass


class NotClosed(SemanticError):
    """
    A program expected to be closed ends with an entry other than 0 or n
    """

    pass


class GreedyStuck(SemanticError):
    """
    The canonical placement ran out of admissible components
    """

    def __init__(self, step, needed, available):
        super().__init__(
            f"Canonical placement stuck at step {step}: needs {needed} components, "
            f"{available} admissible"
        )
        self.step = step
        self.needed = needed
        self.available = available


class InvalidWeight(SemanticError):
    """
    A gl_m weight has entries outside 0..n
    """

    pass


class InvalidMatching(SemanticError):
    """
    Arc endpoints do not form a crossingless perfect matching
    """

    pass


class MalformedBraid(SemanticError):
    """
    Braid word references missing strands or does not close up color-consistently
    """

    pass


class ColorOutOfRange(SemanticError):
    """
    Strand color outside 1..n-1
    """

    pass


class InexactDivision(SemanticError):
    """
    Laurent polynomial division left a remainder
    """

    pass


class ExpansionInconsistency(SemanticError):
    """
    Expanded crossing summands disagree on their total length
    """

    pass


class ResourceLimitExceeded(ResourceError):
    """
    The number of live shapes exceeded the configured guard
    """

    def __init__(self, limit, step=None):
        where = "" if step is None else f" at step {step}"
        super().__init__(f"More than {limit} live shapes{where}")
        self.limit = limit
        self.step = step


class CoefficientOverflow(ResourceError):
    """
    A Laurent coefficient left the signed 64-bit range
    """

    pass
