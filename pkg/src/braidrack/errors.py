"""Exception hierarchy shared by every braidrack module."""


class BraidRackError(ValueError):
    """Base class for all library errors."""


class ParseError(BraidRackError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class MalformedTable(BraidRackError):
    pass


class AxiomOneViolation(BraidRackError):
    """Some right translation x -> x |> y is not a bijection."""

    def __init__(self, y, x1=None, x2=None):
        self.y = y
        self.witness = (x1, x2)
        detail = f" ({x1} |> {y} = {x2} |> {y})" if x1 is not None else ""
        super().__init__(f"axiom 1 fails: right translation by {y} is not a bijection{detail}")


class AxiomTwoViolation(BraidRackError):
    """Right self-distributivity fails at (x, y, z)."""

    def __init__(self, x, y, z):
        self.x, self.y, self.z = x, y, z
        super().__init__(f"axiom 2 fails: (x |> y) |> z != (x |> z) |> (y |> z) at x={x}, y={y}, z={z}")


class NotAGroup(BraidRackError):
    def __init__(self, axiom, detail=""):
        self.axiom = axiom
        super().__init__(f"not a group: {axiom} fails" + (f" ({detail})" if detail else ""))


class InvalidParameters(BraidRackError):
    pass


class SizeCapExceeded(BraidRackError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"size {size} exceeds cap {cap}")


class IndexOutOfRange(BraidRackError):
    def __init__(self, index, strands):
        self.index = index
        self.strands = strands
        super().__init__(f"generator index {index} out of range for {strands} strands")


class StrandMismatch(BraidRackError):
    pass


class RelationNotApplicable(BraidRackError):
    pass


class DimensionMismatch(BraidRackError):
    pass


class BasepointCountMismatch(BraidRackError):
    pass


class AssignmentLengthMismatch(BraidRackError):
    pass
