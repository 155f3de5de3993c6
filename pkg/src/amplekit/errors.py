"""Exception hierarchy shared by every amplekit module."""


class AmplekitError(Exception):
    """Base class for all amplekit errors."""


class AssociativityError(AmplekitError, ValueError):
    def __init__(self, triple, left, right):
        self.triple = tuple(triple)
        self.left = left
        self.right = right
        i, j, k = self.triple
        super().__init__(
            f"not associative at {self.triple}: ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}"
        )


class RangeError(AmplekitError, ValueError):
    """A table entry or element index lies outside [0, n)."""


class DuplicateNameError(AmplekitError, ValueError):
    """Two elements were given the same display name."""


class NotIdempotent(AmplekitError, ValueError):
    pass


class NotSubsemigroup(AmplekitError, ValueError):
    def __init__(self, pair, product):
        self.pair = tuple(pair)
        self.product = product
        super().__init__(f"subset not closed: {self.pair[0]}*{self.pair[1]} = {product} escapes it")


class GroundMismatch(AmplekitError, ValueError):
    pass


class BoundExceeded(AmplekitError, ValueError):
    def __init__(self, count, bound):
        self.count = count
        self.bound = bound
        super().__init__(f"result would have {count} elements, bound is {bound}")


class NotInvariant(AmplekitError, ValueError):
    def __init__(self, s, point, image):
        self.witness = (s, point, image)
        super().__init__(f"subset is not right invariant: {point}*{s} = {image} leaves it")


class PreconditionFailed(AmplekitError, ValueError):
    def __init__(self, message, side=None, witness=None):
        self.side = side
        self.witness = witness
        super().__init__(message)


class RichnessRequired(AmplekitError, ValueError):
    pass


class NotIsomorphism(AmplekitError, ValueError):
    pass


class IrregularMatrix(AmplekitError, ValueError):
    def __init__(self, kind, index):
        self.kind = kind
        self.index = index
        super().__init__(f"sandwich matrix {kind} {index} is entirely zero")


class NotClosed(AmplekitError, ValueError):
    def __init__(self, pair, product):
        self.pair = tuple(pair)
        self.product = product
        super().__init__(f"not closed: product of {self.pair} is {product}")


class MalformedCertificate(AmplekitError, ValueError):
    pass


class ParseError(AmplekitError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class InvariantViolation(AmplekitError, AssertionError):
    """An internal consistency check failed; this indicates a bug, not bad input."""
