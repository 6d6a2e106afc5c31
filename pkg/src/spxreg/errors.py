"""Exception types. ``InputError`` subclasses map to CLI exit code 2,
``InternalError`` to exit code 3."""


class SpxregError(Exception):
    pass


class InputError(SpxregError):
    """Bad user input (file, argument, precondition)."""


class InternalError(SpxregError):
    """An invariant the library guarantees was violated."""


class EmptyMap(InputError):
    pass


class DisconnectedLabel(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class EmptyInput(InputError):
    pass


class DegeneratePolygon(InputError):
    pass


class SizeTooSmall(InputError):
    pass


class ShapeVanished(InputError):
    pass


class NoEdges(InputError):
    pass


class UnsupportedFormat(InputError):
    pass


class CorruptFile(InputError):
    pass


class LabelOverflow(InputError):
    pass


class NonSquareImage(InputError):
    pass


class NonPowerOfTwoSide(InputError):
    pass


class EmptySeries(InputError):
    pass
