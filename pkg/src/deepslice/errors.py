"""Exception hierarchy shared by the library and the CLI exit-code contract."""


class DeepSliceError(Exception):
    """Base class for all library errors."""


class InputError(DeepSliceError, ValueError):
    """Malformed or inconsistent input (CLI exit code 1)."""


class DiagramError(InputError):
    """A knot/link notation that does not describe a valid oriented diagram."""


class PreconditionError(DeepSliceError):
    """Input is well formed but a mathematical hypothesis fails (CLI exit code 2).

    Raised for uncertified roots of unity, odd Rohlin classes, non-unimodular
    linking matrices where a closed manifold is required, and similar.
    """
