"""Exception hierarchy.  CLI exit codes map onto these classes."""


class SecohomError(Exception):
    pass


class ValidationError(SecohomError):
    """An algebraic axiom failed.  Carries the axiom name and the offending
    basis indices so spec-file errors can point at the exact table entry."""

    def __init__(self, axiom, indices=None, detail=""):
        self.axiom = axiom
        self.indices = tuple(indices) if indices is not None else ()
        msg = axiom
        if self.indices:
            msg += " at " + repr(self.indices)
        if detail:
            msg += ": " + detail
        super().__init__(msg)


class SizeCapExceeded(SecohomError):
    """A cochain space would exceed the configured basis cap."""

    def __init__(self, requested, cap):
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"size cap exceeded (requested {requested} basis elements, cap {cap})"
        )


class PreconditionError(SecohomError):
    """Operation called outside its stated preconditions (e.g. Hodge
    decomposition over a noncommutative algebra)."""


class SpecFileError(SecohomError):
    """Malformed input file; message includes the file path and location."""
