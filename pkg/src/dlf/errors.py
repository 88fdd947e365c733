"""Exception taxonomy shared by the whole package.

Exit codes used by the CLI: 0 ok, 2 parse, 3 validation (includes domain
and singularity errors), 4 range, 5 internal.
"""


class DlfError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 3


class DomainError(DlfError):
    """Shape or field mismatch: the operation is not defined on the input."""

    exit_code = 3


class ValidationError(DlfError):
    """A structured object failed one of its defining axioms.

    Carries the name of the failing axiom and, when available, a witness
    basis tuple.
    """

    exit_code = 3

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class SingularError(DlfError):
    """Attempt to invert a singular map or element."""

    exit_code = 3


class CentralityError(ValidationError):
    """The antipode image is not central, so the swap-based factorisation
    of the self-law does not exist."""


class CyclicityError(DlfError):
    """The duplicial module is not cyclic in a degree where the cyclic
    bicomplex needs it; extract the invariant subobject first."""

    exit_code = 3


class RangeError(DlfError):
    """Not enough stored degrees for the requested computation."""

    exit_code = 4


class InternalError(DlfError):
    """An internal consistency check failed; indicates a library defect."""

    exit_code = 5


class BundleParseError(DlfError):
    """Malformed bundle text; carries a line number."""

    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
