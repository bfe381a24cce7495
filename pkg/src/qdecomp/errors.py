"""Exception hierarchy shared by all modules."""


class QDecompError(Exception):
    """Base class."""


class CapacityExceeded(QDecompError):
    """More qubits requested than the QPU provides."""


class ScopeError(QDecompError):
    """Invalid control/around/adjoint usage (self-control, duplicates, measurement)."""


class NotCompiled(QDecompError):
    """Statistics requested on a circuit that still holds multi-controlled gates or aux refs."""


class NotSpecialUnitary(QDecompError):
    """SU(2) decomposition called on a gate whose determinant is not 1."""


class AuxNotClean(QDecompError):
    """A decomposition that needs clean auxiliaries was given dirty ones."""


class TooLarge(QDecompError):
    """Oracle instance exceeds the simulation bound."""


class ParseError(QDecompError):
    """Malformed circuit file or descriptor."""
