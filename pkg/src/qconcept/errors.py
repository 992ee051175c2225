"""Exception hierarchy shared across the package."""


class QConceptError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(QConceptError, ValueError):
    pass


class DegenerateStateError(QConceptError, ValueError):
    """Raised when a zero vector would have to be normalized."""


class NotOrthogonalError(QConceptError, ValueError):
    pass


class NotProjectorError(QConceptError, ValueError):
    pass


class ImpossibleOutcomeError(QConceptError, ValueError):
    """Raised when a state has no overlap with the range of a projector."""


class SingularConfigurationError(QConceptError, ArithmeticError):
    pass


class ConstraintViolationError(QConceptError, ValueError):
    pass


class ConnectiveError(QConceptError, ValueError):
    pass


class UnknownLabelError(QConceptError, KeyError):
    pass


class InvalidDistributionError(QConceptError, ValueError):
    pass


class DatasetParseError(QConceptError, ValueError):
    """CSV input error, located by 1-based data row and column name."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
