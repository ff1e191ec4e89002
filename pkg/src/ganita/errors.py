"""Exception hierarchy shared by every module.

Two broad classes matter to callers (and to the CLI exit codes): malformed
input text raises :class:`ParseError`; well-formed input that the procedure
cannot accept raises :class:`DomainError`.
"""


class GanitaError(Exception):
    pass


class DomainError(GanitaError, ValueError):
    """Input is well formed but outside what the procedure accepts."""


class InexactError(DomainError):
    """An exact result would leave the rational/single-surd number domain."""


class IndeterminateError(DomainError):
    pass


class InconsistentError(DomainError):
    pass


class ParseError(GanitaError, ValueError):
    def __init__(self, message, column=None, row=None):
        self.column = column
        self.row = row
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
