"""Error taxonomy shared by every layer. The ``code`` of each class is what the
CLI envelope reports, so it must stay stable."""

from typing import Optional


class CapaxError(Exception):
    code = 'error'

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(CapaxError):
    code = 'parse-error'

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message)
        self.offset = offset

    def __str__(self):
        if self.offset is None:
            return self.message
        return f'{self.message} (at byte {self.offset})'


class DomainError(CapaxError):
    code = 'domain-error'


class UnsupportedError(CapaxError):
    code = 'unsupported'


class ResourceLimitError(CapaxError):
    code = 'resource-limit'


class InvariantViolationError(CapaxError):
    code = 'invariant-violation'
