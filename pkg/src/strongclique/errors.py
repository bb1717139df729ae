"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """A precondition on an operation's input is violated.

    Carries an optional ``witness`` naming the violating structure
    (a triangle, an induced 4-cycle, a bad line number, ...).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(InputError):
    """Malformed graph text.  ``offset`` is a byte offset, ``line`` 1-based."""

    def __init__(self, message: str, *, offset: int | None = None,
                 line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)
        self.offset = offset
        self.line = line


class OracleCapExceeded(RuntimeError):
    """An exact enumeration oracle was asked to run beyond its configured cap.

    Oracles never truncate silently; callers hitting this must either raise
    the cap explicitly or use a polynomial recognizer.
    """

    def __init__(self, message: str, *, needed: int, cap: int):
        super().__init__(f"{message}: needs {needed}, cap is {cap}")
        self.needed = needed
        self.cap = cap
