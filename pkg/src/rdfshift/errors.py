"""Exception types shared across the conversion pipeline."""

from __future__ import annotations


class RdfShiftError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTermError(RdfShiftError, ValueError):
    """A term violates the data model (bad IRI, bad label, bad literal combo)."""


class InvalidTripleError(RdfShiftError, ValueError):
    """A triple violates positional constraints (literal subject, non-IRI predicate)."""


class UnknownFormatError(RdfShiftError):
    """A format token is not in the registry, or not legal in this position."""


class DetectionFailedError(RdfShiftError):
    """Automatic input-format detection found no applicable rule."""


class ParseError(RdfShiftError):
    """Syntax or structure error in an input document.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message: str, *, format: str | None = None,
                 line: int | None = None, column: int | None = None):
        self.format = format
        self.line = line
        self.column = column
        super().__init__(message)

    @property
    def message(self) -> str:
        return self.args[0]

    def __str__(self) -> str:
        where = ""
        if self.line is not None:
            where = f" (line {self.line}"
            where += f", column {self.column})" if self.column is not None else ")"
        fmt = f"[{self.format}] " if self.format else ""
        return f"{fmt}{self.message}{where}"


class UnsupportedFeatureError(ParseError):
    """Input uses a construct outside the supported subset of its syntax."""


class SerializeError(RdfShiftError):
    """A graph cannot be rendered in the requested output syntax."""


class UnserializableIRIError(SerializeError):
    """An IRI cannot be split into a legal XML qualified name."""


class FetchError(RdfShiftError):
    """Remote document retrieval failed.

    ``kind`` is one of: network, timeout, too-many-redirects, too-large,
    http-status, refused. ``status`` carries the upstream code for http-status.
    """

    def __init__(self, kind: str, message: str, *, status: int | None = None):
        self.kind = kind
        self.status = status
        super().__init__(message)

    @property
    def message(self) -> str:
        return self.args[0]
