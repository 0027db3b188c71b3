"""Exception hierarchy shared by every stage of the pipeline."""


class SurnameGeoError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SurnameGeoError, ValueError):
    """Invalid parameters, inconsistent configuration or lookup tables."""


class RecordError(SurnameGeoError, ValueError):
    """A publication record that cannot be used."""


class FormatError(RecordError):
    """Malformed input syntax.  ``lineno`` is 1-based when known."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SemanticError(RecordError):
    """Syntactically valid record that violates a record invariant."""

    def __init__(self, message, record_id=None, lineno=None):
        self.record_id = record_id
        self.lineno = lineno
        prefix = []
        if lineno is not None:
            prefix.append(f"line {lineno}")
        if record_id is not None:
            prefix.append(f"record {record_id!r}")
        if prefix:
            message = ", ".join(prefix) + ": " + message
        super().__init__(message)


class DomainError(SurnameGeoError, ValueError):
    """Mathematical function evaluated outside its domain."""
