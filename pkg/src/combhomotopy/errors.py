"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised for malformed or out-of-range input data."""


class UnsupportedOperation(TypeError):
    """Raised when an operation does not apply to the given kind of space."""


class ParseError(InputError):
    def __init__(self, message, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class FormatError(InputError):
    """Unsupported file format or magic number."""
