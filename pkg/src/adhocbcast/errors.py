"""Error taxonomy shared by the library, the service, and the CLI.

Two families matter for exit codes and HTTP mapping: input errors
(bad ids, malformed files, invalid configs) and generation/size errors
(random generation gave up, instance too large for exact search).
"""


class InputError(ValueError):
    """The caller supplied an invalid argument, id, or file."""


class ParseError(InputError):
    """An edge-list file is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GenerationError(RuntimeError):
    """Random graph generation exhausted its retry budget."""

    def __init__(self, message: str, last_seed: int):
        super().__init__(message)
        self.last_seed = last_seed


class SizeError(ValueError):
    """An instance exceeds the cap of an exact (exponential) solver."""
