# proj/src/core/exceptions.py

class SpinorLabError(Exception):
    """Root of every error raised by spinorlab."""


class UsageError(SpinorLabError, ValueError):
    """Bad arguments: out-of-range parameters, mismatched shapes, unknown tags."""


class PreconditionViolation(SpinorLabError, ValueError):
    """An operator received input outside its domain (e.g. a non-admissible one-form)."""


class InvariantFailure(SpinorLabError, RuntimeError):
    """An internal invariant did not hold, such as a failed direct-sum solve."""


class InputFileError(SpinorLabError):
    """An input document is missing or does not validate."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(message)
        self.path = path

    def to_dict(self) -> dict:
        return {"error": "input_file", "message": str(self), "path": self.path}
