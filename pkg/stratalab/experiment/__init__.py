"""Custom exceptions."""

class StratalabError(Exception):
    """Base class for errors with a machine-readable code."""
    code = "ERROR"
    exit_code = 1

    def __init__(self, message, code=None, **detail):
        super().__init__(message)
        if code:
            self.code = code
        self.detail = detail

    def as_dict(self):
        """Return the {code, message, detail} error object."""
        return {"code": self.code,
                "message": str(self),
                "detail": {k: v if isinstance(v, str) else str(v)
                           for k, v in self.detail.items()}}

class ValidationError(StratalabError):
    """Raised when experiment parameters are rejected."""
    code = "INVALID"
    exit_code = 2

class CapacityMismatchError(StratalabError):
    """Raised when pot capacities do not add up to the number of items."""
    code = "CAPACITY_MISMATCH"
    exit_code = 2

class BadCommitCountError(StratalabError):
    """Raised when asked for a committed count other than 1 or 2."""
    code = "BAD_COMMIT_COUNT"
    exit_code = 2

class BudgetExceededError(StratalabError):
    """Raised when an enumeration would walk too many outcomes."""
    code = "BUDGET_EXCEEDED"
    exit_code = 3

class MalformedFlagsError(StratalabError):
    """Raised on unusable command-line flags or configuration values."""
    code = "MALFORMED_FLAGS"
    exit_code = 4
