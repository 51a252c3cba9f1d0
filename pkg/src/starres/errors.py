"""Exception hierarchy shared by all starres modules.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured ``{code, message}`` JSON reports.
"""


class StarresError(Exception):
    """Base class for all domain errors."""

    code = "error"


class ParameterError(StarresError):
    """Invalid or mismatched weight/point data."""

    code = "parameter"


class PreconditionError(StarresError):
    """An operation was called outside its stated domain."""

    code = "precondition"


class NotMinimalError(PreconditionError):
    """The input resolves non-minimally where a minimal resolution is required."""

    code = "not-minimal"
