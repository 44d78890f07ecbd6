"""Exception hierarchy.  Every error carries a stable ``code`` string used by the CLI."""


class AlgebraError(Exception):
    code = "ERROR"

    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        out.update({k: str(v) for k, v in self.details.items()})
        return out


class ParameterError(AlgebraError):
    code = "PARAMETER"


class CompositionError(AlgebraError):
    code = "COMPOSITION_UNDEFINED"


class ParseError(AlgebraError):
    code = "PARSE"


class NotReducedError(AlgebraError):
    code = "NOT_REDUCED"


class ForbiddenSubwordError(AlgebraError):
    code = "FORBIDDEN_SUBWORD"


class HookUndefinedError(AlgebraError):
    code = "HOOK_UNDEFINED"


class NotAHookError(AlgebraError):
    code = "NOT_A_HOOK"


class OutOfRangeError(AlgebraError):
    code = "OUT_OF_RANGE"


class ParityError(AlgebraError):
    code = "PARITY"


class ZeroModuleError(AlgebraError):
    code = "ZERO_MODULE"


class IdentificationFailed(AlgebraError):
    code = "IDENTIFICATION_FAILED"


class SearchBudgetExceeded(AlgebraError):
    code = "SEARCH_BUDGET_EXCEEDED"


class CrossCheckFailed(AlgebraError):
    code = "CROSS_CHECK_FAILED"


class ChainInvalid(AlgebraError):
    code = "CHAIN_INVALID"


class CheckFailed(AlgebraError):
    code = "CHECK_FAILED"


class FieldMismatch(AlgebraError):
    code = "FIELD_MISMATCH"
