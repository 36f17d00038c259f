"""Exception hierarchy. Every domain error carries a stable ``code``."""


class AlgebraError(Exception):
    code = "AlgebraError"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details

    def to_json(self):
        out = {"code": self.code, "message": str(self)}
        out.update({k: _plain(v) for k, v in self.details.items()})
        return out


def _plain(v):
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return repr(v)


class RingMismatch(AlgebraError):
    code = "RingMismatch"


class NotUnimodular(AlgebraError):
    code = "NotUnimodular"


class NotAUnit(AlgebraError):
    code = "NotAUnit"


class DimensionMismatch(AlgebraError):
    code = "DimensionMismatch"


class RowTooShort(AlgebraError):
    code = "RowTooShort"


class BudgetExceeded(AlgebraError):
    code = "BudgetExceeded"


class ModuleMismatch(AlgebraError):
    code = "ModuleMismatch"


class IdealChainViolation(AlgebraError):
    code = "IdealChainViolation"


class NotInverses(AlgebraError):
    code = "NotInverses"


class NotGenerating(AlgebraError):
    code = "NotGenerating"


class Unsupported(AlgebraError):
    code = "Unsupported"


ERROR_CODES = tuple(
    cls.code
    for cls in (
        RingMismatch, NotUnimodular, NotAUnit, DimensionMismatch, RowTooShort,
        BudgetExceeded, ModuleMismatch, IdealChainViolation, NotInverses,
        NotGenerating, Unsupported,
    )
)
