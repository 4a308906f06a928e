"""Exception hierarchy.

Every domain error carries a stable ``code`` so the CLI can emit a
machine-readable error object without inspecting class names.
"""


class InjSpecError(Exception):
    code = "InjSpecError"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        out = {"error": self.code, "message": str(self)}
        if self.details:
            out["details"] = self.details
        return out


class DimensionMismatch(InjSpecError):
    code = "DimensionMismatch"


class ZeroPolynomial(InjSpecError):
    code = "ZeroPolynomial"


class CapExceeded(InjSpecError):
    code = "CapExceeded"


class BackendMismatch(InjSpecError):
    code = "BackendMismatch"


class ZeroModule(InjSpecError):
    code = "ZeroModule"


class InvalidSeries(InjSpecError):
    code = "InvalidSeries"


class UnknownPoint(InjSpecError):
    code = "UnknownPoint"


class NotSupportedForBackend(InjSpecError):
    code = "NotSupportedForBackend"


class NoPrimeSubmodule(InjSpecError):
    code = "NoPrimeSubmodule"


class NotInSpec(InjSpecError):
    code = "NotInSpec"


class PointNotInSubspace(InjSpecError):
    code = "PointNotInSubspace"


class InhomogeneousRelation(InjSpecError):
    code = "InhomogeneousRelation"


class InvalidAlgebra(InjSpecError):
    code = "InvalidAlgebra"


class InvalidModule(InjSpecError):
    code = "InvalidModule"


class DimensionTooDeep(InjSpecError):
    code = "DimensionTooDeep"


class InternalAssertionFailed(InjSpecError):
    code = "InternalAssertionFailed"
