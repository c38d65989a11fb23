"""Exception types.  Each carries a short machine-readable ``code``."""


class GradedRhamError(Exception):
    code = "error"


class ParseError(GradedRhamError):
    code = "parse_error"

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class NonHomogeneousRelation(GradedRhamError):
    code = "non_homogeneous_relation"


class WeightZeroInfinite(GradedRhamError):
    code = "weight_zero_infinite"


class NotStabilized(GradedRhamError):
    code = "not_stabilized"


class WindowTooSmall(GradedRhamError):
    code = "window_too_small"


class WeightMismatch(GradedRhamError):
    code = "weight_mismatch"


class NotAComplex(GradedRhamError):
    code = "not_a_complex"

    def __init__(self, message, index=None, witness=None):
        super().__init__(message)
        self.index = index
        self.witness = witness


class UnitNotInvertible(GradedRhamError):
    code = "unit_not_invertible"


class NotACocycle(GradedRhamError):
    code = "not_a_cocycle"


class NotInAugmentationIdeal(GradedRhamError):
    code = "not_in_augmentation_ideal"


class Inconclusive(GradedRhamError):
    code = "inconclusive"
