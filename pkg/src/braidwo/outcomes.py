from enum import Enum


class OrderResult(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_keys(cls, a, b) -> "OrderResult":
        if a < b:
            return cls.LESS
        elif a == b:
            return cls.EQUAL
        else:
            return cls.GREATER

    def flipped(self) -> "OrderResult":
        return OrderResult(-self.value)


class Inconclusive(Enum):
    EXHAUSTED = "exhausted"
    ABOVE_CUTOFF = "above_cutoff"
    NONE = "none"


EXHAUSTED = Inconclusive.EXHAUSTED
ABOVE_CUTOFF = Inconclusive.ABOVE_CUTOFF
NONE = Inconclusive.NONE


class FundamentalVariant(Enum):
    STANDARD = "standard"
    BRAID = "braid"


class ExperimentOutcome(Enum):
    TRUE_MAX = "TRUE_MAX"
    LOWER_BOUND = "LOWER_BOUND"


class ThetaConvention(Enum):
    MIRROR_EXACT = "mirror-exact"
    LITERAL = "literal"


class ExponentConvention(Enum):
    N_MINUS_3 = "n-3"
    N_MINUS_2 = "n-2"


def get_available_enum_values(enum_cls):
    return [v.value for v in enum_cls]
