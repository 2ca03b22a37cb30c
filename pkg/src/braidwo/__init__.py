from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("braidwo")
except PackageNotFoundError:
    __version__ = "0.0.0+unknown"
del version, PackageNotFoundError

__all__ = [
    "__version__",
]

from .config import WorkbenchConfig, get_config, load_config, set_config
from .errors import (
    BraidwoError,
    BudgetExhausted,
    CapExceededError,
    NotSpecialError,
)
from .outcomes import (
    ABOVE_CUTOFF,
    EXHAUSTED,
    ExperimentOutcome,
    ExponentConvention,
    FundamentalVariant,
    Inconclusive,
    OrderResult,
    ThetaConvention,
)

# The following import orders MUST NOT be changed in order to avoid circular imports.

# isort: off

from . import ordinals
from . import braid
from . import special
from . import hydra
from . import divisors
from . import wo
from . import serialization

# isort: on

from .braid import ExpSeq, compare, normalize, parse_expseq, parse_word
from .ordinals import Ordinal, hardy, parse_ordinal
