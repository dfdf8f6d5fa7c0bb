# Expose main classes and version
from .bounds import (
    concave_bound,
    constants,
    deterministic_bihari,
    random_A_check_values,
    remark34_pair,
    thm38_expected_G_rhs,
    thm38iv_rhs,
)
from .exceptions import (
    ArgumentError,
    BihariError,
    CoefficientError,
    ConfigError,
    DomainError,
    NumericError,
    ProbeWarning,
)
from .objects import (
    BoundResult,
    CadlagPath,
    EtaSpec,
    IncreasingProcess,
    LevyConfig,
    McReport,
    QuadrupleConfig,
    VerifyConfig,
)
from .transform import GTransform, eval_eta, eval_eta_p, probe_monotone_concave
from .utils import NEG_INF, POS_INF, ext_to_display

__version__ = "0.1.0"
CONFIG_SCHEMA_VERSION = "1"

__all__ = [
    # Data models
    "BoundResult",
    "CadlagPath",
    "EtaSpec",
    "IncreasingProcess",
    "LevyConfig",
    "McReport",
    "QuadrupleConfig",
    "VerifyConfig",
    # Transform
    "GTransform",
    "eval_eta",
    "eval_eta_p",
    "probe_monotone_concave",
    # Bounds
    "concave_bound",
    "constants",
    "deterministic_bihari",
    "random_A_check_values",
    "remark34_pair",
    "thm38_expected_G_rhs",
    "thm38iv_rhs",
    # Exceptions
    "ArgumentError",
    "BihariError",
    "CoefficientError",
    "ConfigError",
    "DomainError",
    "NumericError",
    "ProbeWarning",
    # Utilities
    "NEG_INF",
    "POS_INF",
    "ext_to_display",
    # Version
    "CONFIG_SCHEMA_VERSION",
    "__version__",
]
