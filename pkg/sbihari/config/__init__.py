"""Code tables and JSON config loading for sbihari.

The loader (`sbihari.config.loader`) and the structural validator
(`sbihari.config.validator`) are imported from their modules; this package
only re-exports the code tables, which the data models depend on.
"""

from .codes import (
    CHECK_CODES,
    ETA_DEFAULT_PARAMS,
    HCASE_CODES,
    MODEL_PRESETS,
    VARIANT_CODES,
    eta_flags,
    get_hcase,
    get_supported_eta_kinds,
    get_variant,
    is_check_supported,
    is_eta_kind_supported,
)

__all__ = [
    "CHECK_CODES",
    "ETA_DEFAULT_PARAMS",
    "HCASE_CODES",
    "MODEL_PRESETS",
    "VARIANT_CODES",
    "eta_flags",
    "get_hcase",
    "get_supported_eta_kinds",
    "get_variant",
    "is_check_supported",
    "is_eta_kind_supported",
]
