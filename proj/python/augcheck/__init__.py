from ._augcheck import (
    AugcheckError,
    check,
    construct,
    green_summary,
    matrix_rank,
    __version__,
)

__all__ = [
    "AugcheckError",
    "check",
    "construct",
    "green_summary",
    "matrix_rank",
    "__version__",
]
