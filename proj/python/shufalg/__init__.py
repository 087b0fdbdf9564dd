from ._shufalg import (
    Context,
    FreeElement,
    ShuffleElement,
    check_ybe,
    in_bold_S,
    in_cal_S,
    is_good,
    is_integral_rational,
    kostant_partitions,
    parse,
    roots,
    specialize,
    suite_names,
    verify,
)

__all__ = [
    "Context",
    "FreeElement",
    "ShuffleElement",
    "check_ybe",
    "in_bold_S",
    "in_cal_S",
    "is_good",
    "is_integral_rational",
    "kostant_partitions",
    "parse",
    "roots",
    "specialize",
    "suite_names",
    "verify",
]
