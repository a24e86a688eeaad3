"""Exact quasi-elliptic cohomology of finite groups."""

from qellpy._core import (
    CapExceeded,
    Element,
    Group,
    ParseError,
    QellError,
    check_axioms,
    power_total,
    quotient_and_match,
)

__all__ = [
    "CapExceeded",
    "Element",
    "Group",
    "ParseError",
    "QellError",
    "check_axioms",
    "power_total",
    "quotient_and_match",
]
