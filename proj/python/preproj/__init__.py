"""Higher preprojective algebras of quiver algebras with relations.

Every function takes the text of a presentation file (see the README) and
returns a Report: ``report["key"]``, ``report.entries``, ``report.text()``.
"""

from pathlib import Path

from ._core import (
    ParseError,
    Report,
    TruncationError,
    certify,
    classify,
    compute,
    dual,
    graded_dims,
    jacobi,
    normalize,
    resolve,
    typea,
    verify_jacobi,
)


def load(path):
    """Read a presentation file."""
    return Path(path).read_text()


__all__ = [
    "ParseError",
    "Report",
    "TruncationError",
    "certify",
    "classify",
    "compute",
    "dual",
    "graded_dims",
    "jacobi",
    "load",
    "normalize",
    "resolve",
    "typea",
    "verify_jacobi",
]
